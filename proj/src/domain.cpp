#include "rearr/domain.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "rearr/error.hpp"

namespace rearr {

namespace {

double ball_volume(int dim, double radius) {
    // mu_d of the d-ball: pi^(d/2) r^d / Gamma(d/2 + 1)
    const double d = static_cast<double>(dim);
    return std::pow(std::numbers::pi, d / 2.0) * std::pow(radius, d) / std::tgamma(d / 2.0 + 1.0);
}

double sq_distance(std::span<const double> x, const Point& center) {
    double s = 0.0;
    for (std::size_t j = 0; j < center.size(); ++j) {
        const double t = x[j] - center[j];
        s += t * t;
    }
    return s;
}

Rectangle hull(const Rectangle& r1, const Rectangle& r2) {
    if (r1.dim() != r2.dim())
        throw error(errc::config, "set combinators require equal dimensions");
    Point a(r1.a), b(r1.b);
    for (std::size_t j = 0; j < a.size(); ++j) {
        a[j] = std::min(a[j], r2.a[j]);
        b[j] = std::max(b[j], r2.b[j]);
    }
    return Rectangle(std::move(a), std::move(b));
}

} // namespace

RegularSet::RegularSet(Rectangle bounding, Indicator inside, std::optional<double> exact_measure,
                       std::string label, bool declared_connected)
    : bounding_(std::move(bounding)),
      inside_(std::move(inside)),
      exact_measure_(exact_measure),
      label_(std::move(label)),
      connected_(declared_connected) {
    if (!inside_) throw error(errc::config, "regular set requires an indicator");
    if (exact_measure_ && !(*exact_measure_ > 0.0 && *exact_measure_ <= bounding_.volume() * (1.0 + 1e-12)))
        throw error(errc::config, "exact measure must lie in (0, volume(bounding)]");
}

RegularSet make_rectangle_set(const Rectangle& r) {
    return RegularSet(
        r, [r](std::span<const double> x) { return r.contains(x); }, r.volume(),
        "rectangle " + r.to_string(), true);
}

RegularSet make_disk(Point center, double radius) {
    if (radius <= 0.0) throw error(errc::config, "disk radius must be positive");
    Point a(center), b(center);
    for (std::size_t j = 0; j < center.size(); ++j) {
        a[j] -= radius;
        b[j] += radius;
    }
    const double r2 = radius * radius;
    return RegularSet(
        Rectangle(std::move(a), std::move(b)),
        [center, r2](std::span<const double> x) { return sq_distance(x, center) <= r2; },
        ball_volume(static_cast<int>(center.size()), radius), "disk", true);
}

RegularSet make_annulus(Point center, double inner_radius, double outer_radius) {
    if (!(0.0 < inner_radius && inner_radius < outer_radius))
        throw error(errc::config, "annulus requires 0 < inner radius < outer radius");
    Point a(center), b(center);
    for (std::size_t j = 0; j < center.size(); ++j) {
        a[j] -= outer_radius;
        b[j] += outer_radius;
    }
    const int d = static_cast<int>(center.size());
    const double lo2 = inner_radius * inner_radius;
    const double hi2 = outer_radius * outer_radius;
    // connected for d >= 2; two segments for d = 1
    return RegularSet(
        Rectangle(std::move(a), std::move(b)),
        [center, lo2, hi2](std::span<const double> x) {
            const double s = sq_distance(x, center);
            return lo2 <= s && s <= hi2;
        },
        ball_volume(d, outer_radius) - ball_volume(d, inner_radius), "annulus", d >= 2);
}

RegularSet make_l_shape(const Rectangle& r) {
    Point mid(r.a);
    for (std::size_t j = 0; j < mid.size(); ++j) mid[j] = 0.5 * (r.a[j] + r.b[j]);
    const double notch = r.volume() / std::pow(2.0, r.dim());
    return RegularSet(
        r,
        [r, mid](std::span<const double> x) {
            if (!r.contains(x)) return false;
            for (std::size_t j = 0; j < mid.size(); ++j)
                if (x[j] <= mid[j]) return true; // outside the open corner block
            return false;
        },
        r.volume() - notch, "l-shape " + r.to_string(), true);
}

RegularSet set_union(const RegularSet& a, const RegularSet& b) {
    auto ia = std::make_shared<RegularSet>(a);
    auto ib = std::make_shared<RegularSet>(b);
    return RegularSet(
        hull(a.bounding(), b.bounding()),
        [ia, ib](std::span<const double> x) { return ia->contains(x) || ib->contains(x); },
        std::nullopt, "union(" + a.label() + ", " + b.label() + ")");
}

RegularSet set_intersection(const RegularSet& a, const RegularSet& b) {
    auto ia = std::make_shared<RegularSet>(a);
    auto ib = std::make_shared<RegularSet>(b);
    return RegularSet(
        hull(a.bounding(), b.bounding()),
        [ia, ib](std::span<const double> x) { return ia->contains(x) && ib->contains(x); },
        std::nullopt, "intersection(" + a.label() + ", " + b.label() + ")");
}

RegularSet set_difference(const RegularSet& a, const RegularSet& b) {
    auto ia = std::make_shared<RegularSet>(a);
    auto ib = std::make_shared<RegularSet>(b);
    return RegularSet(
        a.bounding(),
        [ia, ib](std::span<const double> x) { return ia->contains(x) && !ib->contains(x); },
        std::nullopt, "difference(" + a.label() + ", " + b.label() + ")");
}

RegularSet make_expression_set(ScalarField indicator_field, Rectangle bounding, std::string label,
                               bool declared_connected) {
    if (indicator_field.dimension() != bounding.dim())
        throw error(errc::config, "indicator expression dimension does not match bounding rectangle");
    auto field = std::make_shared<ScalarField>(std::move(indicator_field));
    return RegularSet(
        std::move(bounding),
        [field](std::span<const double> x) { return (*field)(x) > 0.0; }, std::nullopt,
        std::move(label), declared_connected);
}

std::vector<MultiIndex> indices_in(const Grid& grid, const RegularSet& set) {
    if (grid.dim() != set.dim())
        throw error(errc::config, "grid and set have different dimensions");
    std::vector<MultiIndex> inside;
    std::int64_t k = 0;
    for (const MultiIndex& i : grid.index_range()) {
        const std::span<const double> x = grid.point(k++);
        if (set.contains(x)) {
            if (!grid.spec().rect.contains(x))
                throw error(errc::config,
                            "in-domain grid point outside the grid rectangle; Omega must be "
                            "contained in [a,b]");
            inside.push_back(i);
        }
    }
    return inside;
}

std::int64_t count_inside(const GridSpec& spec, const RegularSet& set) {
    if (spec.rect.dim() != set.dim())
        throw error(errc::config, "grid and set have different dimensions");
    const int d = spec.rect.dim();
    Point buf(static_cast<std::size_t>(d));
    std::int64_t count = 0;
    IndexRange range(MultiIndex::ones(d), spec.n);
    for (const MultiIndex& i : range) {
        grid_point_at(spec, i, buf);
        if (set.contains(buf)) ++count;
    }
    return count;
}

double estimate_measure(const RegularSet& set, const MultiIndex& resolution) {
    GridSpec spec{set.bounding(), resolution, Placement::midpoint, std::nullopt};
    const std::int64_t inside = count_inside(spec, set);
    return set.bounding().volume() * static_cast<double>(inside) /
           static_cast<double>(product_count(resolution));
}

} // namespace rearr
