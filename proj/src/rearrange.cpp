#include "rearr/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rearr/error.hpp"

namespace rearr {

namespace {

void validate_samples(const SampleVector& samples) {
    if (samples.values.size() < 2)
        throw error(errc::insufficient_samples,
                    "rearrangement requires at least two in-domain samples (omega >= 1)");
    for (std::size_t l = 1; l < samples.values.size(); ++l)
        if (samples.values[l - 1] > samples.values[l])
            throw error(errc::config, "sample vector is not sorted non-decreasingly");
}

void check_unit_interval(double y) {
    if (!(y >= 0.0 && y <= 1.0))
        throw error(errc::range, "evaluation point must lie in [0,1]");
}

std::string point_to_string(std::span<const double> x) {
    std::string out = "(";
    char buf[40];
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j > 0) out += ", ";
        std::snprintf(buf, sizeof(buf), "%.17g", x[j]);
        out += buf;
    }
    return out + ")";
}

} // namespace

SampleVector sample_sort(const ScalarField& f, const Grid& grid, const RegularSet& set) {
    if (f.dimension() != grid.dim())
        throw error(errc::config, "field and grid have different dimensions");
    const std::vector<MultiIndex> inside = indices_in(grid, set);
    if (inside.size() < 2)
        throw error(errc::insufficient_samples,
                    "only " + std::to_string(inside.size()) +
                        " grid point(s) inside the domain; need at least 2");

    const IndexRange range = grid.index_range();
    std::vector<double> values;
    values.reserve(inside.size());
    for (const MultiIndex& i : inside) {
        const std::span<const double> x = grid.point(range.rank(i));
        try {
            values.push_back(f(x));
        } catch (const error& e) {
            if (e.code() == errc::evaluation)
                throw error(errc::evaluation, std::string(e.what()) + " at point " + point_to_string(x));
            throw;
        }
    }
    std::stable_sort(values.begin(), values.end());
    return SampleVector{std::move(values), grid.spec().digest(), set.label()};
}

RearrangementSpline::RearrangementSpline(SampleVector samples) : samples_(std::move(samples)) {
    validate_samples(samples_);
}

double RearrangementSpline::operator()(double y) const {
    check_unit_interval(y);
    const std::vector<double>& s = samples_.values;
    const std::int64_t omega = samples_.omega();
    const double w = static_cast<double>(omega);

    const double t = y * w;
    std::int64_t l = static_cast<std::int64_t>(std::floor(t));
    if (l < 0) l = 0;
    if (l >= omega) return s[static_cast<std::size_t>(omega)];

    // exact node hits return the knot value untouched
    if (y == static_cast<double>(l) / w) return s[static_cast<std::size_t>(l)];
    if (y == static_cast<double>(l + 1) / w) return s[static_cast<std::size_t>(l + 1)];

    const double frac = t - static_cast<double>(l);
    const double lo = s[static_cast<std::size_t>(l)];
    return lo + frac * (s[static_cast<std::size_t>(l + 1)] - lo);
}

StepRearrangement::StepRearrangement(SampleVector samples) : samples_(std::move(samples)) {
    validate_samples(samples_);
}

double StepRearrangement::operator()(double y) const {
    check_unit_interval(y);
    const std::vector<double>& s = samples_.values;
    const std::int64_t omega = samples_.omega();
    if (y == 0.0) return s[0];

    const double m = static_cast<double>(omega + 1);
    std::int64_t i = static_cast<std::int64_t>(std::ceil(y * m)) - 1;
    if (i < 0) i = 0;
    if (i > omega) i = omega;
    // settle half-open boundaries (i/m, (i+1)/m] exactly
    while (i > 0 && y <= static_cast<double>(i) / m) --i;
    while (i < omega && y > static_cast<double>(i + 1) / m) ++i;
    return s[static_cast<std::size_t>(i)];
}

RearrangementSpline rearrange_pipeline(const ScalarField& f, const RegularSet& set,
                                       const Rectangle& rect, const MultiIndex& n,
                                       Placement placement, std::optional<std::uint64_t> seed) {
    const Grid grid = generate(GridSpec{rect, n, placement, seed});
    return RearrangementSpline(sample_sort(f, grid, set));
}

} // namespace rearr
