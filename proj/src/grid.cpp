#include "rearr/grid.hpp"

#include <cmath>
#include <cstdio>

#include "rearr/error.hpp"

namespace rearr {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform draw in the open interval (0,1), keyed by (seed, i, coordinate).
double jitter_unit(std::uint64_t seed, const MultiIndex& i, int coordinate) {
    std::uint64_t state = splitmix64(seed);
    for (int j = 0; j < i.dim(); ++j)
        state = splitmix64(state ^ static_cast<std::uint64_t>(i[j]));
    state = splitmix64(state ^ static_cast<std::uint64_t>(coordinate));
    return (static_cast<double>(state >> 11) + 0.5) * 0x1.0p-53;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void validate_spec(const GridSpec& spec) {
    if (spec.rect.dim() != spec.n.dim())
        throw error(errc::config, "grid rectangle and n have different dimensions");
    for (int j = 0; j < spec.n.dim(); ++j)
        if (spec.n[j] < 1)
            throw error(errc::config, "grid requires n >= 1, got " + spec.n.to_string());
    if (spec.placement == Placement::jittered && !spec.seed)
        throw error(errc::config, "jittered placement requires a seed");
}

} // namespace

Rectangle::Rectangle(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.empty() || a.size() != b.size())
        throw error(errc::config, "rectangle bounds must be non-empty and of equal dimension");
    for (std::size_t j = 0; j < a.size(); ++j)
        if (!(a[j] <= b[j]))
            throw error(errc::config, "rectangle requires a <= b componentwise");
}

double Rectangle::volume() const {
    double v = 1.0;
    for (int j = 0; j < dim(); ++j) v *= width(j);
    return v;
}

bool Rectangle::contains(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim()) return false;
    for (int j = 0; j < dim(); ++j)
        if (x[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(j)] ||
            x[static_cast<std::size_t>(j)] > b[static_cast<std::size_t>(j)])
            return false;
    return true;
}

std::string Rectangle::to_string() const {
    std::string out;
    for (int j = 0; j < dim(); ++j) {
        if (j > 0) out += 'x';
        out += '[' + format_number(a[static_cast<std::size_t>(j)]) + ',' +
               format_number(b[static_cast<std::size_t>(j)]) + ']';
    }
    return out;
}

Placement placement_from_string(const std::string& name) {
    if (name == "reference") return Placement::reference;
    if (name == "midpoint") return Placement::midpoint;
    if (name == "jittered") return Placement::jittered;
    if (name == "corner") return Placement::corner;
    throw error(errc::config, "unknown placement '" + name + "'");
}

std::string to_string(Placement p) {
    switch (p) {
        case Placement::reference: return "reference";
        case Placement::midpoint: return "midpoint";
        case Placement::jittered: return "jittered";
        case Placement::corner: return "corner";
    }
    return "?";
}

std::string GridSpec::digest() const {
    std::string out = "rect=" + rect.to_string() + ";n=" + n.to_string() +
                      ";placement=" + rearr::to_string(placement);
    if (seed) out += ";seed=" + std::to_string(*seed);
    return out;
}

Grid::Grid(GridSpec spec, std::vector<double> coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
    validate_spec(spec_);
    if (static_cast<std::int64_t>(coords_.size()) != product_count(spec_.n) * spec_.rect.dim())
        throw error(errc::config, "grid point data does not match N(n) points");
}

IndexRange Grid::index_range() const {
    return IndexRange(MultiIndex::ones(spec_.n.dim()), spec_.n);
}

Rectangle cell(const Rectangle& rect, const MultiIndex& n, const MultiIndex& i) {
    if (rect.dim() != n.dim() || n.dim() != i.dim())
        throw error(errc::invalid_index, "cell: dimension mismatch");
    for (int j = 0; j < n.dim(); ++j)
        if (i[j] < 1 || i[j] > n[j])
            throw error(errc::invalid_index,
                        "cell index " + i.to_string() + " outside 1.." + n.to_string());
    Point lo(static_cast<std::size_t>(rect.dim()));
    Point hi(static_cast<std::size_t>(rect.dim()));
    for (int j = 0; j < rect.dim(); ++j) {
        const double w = rect.width(j) / static_cast<double>(n[j]);
        lo[static_cast<std::size_t>(j)] = rect.a[static_cast<std::size_t>(j)] + static_cast<double>(i[j] - 1) * w;
        hi[static_cast<std::size_t>(j)] = rect.a[static_cast<std::size_t>(j)] + static_cast<double>(i[j]) * w;
    }
    return Rectangle(std::move(lo), std::move(hi));
}

void grid_point_at(const GridSpec& spec, const MultiIndex& i, std::span<double> out) {
    const Rectangle& r = spec.rect;
    for (int j = 0; j < r.dim(); ++j) {
        const double w = r.width(j) / static_cast<double>(spec.n[j]);
        const double aj = r.a[static_cast<std::size_t>(j)];
        double x;
        switch (spec.placement) {
            case Placement::reference:
                x = aj + static_cast<double>(i[j]) * w;
                break;
            case Placement::midpoint:
                x = aj + (static_cast<double>(i[j]) - 0.5) * w;
                break;
            case Placement::corner:
                x = aj + static_cast<double>(i[j] - 1) * w;
                break;
            case Placement::jittered: {
                const double u = jitter_unit(*spec.seed, i, j);
                x = aj + (static_cast<double>(i[j]) - 0.5) * w +
                    (2.0 * u - 1.0) * 0.5 * kJitterFraction * w;
                break;
            }
        }
        out[static_cast<std::size_t>(j)] = x;
    }
}

Point grid_point(const GridSpec& spec, const MultiIndex& i) {
    Point out(static_cast<std::size_t>(spec.rect.dim()));
    grid_point_at(spec, i, out);
    return out;
}

Grid generate(const GridSpec& spec) {
    validate_spec(spec);
    const int d = spec.rect.dim();
    const std::int64_t total = product_count(spec.n);
    std::vector<double> coords(static_cast<std::size_t>(total * d));
    IndexRange range(MultiIndex::ones(d), spec.n);
    std::int64_t k = 0;
    for (const MultiIndex& i : range) {
        grid_point_at(spec, i, std::span<double>(coords.data() + k * d, static_cast<std::size_t>(d)));
        ++k;
    }
    return Grid(spec, std::move(coords));
}

double au_deviation(const Grid& grid) {
    const GridSpec& spec = grid.spec();
    const int d = grid.dim();
    double dev = 0.0;
    std::int64_t k = 0;
    for (const MultiIndex& i : grid.index_range()) {
        const std::span<const double> x = grid.point(k++);
        for (int j = 0; j < d; ++j) {
            // same arithmetic as reference placement, so reference grids give exactly 0
            const double w = spec.rect.width(j) / static_cast<double>(spec.n[j]);
            const double ref = spec.rect.a[static_cast<std::size_t>(j)] + static_cast<double>(i[j]) * w;
            dev = std::max(dev, std::abs(x[static_cast<std::size_t>(j)] - ref));
        }
    }
    return dev;
}

} // namespace rearr
