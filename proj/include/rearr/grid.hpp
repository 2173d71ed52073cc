#ifndef REARR_GRID_HPP
#define REARR_GRID_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rearr/multi_index.hpp"

namespace rearr {

using Point = std::vector<double>;

/// Closed axis-aligned rectangle [a,b] in R^d.
struct Rectangle {
    Point a;
    Point b;

    Rectangle(Point a_, Point b_);

    int dim() const { return static_cast<int>(a.size()); }
    double volume() const;
    double width(int j) const { return b[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(j)]; }
    bool contains(std::span<const double> x) const;
    bool operator==(const Rectangle& other) const = default;
    std::string to_string() const;
};

enum class Placement { reference, midpoint, jittered, corner };

Placement placement_from_string(const std::string& name);
std::string to_string(Placement p);

/// Jitter amplitude as a fraction of half the cell width. Keeping it below 1
/// keeps every jittered point inside its own cell, so the grid stays a
/// standard-partition selection.
inline constexpr double kJitterFraction = 0.9;

struct GridSpec {
    Rectangle rect;
    MultiIndex n;
    Placement placement = Placement::reference;
    std::optional<std::uint64_t> seed;

    /// Provenance string, e.g. "rect=[0,1]x[0,1];n=2x2;placement=midpoint".
    std::string digest() const;
};

/// N(n) points in lexicographic index order, stored flat (d doubles per point).
class Grid {
  public:
    Grid(GridSpec spec, std::vector<double> coords);

    const GridSpec& spec() const { return spec_; }
    int dim() const { return spec_.rect.dim(); }
    std::int64_t size() const { return static_cast<std::int64_t>(coords_.size()) / dim(); }
    std::span<const double> point(std::int64_t k) const {
        return std::span<const double>(coords_.data() + k * dim(), static_cast<std::size_t>(dim()));
    }
    IndexRange index_range() const;

  private:
    GridSpec spec_;
    std::vector<double> coords_;
};

/// Closed cell [a+(i-1)(b-a)/n, a+i(b-a)/n] of the standard partition.
/// Throws invalid-index unless 1 <= i <= n.
Rectangle cell(const Rectangle& rect, const MultiIndex& n, const MultiIndex& i);

/// Point of the grid at index i, computed on demand (no grid materialization).
void grid_point_at(const GridSpec& spec, const MultiIndex& i, std::span<double> out);
Point grid_point(const GridSpec& spec, const MultiIndex& i);

Grid generate(const GridSpec& spec);

/// max-norm deviation of the grid from the reference nodes a + i(b-a)/n.
/// Exactly 0 for reference placement.
double au_deviation(const Grid& grid);

} // namespace rearr

#endif
