#ifndef REARR_DOMAIN_HPP
#define REARR_DOMAIN_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rearr/expr.hpp"
#include "rearr/grid.hpp"
#include "rearr/multi_index.hpp"

namespace rearr {

/// A bounded set Omega with negligible boundary, given by a bounding
/// rectangle and a membership predicate. Boundary behaviour is whatever the
/// indicator decides; the built-ins use closed sets. Connectivity is declared
/// metadata (it matters for endpoint probes in convergence studies), never
/// computed.
class RegularSet {
  public:
    using Indicator = std::function<bool(std::span<const double>)>;

    RegularSet(Rectangle bounding, Indicator inside, std::optional<double> exact_measure,
               std::string label, bool declared_connected = false);

    int dim() const { return bounding_.dim(); }
    const Rectangle& bounding() const { return bounding_; }
    bool contains(std::span<const double> x) const { return inside_(x); }
    const std::optional<double>& exact_measure() const { return exact_measure_; }
    const std::string& label() const { return label_; }
    bool declared_connected() const { return connected_; }

  private:
    Rectangle bounding_;
    Indicator inside_;
    std::optional<double> exact_measure_;
    std::string label_;
    bool connected_;
};

// Built-in sets. Measures are exact where a closed form exists.
RegularSet make_rectangle_set(const Rectangle& r);
RegularSet make_disk(Point center, double radius);
RegularSet make_annulus(Point center, double inner_radius, double outer_radius);
/// Rectangle with its upper corner block (mid,b]^d removed; the classic
/// L-shape for d=2.
RegularSet make_l_shape(const Rectangle& r);

RegularSet set_union(const RegularSet& a, const RegularSet& b);
RegularSet set_intersection(const RegularSet& a, const RegularSet& b);
RegularSet set_difference(const RegularSet& a, const RegularSet& b);

/// Indicator from an expression: inside <=> field(x) > 0.
RegularSet make_expression_set(ScalarField indicator_field, Rectangle bounding, std::string label,
                               bool declared_connected = false);

/// I_n(Omega): indices of grid points inside the set, in lexicographic order.
std::vector<MultiIndex> indices_in(const Grid& grid, const RegularSet& set);

/// Inside count of grid points (streaming; does not materialize the grid).
std::int64_t count_inside(const GridSpec& spec, const RegularSet& set);

/// volume(bounding) * (inside count) / N(resolution) over a midpoint grid.
double estimate_measure(const RegularSet& set, const MultiIndex& resolution);

} // namespace rearr

#endif
