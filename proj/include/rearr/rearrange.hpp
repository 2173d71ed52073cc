#ifndef REARR_REARRANGE_HPP
#define REARR_REARRANGE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rearr/domain.hpp"
#include "rearr/expr.hpp"
#include "rearr/grid.hpp"

namespace rearr {

/// Sorted samples (s_0 <= ... <= s_omega) of f over the in-domain grid
/// points, with omega = #I_n(Omega) - 1 >= 1.
struct SampleVector {
    std::vector<double> values;
    std::string grid_digest;
    std::string domain_label;

    std::int64_t omega() const { return static_cast<std::int64_t>(values.size()) - 1; }
};

/// Evaluates f at the grid points inside the set and sorts non-decreasingly.
/// Throws insufficient-samples if fewer than two points fall inside;
/// evaluation errors carry the offending point.
SampleVector sample_sort(const ScalarField& f, const Grid& grid, const RegularSet& set);

/// The rearrangement approximant: the continuous piecewise-linear function on
/// [0,1] with value s_l at node l/omega. Non-decreasing by construction;
/// evaluation at an exact node abscissa returns the knot value with no
/// interpolation arithmetic.
class RearrangementSpline {
  public:
    explicit RearrangementSpline(SampleVector samples);

    double operator()(double y) const;
    const SampleVector& samples() const { return samples_; }
    std::int64_t omega() const { return samples_.omega(); }

  private:
    SampleVector samples_;
};

/// The left-continuous step variant: value s_i on (i/(omega+1), (i+1)/(omega+1)],
/// extended by s_0 at y = 0.
class StepRearrangement {
  public:
    explicit StepRearrangement(SampleVector samples);

    double operator()(double y) const;
    const SampleVector& samples() const { return samples_; }
    std::int64_t omega() const { return samples_.omega(); }

  private:
    SampleVector samples_;
};

/// generate -> indices_in -> sample_sort -> spline.
RearrangementSpline rearrange_pipeline(const ScalarField& f, const RegularSet& set,
                                       const Rectangle& rect, const MultiIndex& n,
                                       Placement placement,
                                       std::optional<std::uint64_t> seed = std::nullopt);

} // namespace rearr

#endif
