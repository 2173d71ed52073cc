#ifndef REARR_DIAGNOSTICS_HPP
#define REARR_DIAGNOSTICS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rearr/domain.hpp"
#include "rearr/expr.hpp"
#include "rearr/grid.hpp"
#include "rearr/multi_index.hpp"
#include "rearr/oracle.hpp"
#include "rearr/rearrange.hpp"

namespace rearr {

struct ProbeRecord {
    double y;
    double spline_value;
    double oracle_value;
    double abs_error;
};

struct ConvergenceRecord {
    MultiIndex n;
    std::int64_t omega = 0;
    std::vector<ProbeRecord> probes;
    double sup_error = 0.0;
    double runtime_seconds = 0.0;
    std::optional<std::string> failure; // set when this n failed; other n still run
};

struct ConvergenceReport {
    std::vector<ConvergenceRecord> records;
    std::vector<double> probes;
};

/// {0.05, 0.10, ..., 0.95}. Endpoints are excluded by default because
/// pointwise convergence is guaranteed only at continuity points in (0,1);
/// callers add 0 and 1 for bounded continuous fields on connected domains.
std::vector<double> default_probes();

/// Builds the spline per n and compares it against the counting oracle at the
/// probes. The oracle is built once at oracle_resolution, which should exceed
/// the largest n by a comfortable factor (8x by convention) so its own error
/// is negligible.
ConvergenceReport convergence_study(const ScalarField& f, const RegularSet& set,
                                    const Rectangle& rect, std::span<const MultiIndex> n_list,
                                    Placement placement, std::optional<std::uint64_t> seed,
                                    std::span<const double> probes,
                                    const MultiIndex& oracle_resolution);

/// u -> max(0, 1 - |u - center| / width)
struct HatFunction {
    double center;
    double width;
    double operator()(double u) const;
};

/// count hats with centers evenly spaced strictly inside [lo, hi].
std::vector<HatFunction> hat_family(int count, double width, double lo = 0.0, double hi = 1.0);

using TestFunction = std::function<double(double)>;

/// max over the family of |(1/(omega+1)) sum_l F(s_l) - int_0^1 F(g(y)) dy|
/// with the integral by composite Simpson. The grid-side sum over f(x_i)
/// equals the sample-side sum because sorting does not change it.
/// quadrature_points is the (even, >= 2) number of Simpson subintervals.
double equimeasurability_check(const SampleVector& samples, const TestFunction& rearrangement,
                               std::span<const TestFunction> family, int quadrature_points);
double equimeasurability_check(const RearrangementSpline& spline,
                               std::span<const HatFunction> family, int quadrature_points);

/// |(1/N(n)) sum_i f(x_i) - reference_integral / volume(rect)| over all grid
/// points of the rectangle.
double riemann_sum_check(const ScalarField& f, const Grid& grid, const Rectangle& rect,
                         double reference_integral);

struct GridFraction {
    double fraction; // #I_n(Omega) / N(n)
    double target;   // mu_d(Omega) / mu_d([a,b])
    double gap;
};

/// Uses exact_measure when present, otherwise a midpoint estimate at 4x the
/// grid resolution.
GridFraction grid_fraction_check(const Grid& grid, const RegularSet& set);

struct CounterexampleRecord {
    MultiIndex n;
    std::int64_t omega = 0;
    double max_deviation_from_one = 0.0; // spline vs the constant 1 it samples
    double gap_to_reference = 0.0;       // spline vs the a.e. rearrangement (0)
    int nonconverged_probes = 0;
    int probe_count = 0;
};

struct CounterexampleReport {
    std::vector<CounterexampleRecord> records;
    std::vector<double> probes;
};

/// Runs the pipeline with dirichlet_marker on [0,1] with reference grids. The
/// spline is identically 1 for every n while the function it samples is 0
/// a.e., so the gap to the reference rearrangement stays 1 at every probe.
CounterexampleReport dirichlet_counterexample(std::span<const MultiIndex> n_list,
                                              std::span<const double> probes);
CounterexampleReport dirichlet_counterexample(std::span<const MultiIndex> n_list);

} // namespace rearr

#endif
