#ifndef REARR_CSV_HPP
#define REARR_CSV_HPP

#include <ostream>
#include <span>
#include <string>

#include "rearr/diagnostics.hpp"
#include "rearr/grid.hpp"
#include "rearr/oracle.hpp"
#include "rearr/rearrange.hpp"

namespace rearr {

/// All CSV output carries a header row and fixed 17-significant-digit
/// formatting, so identical inputs give byte-identical files.
std::string format_double(double v);

void write_grid_csv(std::ostream& out, const Grid& grid);              // i_1..i_d, x_1..x_d
void write_spline_csv(std::ostream& out, const RearrangementSpline& s); // l, y, s
void write_step_csv(std::ostream& out, const StepRearrangement& s);    // i, y_lo, y_hi, s
void write_cdf_csv(std::ostream& out, const DistributionEstimate& cdf); // u, F
void write_quantiles_csv(std::ostream& out, std::span<const double> probes,
                         std::span<const double> values);               // y, value
void write_convergence_csv(std::ostream& out, const ConvergenceReport& report);
void write_counterexample_csv(std::ostream& out, const CounterexampleReport& report);

} // namespace rearr

#endif
