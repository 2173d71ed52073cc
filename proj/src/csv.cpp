#include "rearr/csv.hpp"

#include <cstdio>

namespace rearr {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_grid_csv(std::ostream& out, const Grid& grid) {
    const int d = grid.dim();
    for (int j = 1; j <= d; ++j) out << "i_" << j << ',';
    for (int j = 1; j <= d; ++j) out << "x_" << j << (j < d ? "," : "\n");
    std::int64_t k = 0;
    for (const MultiIndex& i : grid.index_range()) {
        for (int j = 0; j < d; ++j) out << i[j] << ',';
        const std::span<const double> x = grid.point(k++);
        for (int j = 0; j < d; ++j)
            out << format_double(x[static_cast<std::size_t>(j)]) << (j < d - 1 ? "," : "\n");
    }
}

void write_spline_csv(std::ostream& out, const RearrangementSpline& s) {
    out << "l,y,s\n";
    const std::int64_t omega = s.omega();
    for (std::int64_t l = 0; l <= omega; ++l) {
        const double y = static_cast<double>(l) / static_cast<double>(omega);
        out << l << ',' << format_double(y) << ','
            << format_double(s.samples().values[static_cast<std::size_t>(l)]) << '\n';
    }
}

void write_step_csv(std::ostream& out, const StepRearrangement& s) {
    out << "i,y_lo,y_hi,s\n";
    const std::int64_t omega = s.omega();
    const double m = static_cast<double>(omega + 1);
    for (std::int64_t i = 0; i <= omega; ++i) {
        out << i << ',' << format_double(static_cast<double>(i) / m) << ','
            << format_double(static_cast<double>(i + 1) / m) << ','
            << format_double(s.samples().values[static_cast<std::size_t>(i)]) << '\n';
    }
}

void write_cdf_csv(std::ostream& out, const DistributionEstimate& cdf) {
    out << "u,F\n";
    for (std::size_t k = 0; k < cdf.thresholds.size(); ++k)
        out << format_double(cdf.thresholds[k]) << ',' << format_double(cdf.values[k]) << '\n';
}

void write_quantiles_csv(std::ostream& out, std::span<const double> probes,
                         std::span<const double> values) {
    out << "y,value\n";
    for (std::size_t k = 0; k < probes.size(); ++k)
        out << format_double(probes[k]) << ',' << format_double(values[k]) << '\n';
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report) {
    out << "n,omega,y,spline,oracle,abs_error\n";
    for (const ConvergenceRecord& record : report.records) {
        if (record.failure) {
            out << record.n.to_string() << ',' << record.omega << ",,,,\n";
            continue;
        }
        for (const ProbeRecord& p : record.probes)
            out << record.n.to_string() << ',' << record.omega << ',' << format_double(p.y) << ','
                << format_double(p.spline_value) << ',' << format_double(p.oracle_value) << ','
                << format_double(p.abs_error) << '\n';
    }
}

void write_counterexample_csv(std::ostream& out, const CounterexampleReport& report) {
    out << "n,omega,max_deviation_from_one,gap_to_reference,nonconverged_probes,probe_count\n";
    for (const CounterexampleRecord& record : report.records)
        out << record.n.to_string() << ',' << record.omega << ','
            << format_double(record.max_deviation_from_one) << ','
            << format_double(record.gap_to_reference) << ',' << record.nonconverged_probes << ','
            << record.probe_count << '\n';
}

} // namespace rearr
