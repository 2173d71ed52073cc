#include "rearr/diagnostics.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "rearr/error.hpp"

namespace rearr {

namespace {

void validate_probes(std::span<const double> probes) {
    if (probes.empty()) throw error(errc::config, "probe list must be non-empty");
    for (double y : probes)
        if (!(y >= 0.0 && y <= 1.0))
            throw error(errc::config, "probes must lie in [0,1]");
}

double simpson_unit(const std::function<double(double)>& g, int subintervals) {
    if (subintervals < 2 || subintervals % 2 != 0)
        throw error(errc::config, "Simpson quadrature needs an even subinterval count >= 2");
    const double h = 1.0 / static_cast<double>(subintervals);
    double sum = g(0.0) + g(1.0);
    for (int k = 1; k < subintervals; ++k)
        sum += (k % 2 == 1 ? 4.0 : 2.0) * g(static_cast<double>(k) * h);
    return sum * h / 3.0;
}

} // namespace

std::vector<double> default_probes() {
    std::vector<double> probes;
    for (int k = 1; k <= 19; ++k) probes.push_back(static_cast<double>(k) * 0.05);
    return probes;
}

ConvergenceReport convergence_study(const ScalarField& f, const RegularSet& set,
                                    const Rectangle& rect, std::span<const MultiIndex> n_list,
                                    Placement placement, std::optional<std::uint64_t> seed,
                                    std::span<const double> probes,
                                    const MultiIndex& oracle_resolution) {
    if (n_list.empty()) throw error(errc::config, "n list must be non-empty");
    validate_probes(probes);
    for (std::size_t k = 1; k < n_list.size(); ++k)
        if (!(product_count(n_list[k - 1]) < product_count(n_list[k])))
            throw error(errc::config, "n list must be strictly increasing in N(n)");

    const DistributionEstimate cdf = empirical_cdf(f, set, oracle_resolution);
    std::vector<double> oracle_values;
    oracle_values.reserve(probes.size());
    for (double y : probes)
        oracle_values.push_back(y == 0.0 ? cdf.thresholds.front() : generalized_inverse(cdf, y));

    ConvergenceReport report;
    report.probes.assign(probes.begin(), probes.end());
    for (const MultiIndex& n : n_list) {
        ConvergenceRecord record;
        record.n = n;
        const auto start = std::chrono::steady_clock::now();
        try {
            const RearrangementSpline spline = rearrange_pipeline(f, set, rect, n, placement, seed);
            record.omega = spline.omega();
            for (std::size_t k = 0; k < probes.size(); ++k) {
                const double sv = spline(probes[k]);
                const double ov = oracle_values[k];
                const double err = std::abs(sv - ov);
                record.probes.push_back(ProbeRecord{probes[k], sv, ov, err});
                record.sup_error = std::max(record.sup_error, err);
            }
        } catch (const error& e) {
            record.failure = std::string(errc_name(e.code())) + ": " + e.what();
            record.probes.clear();
            record.sup_error = std::numeric_limits<double>::quiet_NaN();
        }
        record.runtime_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.records.push_back(std::move(record));
    }
    return report;
}

double HatFunction::operator()(double u) const {
    return std::max(0.0, 1.0 - std::abs(u - center) / width);
}

std::vector<HatFunction> hat_family(int count, double width, double lo, double hi) {
    if (count < 1) throw error(errc::config, "hat family needs at least one member");
    if (!(width > 0.0) || !(lo < hi)) throw error(errc::config, "invalid hat family parameters");
    std::vector<HatFunction> family;
    const double step = (hi - lo) / static_cast<double>(count + 1);
    for (int k = 1; k <= count; ++k)
        family.push_back(HatFunction{lo + static_cast<double>(k) * step, width});
    return family;
}

double equimeasurability_check(const SampleVector& samples, const TestFunction& rearrangement,
                               std::span<const TestFunction> family, int quadrature_points) {
    if (family.empty()) throw error(errc::config, "test-function family must be non-empty");
    double worst = 0.0;
    for (const TestFunction& F : family) {
        double grid_side = 0.0;
        for (double s : samples.values) grid_side += F(s);
        grid_side /= static_cast<double>(samples.values.size());
        const double integral_side =
            simpson_unit([&](double y) { return F(rearrangement(y)); }, quadrature_points);
        worst = std::max(worst, std::abs(grid_side - integral_side));
    }
    return worst;
}

double equimeasurability_check(const RearrangementSpline& spline,
                               std::span<const HatFunction> family, int quadrature_points) {
    std::vector<TestFunction> functions;
    functions.reserve(family.size());
    for (const HatFunction& hat : family) functions.emplace_back(hat);
    return equimeasurability_check(
        spline.samples(), [&spline](double y) { return spline(y); }, functions, quadrature_points);
}

double riemann_sum_check(const ScalarField& f, const Grid& grid, const Rectangle& rect,
                         double reference_integral) {
    if (!(grid.spec().rect == rect))
        throw error(errc::config, "riemann_sum_check rectangle does not match the grid");
    double sum = 0.0;
    for (std::int64_t k = 0; k < grid.size(); ++k) sum += f(grid.point(k));
    const double mean = sum / static_cast<double>(grid.size());
    return std::abs(mean - reference_integral / rect.volume());
}

GridFraction grid_fraction_check(const Grid& grid, const RegularSet& set) {
    const std::int64_t inside = count_inside(grid.spec(), set);
    const double fraction = static_cast<double>(inside) / static_cast<double>(grid.size());
    double measure;
    if (set.exact_measure()) {
        measure = *set.exact_measure();
    } else {
        MultiIndex resolution = grid.spec().n;
        for (int j = 0; j < resolution.dim(); ++j) resolution[j] *= 4;
        measure = estimate_measure(set, resolution);
    }
    const double target = measure / grid.spec().rect.volume();
    return GridFraction{fraction, target, std::abs(fraction - target)};
}

CounterexampleReport dirichlet_counterexample(std::span<const MultiIndex> n_list,
                                              std::span<const double> probes) {
    if (n_list.empty()) throw error(errc::config, "n list must be non-empty");
    validate_probes(probes);
    for (const MultiIndex& n : n_list)
        if (n.dim() != 1) throw error(errc::config, "the counterexample runs on [0,1] (d = 1)");

    const ScalarField marker = ScalarField::dirichlet_marker(1);
    const Rectangle unit({0.0}, {1.0});
    const RegularSet domain = make_rectangle_set(unit);

    CounterexampleReport report;
    report.probes.assign(probes.begin(), probes.end());
    for (const MultiIndex& n : n_list) {
        const RearrangementSpline spline =
            rearrange_pipeline(marker, domain, unit, n, Placement::reference);
        CounterexampleRecord record;
        record.n = n;
        record.omega = spline.omega();
        record.probe_count = static_cast<int>(probes.size());
        for (double y : probes) {
            const double v = spline(y);
            record.max_deviation_from_one = std::max(record.max_deviation_from_one, std::abs(v - 1.0));
            const double gap = std::abs(v - 0.0); // a.e. rearrangement of the sampled function
            record.gap_to_reference = std::max(record.gap_to_reference, gap);
            if (gap >= 0.5) ++record.nonconverged_probes;
        }
        report.records.push_back(std::move(record));
    }
    return report;
}

CounterexampleReport dirichlet_counterexample(std::span<const MultiIndex> n_list) {
    const std::vector<double> probes = default_probes();
    return dirichlet_counterexample(n_list, probes);
}

} // namespace rearr
