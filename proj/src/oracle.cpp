#include "rearr/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "rearr/error.hpp"

namespace rearr {

namespace {

// Sorted in-domain samples of f over the midpoint counting grid.
std::vector<double> counting_samples(const ScalarField& f, const RegularSet& set,
                                     const MultiIndex& resolution) {
    if (f.dimension() != set.dim())
        throw error(errc::config, "field and set have different dimensions");
    if (resolution.dim() != set.dim())
        throw error(errc::config, "counting resolution dimension does not match the set");
    const GridSpec spec{set.bounding(), resolution, Placement::midpoint, std::nullopt};
    const int d = set.dim();
    Point buf(static_cast<std::size_t>(d));
    std::vector<double> values;
    for (const MultiIndex& i : IndexRange(MultiIndex::ones(d), resolution)) {
        grid_point_at(spec, i, buf);
        if (set.contains(buf)) values.push_back(f(buf));
    }
    if (values.empty())
        throw error(errc::insufficient_samples, "no counting-grid points inside the domain");
    std::sort(values.begin(), values.end());
    return values;
}

DistributionEstimate tabulate(std::vector<double> sorted_samples, std::vector<double> thresholds,
                              const MultiIndex& resolution) {
    const double total = static_cast<double>(sorted_samples.size());
    std::vector<double> values;
    values.reserve(thresholds.size());
    for (double u : thresholds) {
        const auto it = std::upper_bound(sorted_samples.begin(), sorted_samples.end(), u);
        values.push_back(static_cast<double>(it - sorted_samples.begin()) / total);
    }
    return DistributionEstimate{std::move(thresholds), std::move(values), resolution};
}

} // namespace

DistributionEstimate empirical_cdf(const ScalarField& f, const RegularSet& set,
                                   const MultiIndex& resolution) {
    std::vector<double> samples = counting_samples(f, set, resolution);
    std::vector<double> distinct(samples);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return tabulate(std::move(samples), std::move(distinct), resolution);
}

DistributionEstimate empirical_cdf(const ScalarField& f, const RegularSet& set,
                                   const MultiIndex& resolution, std::vector<double> thresholds) {
    if (thresholds.empty()) throw error(errc::config, "thresholds must be non-empty");
    for (std::size_t k = 1; k < thresholds.size(); ++k)
        if (!(thresholds[k - 1] < thresholds[k]))
            throw error(errc::config, "thresholds must be strictly increasing");
    std::vector<double> samples = counting_samples(f, set, resolution);
    if (thresholds.front() > samples.front() || thresholds.back() < samples.back())
        throw error(errc::config, "thresholds must cover [min, max] of the sampled values");
    return tabulate(std::move(samples), std::move(thresholds), resolution);
}

double generalized_inverse(const DistributionEstimate& cdf, double y) {
    if (!(y > 0.0 && y <= 1.0))
        throw error(errc::range, "generalized inverse requires 0 < y <= 1");
    const auto it = std::lower_bound(cdf.values.begin(), cdf.values.end(), y);
    if (it == cdf.values.end())
        throw error(errc::config, "tabulated distribution does not reach 1");
    return cdf.thresholds[static_cast<std::size_t>(it - cdf.values.begin())];
}

double oracle_quantile(const ScalarField& f, const RegularSet& set, double y,
                       const MultiIndex& resolution) {
    return generalized_inverse(empirical_cdf(f, set, resolution), y);
}

MultiIndex default_oracle_resolution(int dimension) {
    if (dimension < 1) throw error(errc::config, "dimension must be >= 1");
    const int bits = 24 / dimension;
    const std::int64_t per_dim = std::min<std::int64_t>(4096, std::int64_t{1} << bits);
    return MultiIndex::filled(dimension, std::max<std::int64_t>(per_dim, 1));
}

} // namespace rearr
