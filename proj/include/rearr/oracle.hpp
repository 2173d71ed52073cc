#ifndef REARR_ORACLE_HPP
#define REARR_ORACLE_HPP

#include <vector>

#include "rearr/domain.hpp"
#include "rearr/expr.hpp"
#include "rearr/multi_index.hpp"

namespace rearr {

/// Tabulated empirical distribution function of f over a midpoint counting
/// grid: F(u_k) = #{in-domain points with f <= u_k} / #{in-domain points}.
/// Thresholds are strictly increasing and cover the sampled values, so the
/// last tabulated value is 1.
struct DistributionEstimate {
    std::vector<double> thresholds;
    std::vector<double> values;
    MultiIndex resolution;
};

/// Thresholds default to the distinct sampled values, which makes the
/// tabulation exact for the sampled multiset.
DistributionEstimate empirical_cdf(const ScalarField& f, const RegularSet& set,
                                   const MultiIndex& resolution);
DistributionEstimate empirical_cdf(const ScalarField& f, const RegularSet& set,
                                   const MultiIndex& resolution, std::vector<double> thresholds);

/// Smallest tabulated u_k with F(u_k) >= y; the generalized inverse at
/// tabulation scale. Requires 0 < y <= 1.
double generalized_inverse(const DistributionEstimate& cdf, double y);

/// empirical_cdf with default thresholds composed with generalized_inverse.
/// This is the brute-force reference for the rearrangement approximants.
double oracle_quantile(const ScalarField& f, const RegularSet& set, double y,
                       const MultiIndex& resolution);

/// Default counting resolution: 4096 per dimension, capped so the total grid
/// stays below 2^24 points.
MultiIndex default_oracle_resolution(int dimension);

} // namespace rearr

#endif
