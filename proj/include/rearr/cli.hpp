#ifndef REARR_CLI_HPP
#define REARR_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rearr/domain.hpp"
#include "rearr/error.hpp"
#include "rearr/expr.hpp"
#include "rearr/grid.hpp"
#include "rearr/multi_index.hpp"

namespace rearr {

/// Flat run configuration: a key=value file plus command-line overrides.
struct RunConfig {
    int dimension = 0;
    std::string field_text;
    std::string domain_text;
    std::optional<Rectangle> rect;
    std::optional<MultiIndex> n;
    std::vector<MultiIndex> n_list;
    Placement placement = Placement::reference;
    std::optional<std::uint64_t> seed;
    std::vector<double> probes; // empty -> default_probes()
    std::optional<MultiIndex> oracle_resolution;
    std::optional<double> reference_integral;
    int quadrature_points = 2048;
    std::string out_dir = ".";
    bool counterexample = false;
    bool quiet = false;
};

RunConfig load_config(const std::string& path);
/// Applies one "key=value" setting; used both by the file loader and by
/// command-line overrides. Throws error(config) for unknown keys/bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

MultiIndex parse_multi_index(const std::string& text);
std::vector<double> parse_probe_list(const std::string& text);

ScalarField make_field(const RunConfig& config);
RegularSet make_domain(const RunConfig& config);

// Command entry points. Each writes its artifact files under config.out_dir
// and returns 0; rearr::error propagates to the caller for exit-code mapping.
int run_rearrange(const RunConfig& config);
int run_converge(const RunConfig& config);
int run_oracle(const RunConfig& config);
int run_check(const RunConfig& config);
int run_counterexample(const RunConfig& config);

/// 1 for configuration-type errors, 2 for numerical ones.
int exit_code_for(const error& e);

} // namespace rearr

#endif
