#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rearr/cli.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    std::string n;
    std::string n_list;
    std::string placement;
    std::string seed;
    std::string probes;
    std::string oracle_res;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "flat key = value configuration file");
    cmd->add_option("--out", flags.out_dir, "output directory (default .)");
    cmd->add_option("--n", flags.n, "grid subdivisions, e.g. 1000 or 256x256");
    cmd->add_option("--n-list", flags.n_list, "semicolon-separated n values, e.g. '16x16; 64x64'");
    cmd->add_option("--placement", flags.placement, "reference | midpoint | jittered | corner");
    cmd->add_option("--seed", flags.seed, "64-bit seed (required for jittered placement)");
    cmd->add_option("--probes", flags.probes, "probe list in [0,1], e.g. '0.1 0.5 0.9'");
    cmd->add_option("--oracle-res", flags.oracle_res, "counting-grid resolution for the oracle");
    cmd->add_flag("--quiet", flags.quiet, "suppress progress output");
}

rearr::RunConfig build_config(const CommonFlags& flags) {
    rearr::RunConfig config;
    if (!flags.config_path.empty()) config = rearr::load_config(flags.config_path);
    if (!flags.out_dir.empty()) rearr::apply_setting(config, "out", flags.out_dir);
    if (!flags.n.empty()) rearr::apply_setting(config, "n", flags.n);
    if (!flags.n_list.empty()) rearr::apply_setting(config, "n_list", flags.n_list);
    if (!flags.placement.empty()) rearr::apply_setting(config, "placement", flags.placement);
    if (!flags.seed.empty()) rearr::apply_setting(config, "seed", flags.seed);
    if (!flags.probes.empty()) rearr::apply_setting(config, "probes", flags.probes);
    if (!flags.oracle_res.empty()) rearr::apply_setting(config, "oracle_resolution", flags.oracle_res);
    if (flags.quiet) config.quiet = true;
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monotone rearrangement toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;
    bool counterexample_flag = false;

    CLI::App* cmd_rearrange =
        app.add_subcommand("rearrange", "sample, sort, and write the rearrangement spline");
    CLI::App* cmd_converge =
        app.add_subcommand("converge", "convergence study of the spline against the oracle");
    cmd_converge->add_flag("--counterexample", counterexample_flag,
                           "run the Dirichlet non-convergence report instead");
    CLI::App* cmd_oracle =
        app.add_subcommand("oracle", "tabulate the empirical CDF and its generalized inverse");
    CLI::App* cmd_check =
        app.add_subcommand("check", "equimeasurability, Riemann-sum, and grid-fraction checks");
    CLI::App* cmd_counter =
        app.add_subcommand("counterexample", "Dirichlet-function non-convergence report");

    for (CLI::App* cmd : {cmd_rearrange, cmd_converge, cmd_oracle, cmd_check, cmd_counter})
        add_common(cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: config: " << e.what() << "\n";
        return 1;
    }

    try {
        rearr::RunConfig config = build_config(flags);
        config.counterexample = counterexample_flag;
        if (cmd_rearrange->parsed()) return rearr::run_rearrange(config);
        if (cmd_converge->parsed()) return rearr::run_converge(config);
        if (cmd_oracle->parsed()) return rearr::run_oracle(config);
        if (cmd_check->parsed()) return rearr::run_check(config);
        if (cmd_counter->parsed()) return rearr::run_counterexample(config);
    } catch (const rearr::error& e) {
        std::cerr << "error: " << rearr::errc_name(e.code()) << ": " << e.what() << "\n";
        return rearr::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
