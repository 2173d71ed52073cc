#include "rearr/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "rearr/csv.hpp"
#include "rearr/diagnostics.hpp"
#include "rearr/oracle.hpp"
#include "rearr/rearrange.hpp"

namespace rearr {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',' || c == 'x' || c == ';') c = ' ';
    std::istringstream in(normalized);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_real(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw error(errc::config, "invalid " + what + " value '" + text + "'");
    }
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw error(errc::config, "invalid " + what + " value '" + text + "'");
    return v;
}

Rectangle parse_rect(const std::string& text) {
    const std::vector<std::string> tokens = split_tokens(text);
    if (tokens.empty() || tokens.size() % 2 != 0)
        throw error(errc::config, "rect needs 2d numbers: a_1..a_d b_1..b_d");
    const std::size_t d = tokens.size() / 2;
    Point a, b;
    for (std::size_t j = 0; j < d; ++j) a.push_back(parse_real(tokens[j], "rect"));
    for (std::size_t j = d; j < 2 * d; ++j) b.push_back(parse_real(tokens[j], "rect"));
    return Rectangle(std::move(a), std::move(b));
}

std::vector<MultiIndex> parse_n_list(const std::string& text) {
    std::vector<MultiIndex> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        part = trim(part);
        if (!part.empty()) out.push_back(parse_multi_index(part));
    }
    if (out.empty()) throw error(errc::config, "n_list must contain at least one entry");
    return out;
}

void write_text_file(const fs::path& path, const std::string& content, bool quiet) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::config, "cannot open output file " + path.string());
    out << content;
    if (!quiet) std::cout << "wrote " << path.string() << "\n";
}

fs::path prepare_out_dir(const RunConfig& config) {
    fs::path dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw error(errc::config, "cannot create output directory " + dir.string());
    return dir;
}

int require_dimension(const RunConfig& config) {
    if (config.dimension < 1) throw error(errc::config, "dimension must be set and >= 1");
    return config.dimension;
}

Rectangle resolve_rect(const RunConfig& config, const RegularSet& set) {
    if (config.rect) {
        if (config.rect->dim() != set.dim())
            throw error(errc::config, "rect dimension does not match the domain");
        return *config.rect;
    }
    return set.bounding();
}

MultiIndex resolve_oracle_resolution(const RunConfig& config, int dimension) {
    if (config.oracle_resolution) {
        if (config.oracle_resolution->dim() != dimension)
            throw error(errc::config, "oracle resolution dimension mismatch");
        return *config.oracle_resolution;
    }
    return default_oracle_resolution(dimension);
}

std::vector<double> resolve_probes(const RunConfig& config) {
    return config.probes.empty() ? default_probes() : config.probes;
}

json multi_index_json(const MultiIndex& n) {
    json out = json::array();
    for (int j = 0; j < n.dim(); ++j) out.push_back(n[j]);
    return out;
}

} // namespace

MultiIndex parse_multi_index(const std::string& text) {
    const std::vector<std::string> tokens = split_tokens(text);
    if (tokens.empty()) throw error(errc::config, "empty multi-index");
    std::vector<std::int64_t> entries;
    for (const std::string& tok : tokens) entries.push_back(parse_int(tok, "index"));
    return MultiIndex(std::move(entries));
}

std::vector<double> parse_probe_list(const std::string& text) {
    const std::vector<std::string> tokens = split_tokens(text);
    std::vector<double> probes;
    for (const std::string& tok : tokens) probes.push_back(parse_real(tok, "probe"));
    if (probes.empty()) throw error(errc::config, "probe list must be non-empty");
    return probes;
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "dimension") {
        config.dimension = static_cast<int>(parse_int(value, "dimension"));
    } else if (key == "field") {
        config.field_text = value;
    } else if (key == "domain") {
        config.domain_text = value;
    } else if (key == "rect") {
        config.rect = parse_rect(value);
    } else if (key == "n") {
        config.n = parse_multi_index(value);
    } else if (key == "n_list") {
        config.n_list = parse_n_list(value);
    } else if (key == "placement") {
        config.placement = placement_from_string(value);
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_int(value, "seed"));
    } else if (key == "probes") {
        config.probes = parse_probe_list(value);
    } else if (key == "oracle_resolution") {
        config.oracle_resolution = parse_multi_index(value);
    } else if (key == "reference_integral") {
        config.reference_integral = parse_real(value, "reference_integral");
    } else if (key == "quadrature_points") {
        config.quadrature_points = static_cast<int>(parse_int(value, "quadrature_points"));
    } else if (key == "out") {
        config.out_dir = value;
    } else {
        throw error(errc::config, "unknown configuration key '" + key + "'");
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::config, "cannot open config file " + path);
    RunConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw error(errc::config,
                        path + ":" + std::to_string(line_no) + ": expected key = value");
        apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

ScalarField make_field(const RunConfig& config) {
    const int d = require_dimension(config);
    const std::string text = trim(config.field_text);
    if (text.empty()) throw error(errc::config, "field must be set");
    if (text == "identity") return ScalarField::identity(d);
    if (text == "dirichlet_marker" || text == "dirichlet") return ScalarField::dirichlet_marker(d);
    if (text.starts_with("constant:"))
        return ScalarField::constant(parse_real(text.substr(9), "constant"), d);
    return ScalarField::expression(text, d);
}

RegularSet make_domain(const RunConfig& config) {
    const int d = require_dimension(config);
    const std::string text = trim(config.domain_text);
    if (text.empty()) throw error(errc::config, "domain must be set");

    std::istringstream in(text);
    std::string head;
    in >> head;
    std::vector<double> params;
    std::string tok;
    bool numeric_params = true;
    while (in >> tok) {
        try {
            params.push_back(parse_real(tok, "domain parameter"));
        } catch (const error&) {
            numeric_params = false;
            break;
        }
    }

    if (numeric_params && head == "rectangle") {
        if (static_cast<int>(params.size()) != 2 * d)
            throw error(errc::config, "rectangle domain needs 2d parameters");
        return make_rectangle_set(Rectangle(Point(params.begin(), params.begin() + d),
                                            Point(params.begin() + d, params.end())));
    }
    if (numeric_params && head == "disk") {
        if (static_cast<int>(params.size()) != d + 1)
            throw error(errc::config, "disk domain needs d center coordinates and a radius");
        return make_disk(Point(params.begin(), params.begin() + d), params.back());
    }
    if (numeric_params && head == "annulus") {
        if (static_cast<int>(params.size()) != d + 2)
            throw error(errc::config, "annulus domain needs d center coordinates and two radii");
        return make_annulus(Point(params.begin(), params.begin() + d), params[params.size() - 2],
                            params.back());
    }
    if (numeric_params && (head == "lshape" || head == "l-shape")) {
        if (static_cast<int>(params.size()) != 2 * d)
            throw error(errc::config, "lshape domain needs 2d parameters");
        return make_l_shape(Rectangle(Point(params.begin(), params.begin() + d),
                                      Point(params.begin() + d, params.end())));
    }

    // anything else is an indicator expression; inside <=> value > 0
    if (!config.rect)
        throw error(errc::config, "expression domains require an explicit rect");
    return make_expression_set(ScalarField::expression(text, d), *config.rect,
                               "expr " + text);
}

int run_rearrange(const RunConfig& config) {
    if (!config.n) throw error(errc::config, "rearrange requires n");
    const ScalarField f = make_field(config);
    const RegularSet set = make_domain(config);
    const Rectangle rect = resolve_rect(config, set);
    const GridSpec spec{rect, *config.n, config.placement, config.seed};
    const Grid grid = generate(spec);
    const SampleVector samples = sample_sort(f, grid, set);
    const RearrangementSpline spline{samples};
    const StepRearrangement step{samples};

    const fs::path dir = prepare_out_dir(config);
    std::ostringstream spline_csv, step_csv;
    write_spline_csv(spline_csv, spline);
    write_step_csv(step_csv, step);
    write_text_file(dir / "spline.csv", spline_csv.str(), config.quiet);
    write_text_file(dir / "step.csv", step_csv.str(), config.quiet);

    json meta;
    meta["omega"] = samples.omega();
    meta["in_count"] = samples.omega() + 1;
    meta["grid_fraction"] =
        static_cast<double>(samples.omega() + 1) / static_cast<double>(grid.size());
    meta["au_deviation"] = au_deviation(grid);
    meta["n"] = multi_index_json(*config.n);
    meta["placement"] = to_string(config.placement);
    if (config.seed) meta["seed"] = *config.seed;
    meta["dimension"] = config.dimension;
    meta["field"] = f.description();
    meta["domain"] = set.label();
    write_text_file(dir / "rearrange_meta.json", meta.dump(2) + "\n", config.quiet);
    return 0;
}

int run_converge(const RunConfig& config) {
    if (config.counterexample) return run_counterexample(config);
    if (config.n_list.empty()) throw error(errc::config, "converge requires n_list");
    const ScalarField f = make_field(config);
    const RegularSet set = make_domain(config);
    const Rectangle rect = resolve_rect(config, set);
    const std::vector<double> probes = resolve_probes(config);

    MultiIndex oracle_res = config.dimension >= 1 ? MultiIndex::ones(config.dimension)
                                                  : MultiIndex{1};
    if (config.oracle_resolution) {
        oracle_res = resolve_oracle_resolution(config, config.dimension);
    } else {
        // default: 8x the largest tested n, so oracle error stays negligible
        for (const MultiIndex& n : config.n_list) {
            if (n.dim() != config.dimension)
                throw error(errc::config, "n_list dimension does not match the configuration");
            for (int j = 0; j < n.dim(); ++j) oracle_res[j] = std::max(oracle_res[j], 8 * n[j]);
        }
    }

    const ConvergenceReport report = convergence_study(f, set, rect, config.n_list,
                                                       config.placement, config.seed, probes,
                                                       oracle_res);

    const fs::path dir = prepare_out_dir(config);
    std::ostringstream csv;
    write_convergence_csv(csv, report);
    write_text_file(dir / "convergence.csv", csv.str(), config.quiet);

    json summary;
    summary["oracle_resolution"] = multi_index_json(oracle_res);
    summary["records"] = json::array();
    json timings;
    timings["records"] = json::array();
    for (const ConvergenceRecord& record : report.records) {
        json rec;
        rec["n"] = multi_index_json(record.n);
        rec["omega"] = record.omega;
        if (record.failure)
            rec["failure"] = *record.failure;
        else
            rec["sup_error"] = record.sup_error;
        summary["records"].push_back(rec);
        json timing;
        timing["n"] = multi_index_json(record.n);
        timing["runtime_seconds"] = record.runtime_seconds;
        timings["records"].push_back(timing);
    }
    write_text_file(dir / "convergence_summary.json", summary.dump(2) + "\n", config.quiet);
    // wall-clock timings live apart so every other artifact stays reproducible
    write_text_file(dir / "timings.json", timings.dump(2) + "\n", config.quiet);
    return 0;
}

int run_oracle(const RunConfig& config) {
    const ScalarField f = make_field(config);
    const RegularSet set = make_domain(config);
    const MultiIndex resolution = resolve_oracle_resolution(config, config.dimension);
    const std::vector<double> probes = resolve_probes(config);

    const DistributionEstimate cdf = empirical_cdf(f, set, resolution);
    std::vector<double> values;
    values.reserve(probes.size());
    for (double y : probes)
        values.push_back(y == 0.0 ? cdf.thresholds.front() : generalized_inverse(cdf, y));

    const fs::path dir = prepare_out_dir(config);
    std::ostringstream cdf_csv, quant_csv;
    write_cdf_csv(cdf_csv, cdf);
    write_quantiles_csv(quant_csv, probes, values);
    write_text_file(dir / "cdf.csv", cdf_csv.str(), config.quiet);
    write_text_file(dir / "quantiles.csv", quant_csv.str(), config.quiet);
    return 0;
}

int run_check(const RunConfig& config) {
    if (!config.n) throw error(errc::config, "check requires n");
    const ScalarField f = make_field(config);
    const RegularSet set = make_domain(config);
    const Rectangle rect = resolve_rect(config, set);
    const GridSpec spec{rect, *config.n, config.placement, config.seed};
    const Grid grid = generate(spec);

    const SampleVector samples = sample_sort(f, grid, set);
    const RearrangementSpline spline{samples};
    const double lo = samples.values.front();
    const double hi = samples.values.back();
    double equi = 0.0;
    if (hi > lo) {
        const std::vector<HatFunction> family = hat_family(9, 0.25 * (hi - lo), lo, hi);
        equi = equimeasurability_check(spline, family, config.quadrature_points);
    }

    double reference_integral;
    std::string reference_source;
    if (config.reference_integral) {
        reference_integral = *config.reference_integral;
        reference_source = "config";
    } else {
        // midpoint quadrature over the rectangle at 4x the grid resolution
        MultiIndex quad_n = *config.n;
        for (int j = 0; j < quad_n.dim(); ++j) quad_n[j] *= 4;
        const GridSpec quad_spec{rect, quad_n, Placement::midpoint, std::nullopt};
        Point buf(static_cast<std::size_t>(rect.dim()));
        double sum = 0.0;
        for (const MultiIndex& i : IndexRange(MultiIndex::ones(quad_n.dim()), quad_n)) {
            grid_point_at(quad_spec, i, buf);
            sum += f(buf);
        }
        reference_integral = rect.volume() * sum / static_cast<double>(product_count(quad_n));
        reference_source = "midpoint quadrature at 4x n";
    }
    const double riemann_gap = riemann_sum_check(f, grid, rect, reference_integral);
    const GridFraction fraction = grid_fraction_check(grid, set);

    json out;
    out["equimeasurability_discrepancy"] = equi;
    out["quadrature_points"] = config.quadrature_points;
    out["riemann_gap"] = riemann_gap;
    out["reference_integral"] = reference_integral;
    out["reference_integral_source"] = reference_source;
    out["grid_fraction"] = fraction.fraction;
    out["fraction_target"] = fraction.target;
    out["fraction_gap"] = fraction.gap;
    out["n"] = multi_index_json(*config.n);
    out["omega"] = samples.omega();
    const fs::path dir = prepare_out_dir(config);
    write_text_file(dir / "checks.json", out.dump(2) + "\n", config.quiet);
    return 0;
}

int run_counterexample(const RunConfig& config) {
    std::vector<MultiIndex> n_list = config.n_list;
    if (n_list.empty() && config.n) n_list.push_back(*config.n);
    if (n_list.empty()) {
        n_list.push_back(MultiIndex{100});
        n_list.push_back(MultiIndex{10000});
    }
    const std::vector<double> probes = resolve_probes(config);
    const CounterexampleReport report = dirichlet_counterexample(n_list, probes);

    const fs::path dir = prepare_out_dir(config);
    std::ostringstream csv;
    write_counterexample_csv(csv, report);
    write_text_file(dir / "counterexample.csv", csv.str(), config.quiet);

    json out;
    out["records"] = json::array();
    bool nonconvergence_everywhere = true;
    for (const CounterexampleRecord& record : report.records) {
        json rec;
        rec["n"] = multi_index_json(record.n);
        rec["omega"] = record.omega;
        rec["max_deviation_from_one"] = record.max_deviation_from_one;
        rec["gap_to_reference"] = record.gap_to_reference;
        rec["nonconverged_probes"] = record.nonconverged_probes;
        rec["probe_count"] = record.probe_count;
        out["records"].push_back(rec);
        if (record.nonconverged_probes != record.probe_count) nonconvergence_everywhere = false;
    }
    out["nonconvergence_at_every_probe"] = nonconvergence_everywhere;
    write_text_file(dir / "counterexample.json", out.dump(2) + "\n", config.quiet);
    return 0;
}

int exit_code_for(const error& e) { return e.numerical() ? 2 : 1; }

} // namespace rearr
