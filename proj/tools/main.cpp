#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using groverlab::cli::RunConfig;

struct SubOpts {
    std::vector<std::string> phases;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t m_max = 0;
    std::int64_t grid = 0;
    std::string engine, format, out, config_path, figure;
    double tol = 0.0;
    double match_tol = 0.0;
    std::vector<std::string> pairs;

    CLI::Option* phases_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* m_max_opt = nullptr;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* engine_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* config_opt = nullptr;
    CLI::Option* figure_opt = nullptr;
    CLI::Option* tol_opt = nullptr;
    CLI::Option* match_tol_opt = nullptr;
    CLI::Option* pairs_opt = nullptr;
};

void add_common_options(CLI::App* sub, SubOpts& o) {
    o.phases_opt = sub->add_option("--phases", o.phases,
                                   "theta1 theta2 phi1 phi2 in radians; pi literals "
                                   "such as pi, 1.7pi, pi/2 are accepted")
                       ->expected(4);
    o.n_opt = sub->add_option("--n", o.n, "database size N");
    o.m_opt = sub->add_option("--m", o.m, "marked item count M");
    o.m_max_opt = sub->add_option("--m-max", o.m_max, "largest iteration count in a sweep");
    o.engine_opt = sub->add_option("--engine", o.engine, "evolution engine: reduced|full")
                       ->check(CLI::IsMember({"reduced", "full"}));
    o.format_opt = sub->add_option("--format", o.format, "output format: csv|json")
                       ->check(CLI::IsMember({"csv", "json"}));
    o.out_opt = sub->add_option("--out", o.out,
                                "output file (stdout when absent); a <out>.meta.json "
                                "sidecar records the resolved config");
    o.config_opt = sub->add_option("--config", o.config_path,
                                   "JSON run config to start from; explicit flags win");
    o.tol_opt = sub->add_option("--tol", o.tol, "cross-validation tolerance");
    o.match_tol_opt = sub->add_option("--match-tol", o.match_tol,
                                      "tolerance on |alpha*delta - beta*gamma|");
}

RunConfig build_config(groverlab::cli::Command command, const SubOpts& o) {
    RunConfig cfg;
    if (o.config_opt != nullptr && o.config_opt->count() > 0) {
        cfg = groverlab::cli::load_config_file(o.config_path);
    }
    cfg.command = command;
    if (o.phases_opt != nullptr && o.phases_opt->count() > 0) {
        for (std::size_t i = 0; i < 4; ++i) {
            cfg.phases[i] = groverlab::cli::parse_phase_expr(o.phases[i]);
        }
    }
    if (o.n_opt != nullptr && o.n_opt->count() > 0) cfg.n = o.n;
    if (o.m_opt != nullptr && o.m_opt->count() > 0) cfg.m = o.m;
    if (o.m_max_opt != nullptr && o.m_max_opt->count() > 0) cfg.m_max = o.m_max;
    if (o.grid_opt != nullptr && o.grid_opt->count() > 0) cfg.grid = o.grid;
    if (o.engine_opt != nullptr && o.engine_opt->count() > 0) {
        cfg.engine = groverlab::parse_engine(o.engine);
    }
    if (o.format_opt != nullptr && o.format_opt->count() > 0) {
        cfg.format = groverlab::cli::parse_output_format(o.format);
    }
    if (o.out_opt != nullptr && o.out_opt->count() > 0) cfg.out = o.out;
    if (o.figure_opt != nullptr && o.figure_opt->count() > 0) {
        cfg.figure = groverlab::parse_figure_id(o.figure);
    }
    if (o.tol_opt != nullptr && o.tol_opt->count() > 0) cfg.tol = o.tol;
    if (o.match_tol_opt != nullptr && o.match_tol_opt->count() > 0) {
        cfg.match_tol = o.match_tol;
    }
    if (o.pairs_opt != nullptr && o.pairs_opt->count() > 0) {
        cfg.pairs.clear();
        for (const std::string& text : o.pairs) {
            const auto colon = text.find(':');
            if (colon == std::string::npos) {
                throw std::domain_error("bad --pair '" + text + "' (expected N:M)");
            }
            cfg.pairs.emplace_back(std::stoll(text.substr(0, colon)),
                                   std::stoll(text.substr(colon + 1)));
        }
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"groverlab: generalized amplitude-amplification kernel laboratory"};
    app.require_subcommand(1);

    SubOpts kernel_o, sweep_o, figure_o, validate_o, scan_o, scaling_o;

    CLI::App* kernel = app.add_subcommand(
        "kernel", "kernel matrix, eigensystem, matching defect and trace reconciliation (JSON)");
    add_common_options(kernel, kernel_o);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "probability series p(m) for explicit parameters (CSV m,p)");
    add_common_options(sweep_cmd, sweep_o);

    CLI::App* figure =
        app.add_subcommand("figure", "probability series for a canonical preset (CSV m,p)");
    figure_o.figure_opt =
        figure->add_option("id", figure_o.figure, "preset id: fig1|fig2|fig3")->required();
    add_common_options(figure, figure_o);

    CLI::App* validate = app.add_subcommand(
        "validate", "cross-validate the reduced model against the full-state oracle (JSON)");
    validate_o.figure_opt = validate->add_option(
        "--figure", validate_o.figure, "use a preset's phases and sizes (fig1|fig2|fig3)");
    add_common_options(validate, validate_o);

    CLI::App* scan = app.add_subcommand(
        "scan", "max_p over a (dtheta, dphi) phase-difference grid (CSV)");
    scan_o.grid_opt = scan->add_option("--grid", scan_o.grid, "grid resolution per axis (>= 3)");
    add_common_options(scan, scan_o);

    CLI::App* scaling = app.add_subcommand(
        "scaling", "first-peak position across problem sizes for matched phases (CSV)");
    scaling_o.pairs_opt = scaling->add_option(
        "--pair", scaling_o.pairs, "problem size as N:M (repeatable)");
    add_common_options(scaling, scaling_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        if (kernel->parsed()) {
            cfg = build_config(groverlab::cli::Command::kernel, kernel_o);
        } else if (sweep_cmd->parsed()) {
            cfg = build_config(groverlab::cli::Command::sweep, sweep_o);
        } else if (figure->parsed()) {
            cfg = build_config(groverlab::cli::Command::figure, figure_o);
        } else if (validate->parsed()) {
            cfg = build_config(groverlab::cli::Command::validate, validate_o);
        } else if (scan->parsed()) {
            cfg = build_config(groverlab::cli::Command::scan, scan_o);
        } else {
            cfg = build_config(groverlab::cli::Command::scaling, scaling_o);
        }
        return groverlab::cli::run_command(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
