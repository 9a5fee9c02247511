#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "groverlab/errors.hpp"

namespace groverlab::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson json_complex(cplx z) { return {z.real(), z.imag()}; }

ojson json_vec(const Vec2c& v) { return {json_complex(v[0]), json_complex(v[1])}; }

ojson json_mat(const Mat2c& m) {
    return {{json_complex(m.a00), json_complex(m.a01)},
            {json_complex(m.a10), json_complex(m.a11)}};
}

ojson json_phases(const PhaseSet& ph) {
    ojson j;
    j["theta1"] = ph.theta1;
    j["theta2"] = ph.theta2;
    j["phi1"] = ph.phi1;
    j["phi2"] = ph.phi2;
    j["alpha"] = json_complex(ph.alpha);
    j["beta"] = json_complex(ph.beta);
    j["gamma"] = json_complex(ph.gamma);
    j["delta"] = json_complex(ph.delta);
    return j;
}

ojson json_trace_reconciliation(const TraceReconciliation& rec) {
    ojson j;
    j["computed"] = json_complex(rec.computed);
    j["closed_form"] = json_complex(rec.closed_form);
    j["sign_variant"] = json_complex(rec.sign_variant);
    j["closed_form_abs_diff"] = rec.closed_form_abs_diff;
    j["sign_variant_abs_diff"] = rec.sign_variant_abs_diff;
    return j;
}

PhaseSet phases_from(const RunConfig& config) {
    return {config.phases[0], config.phases[1], config.phases[2], config.phases[3]};
}

OutputFormat resolve_format(const RunConfig& config, OutputFormat fallback) {
    return config.format.value_or(fallback);
}

std::int64_t resolve_m_max(const RunConfig& config, std::int64_t fallback) {
    return config.m_max >= 1 ? config.m_max : fallback;
}

void write_series_csv(const SweepSeries& series, std::ostream& out) {
    out << "m,p\n";
    for (const SweepPoint& pt : series.points) {
        out << pt.m << ',' << format_double(pt.p) << '\n';
    }
}

ojson series_json(const SweepSeries& series) {
    ojson j;
    j["engine"] = groverlab::to_string(series.engine);
    j["n"] = series.spec.n_total;
    j["m_marked"] = series.spec.m_marked;
    ojson points = ojson::array();
    for (const SweepPoint& pt : series.points) points.push_back({pt.m, pt.p});
    j["points"] = points;
    ojson peaks = ojson::array();
    for (const SweepPoint& pt : series.peaks) peaks.push_back({pt.m, pt.p});
    j["peaks"] = peaks;
    return j;
}

void emit_json(const ojson& j, std::ostream& out) { out << j.dump(2) << '\n'; }

}  // namespace

int cmd_kernel(const RunConfig& config, std::ostream& data) {
    if (resolve_format(config, OutputFormat::json) != OutputFormat::json) {
        throw std::domain_error("the kernel command emits JSON only");
    }
    const PhaseSet phases = phases_from(config);
    const ProblemSpec spec{config.n, config.m};
    const Kernel2 kernel = build_kernel(phases, spec);
    const EigenSystem eig = eigensystem(kernel);
    const double defect = matching_defect(phases);
    const bool matched = is_matched(phases, config.match_tol);

    ojson j;
    j["command"] = "kernel";
    j["phases"] = json_phases(phases);
    j["problem"] = {{"n", spec.n_total}, {"m", spec.m_marked}};
    {
        ojson k;
        k["g"] = json_mat(kernel.g);
        k["g1"] = json_mat(kernel.g1);
        k["g2"] = json_mat(kernel.g2);
        k["trace"] = json_complex(kernel.trace_g);
        k["det"] = json_complex(kernel.det_g);
        k["k"] = json_complex(kernel.k_scalar);
        j["kernel"] = k;
    }
    j["matching"] = {{"defect", defect}, {"matched", matched}, {"tolerance", config.match_tol}};
    {
        ojson e;
        e["xi1"] = json_complex(eig.xi1);
        e["xi2"] = json_complex(eig.xi2);
        e["lambda1"] = eig.lambda1;
        e["lambda2"] = eig.lambda2;
        e["delta_lambda"] = eig.delta_lambda;
        e["wrapped_gap"] = wrapped_gap(eig);
        e["degenerate"] = eig.degenerate;
        e["g1"] = json_vec(eig.g1_vec);
        e["g2"] = json_vec(eig.g2_vec);
        j["eigensystem"] = e;
    }
    j["trace_reconciliation"] = json_trace_reconciliation(reconcile_trace(kernel));
    if (matched && !eig.degenerate) {
        j["predicted_peak_m"] = predicted_peak_m(phases, spec);
    } else {
        j["predicted_peak_m"] = nullptr;
    }
    if (!eig.degenerate) {
        const AlignmentReport align = g1_alignment(phases, spec);
        j["alignment"] = {{"overlap_w", align.overlap_w},
                          {"product_overlap", align.product_overlap}};
    } else {
        j["alignment"] = nullptr;
    }
    emit_json(j, data);
    return 0;
}

int cmd_sweep(const RunConfig& config, std::ostream& data) {
    const PhaseSet phases = phases_from(config);
    const ProblemSpec spec{config.n, config.m};
    const SweepSeries series = sweep(phases, spec, resolve_m_max(config, 100), config.engine);
    if (resolve_format(config, OutputFormat::csv) == OutputFormat::csv) {
        write_series_csv(series, data);
    } else {
        ojson j;
        j["command"] = "sweep";
        j["phases"] = json_phases(phases);
        j["series"] = series_json(series);
        emit_json(j, data);
    }
    return 0;
}

int cmd_figure(const RunConfig& config, std::ostream& data) {
    if (!config.figure) {
        throw std::domain_error("figure command needs an id (fig1|fig2|fig3)");
    }
    const FigurePreset preset = figure_preset(*config.figure);
    const SweepSeries series =
        sweep(preset.phases, preset.spec, resolve_m_max(config, preset.m_max), config.engine);
    if (resolve_format(config, OutputFormat::csv) == OutputFormat::csv) {
        write_series_csv(series, data);
    } else {
        ojson j;
        j["command"] = "figure";
        j["id"] = groverlab::to_string(preset.id);
        j["phases"] = json_phases(preset.phases);
        j["series"] = series_json(series);
        emit_json(j, data);
    }
    return 0;
}

int cmd_validate(const RunConfig& config, std::ostream& data) {
    if (resolve_format(config, OutputFormat::json) != OutputFormat::json) {
        throw std::domain_error("the validate command emits JSON only");
    }
    PhaseSet phases = phases_from(config);
    std::optional<ProblemSpec> spec;
    std::int64_t m_max = resolve_m_max(config, 200);
    if (config.figure) {
        const FigurePreset preset = figure_preset(*config.figure);
        phases = preset.phases;
        spec = preset.spec;
        m_max = resolve_m_max(config, preset.m_max);
    } else {
        spec = ProblemSpec{config.n, config.m};
    }

    const CrossValidationReport report = cross_validate(phases, *spec, m_max, config.tol);

    ojson j;
    j["command"] = "validate";
    j["phases"] = json_phases(phases);
    j["problem"] = {{"n", report.n}, {"m", report.m_marked}};
    j["m_max"] = report.m_max;
    j["tolerance"] = report.tol;
    j["max_abs_diff"] = report.max_abs_diff;
    j["pass"] = report.pass;
    j["trace_reconciliation"] = json_trace_reconciliation(report.trace);
    emit_json(j, data);
    return report.pass ? 0 : 1;
}

int cmd_scan(const RunConfig& config, std::ostream& data) {
    if (config.grid < 3) {
        throw std::domain_error("scan grid must be at least 3 per axis");
    }
    const ProblemSpec spec{config.n, config.m};
    const std::int64_t m_max = resolve_m_max(config, 200);
    const std::int64_t grid = config.grid;
    const double step = kTwoPi / static_cast<double>(grid);

    const bool csv = resolve_format(config, OutputFormat::csv) == OutputFormat::csv;
    ojson rows = ojson::array();
    if (csv) data << "dtheta,dphi,max_p,first_peak_m\n";
    // cell (i, j) applies the phase differences to theta1/phi1 with
    // theta2 = phi2 = 0; matched cells are exactly the diagonal i == j
    for (std::int64_t i = 0; i < grid; ++i) {
        const double dtheta = static_cast<double>(i) * step;
        for (std::int64_t j = 0; j < grid; ++j) {
            const double dphi = static_cast<double>(j) * step;
            const SweepSeries series =
                sweep(PhaseSet{dtheta, 0.0, dphi, 0.0}, spec, m_max, config.engine);
            double max_p = 0.0;
            for (const SweepPoint& pt : series.points) max_p = std::max(max_p, pt.p);
            const std::optional<SweepPoint> peak = first_peak(series);
            const std::int64_t peak_m = peak ? peak->m : -1;
            if (csv) {
                data << format_double(dtheta) << ',' << format_double(dphi) << ','
                     << format_double(max_p) << ',' << peak_m << '\n';
            } else {
                rows.push_back({dtheta, dphi, max_p, peak_m});
            }
        }
    }
    if (!csv) {
        ojson j;
        j["command"] = "scan";
        j["n"] = spec.n_total;
        j["m_marked"] = spec.m_marked;
        j["m_max"] = m_max;
        j["grid"] = grid;
        j["columns"] = {"dtheta", "dphi", "max_p", "first_peak_m"};
        j["rows"] = rows;
        emit_json(j, data);
    }
    return 0;
}

int cmd_scaling(const RunConfig& config, std::ostream& data) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs = config.pairs;
    if (pairs.empty()) {
        pairs = {{100, 1}, {400, 1}, {1000, 10}, {10000, 10}};
    }
    std::vector<ProblemSpec> specs;
    specs.reserve(pairs.size());
    for (const auto& [n, m] : pairs) specs.emplace_back(n, m);

    const PhaseSet phases = phases_from(config);
    const std::vector<ScalingRow> rows = scaling_experiment(phases, specs, config.engine);

    if (resolve_format(config, OutputFormat::csv) == OutputFormat::csv) {
        data << "n,m_marked,m_star,p_star,product\n";
        for (const ScalingRow& row : rows) {
            data << row.n << ',' << row.m_marked << ',' << row.m_star << ','
                 << format_double(row.p_star) << ',' << format_double(row.product) << '\n';
        }
    } else {
        ojson j;
        j["command"] = "scaling";
        j["phases"] = json_phases(phases);
        j["columns"] = {"n", "m_marked", "m_star", "p_star", "product"};
        ojson jrows = ojson::array();
        for (const ScalingRow& row : rows) {
            jrows.push_back({row.n, row.m_marked, row.m_star, row.p_star, row.product});
        }
        j["rows"] = jrows;
        emit_json(j, data);
    }
    return 0;
}

int run_command(const RunConfig& config, std::ostream& data, std::ostream& diag) {
    try {
        std::ostringstream buffer;
        int code = 0;
        switch (config.command) {
            case Command::kernel: code = cmd_kernel(config, buffer); break;
            case Command::sweep: code = cmd_sweep(config, buffer); break;
            case Command::figure: code = cmd_figure(config, buffer); break;
            case Command::validate: code = cmd_validate(config, buffer); break;
            case Command::scan: code = cmd_scan(config, buffer); break;
            case Command::scaling: code = cmd_scaling(config, buffer); break;
        }
        if (config.out) {
            std::ofstream file(*config.out, std::ios::binary);
            if (!file) throw std::runtime_error("cannot write output file '" + *config.out + "'");
            file << buffer.str();

            ojson meta;
            meta["tool"] = kToolName;
            meta["version"] = kToolVersion;
            meta["config"] = config_to_json(config);
            std::ofstream side(*config.out + ".meta.json", std::ios::binary);
            if (side) side << meta.dump(2) << '\n';
        } else {
            data << buffer.str();
        }
        return code;
    } catch (const ResourceLimitError& e) {
        diag << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace groverlab::cli
