#include "groverlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "groverlab/errors.hpp"

namespace groverlab {

namespace {

std::vector<SweepPoint> find_peaks(const std::vector<SweepPoint>& pts) {
    std::vector<SweepPoint> peaks;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (pts[i].p > pts[i - 1].p && pts[i].p >= pts[i + 1].p) {
            peaks.push_back(pts[i]);
        }
    }
    return peaks;
}

std::vector<double> reduced_series(const PhaseSet& phases, const ProblemSpec& spec,
                                   std::int64_t m_max) {
    const Kernel2 kernel = build_kernel(phases, spec);
    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(m_max) + 1);
    series.push_back(spec.ratio());  // zero applications: exactly M/N
    if (kernel.g.a01 == cplx{} && kernel.g.a10 == cplx{}) {
        // diagonal kernel: the marked magnitude is a step invariant, keep the
        // series exactly flat instead of squaring sqrt(M/N) back up
        series.assign(static_cast<std::size_t>(m_max) + 1, spec.ratio());
        return series;
    }
    ReducedState state = initial_reduced_state(spec);
    for (std::int64_t m = 1; m <= m_max; ++m) {
        state = apply_kernel(kernel, state);
        series.push_back(std::norm(state.a_w));
    }
    return series;
}

}  // namespace

std::string to_string(Engine engine) {
    return engine == Engine::reduced ? "reduced" : "full";
}

Engine parse_engine(const std::string& name) {
    if (name == "reduced") return Engine::reduced;
    if (name == "full") return Engine::full;
    throw std::domain_error("unknown engine '" + name + "' (expected reduced|full)");
}

SweepSeries sweep(const PhaseSet& phases, const ProblemSpec& spec, std::int64_t m_max,
                  Engine engine) {
    if (m_max < 1) throw std::domain_error("sweep needs m_max >= 1");

    std::vector<double> series;
    if (engine == Engine::reduced) {
        series = reduced_series(phases, spec, m_max);
    } else {
        if (spec.n_total > kMaxFullDimension) {
            throw ResourceLimitError("full engine rejected: N = " + std::to_string(spec.n_total) +
                                     " exceeds " + std::to_string(kMaxFullDimension));
        }
        series = run_full(spec.n_total, first_m_indices(spec.m_marked), phases, m_max);
    }

    std::vector<SweepPoint> points;
    points.reserve(series.size());
    for (std::size_t m = 0; m < series.size(); ++m) {
        points.push_back({static_cast<std::int64_t>(m), series[m]});
    }
    std::vector<SweepPoint> peaks = find_peaks(points);
    return {spec, phases, engine, std::move(points), std::move(peaks)};
}

std::optional<SweepPoint> first_peak(const SweepSeries& series) {
    if (series.points.size() < 3) {
        throw std::domain_error("peak location needs at least 3 sweep points");
    }
    if (series.peaks.empty()) return std::nullopt;
    return series.peaks.front();
}

std::string to_string(FigureId id) {
    switch (id) {
        case FigureId::fig1: return "fig1";
        case FigureId::fig2: return "fig2";
        default: return "fig3";
    }
}

FigureId parse_figure_id(const std::string& name) {
    if (name == "fig1") return FigureId::fig1;
    if (name == "fig2") return FigureId::fig2;
    if (name == "fig3") return FigureId::fig3;
    throw std::domain_error("unknown figure id '" + name + "' (expected fig1|fig2|fig3)");
}

FigurePreset figure_preset(FigureId id) {
    const ProblemSpec spec{1000, 10};
    switch (id) {
        case FigureId::fig1:
            // delta = i*e^{i3}, i.e. phi2 = pi/2 + 3 radians
            return {id, spec, PhaseSet{kPi, kPi / 2.0, kPi, kPi / 2.0 + 3.0}, 200};
        case FigureId::fig2:
            return {id, spec, PhaseSet{1.7 * kPi, 1.6 * kPi, kPi, 0.9 * kPi}, 120};
        default:
            return {id, spec, PhaseSet{1.7 * kPi, 0.7 * kPi, 1.9 * kPi, 0.9 * kPi}, 25};
    }
}

std::vector<ScalingRow> scaling_experiment(const PhaseSet& phases,
                                           const std::vector<ProblemSpec>& specs,
                                           Engine engine) {
    if (!is_matched(phases)) {
        throw std::domain_error("scaling experiment requires matched phases");
    }
    std::vector<ScalingRow> rows;
    rows.reserve(specs.size());
    for (const ProblemSpec& spec : specs) {
        const double predicted = predicted_peak_m(phases, spec);
        // cover the first peak plus the following trough with margin
        const auto m_max = static_cast<std::int64_t>(std::ceil(2.5 * predicted)) + 3;
        const SweepSeries series = sweep(phases, spec, m_max, engine);
        const std::optional<SweepPoint> peak = first_peak(series);
        if (!peak) {
            throw std::runtime_error("no peak found within m_max = " + std::to_string(m_max));
        }
        const double product =
            static_cast<double>(peak->m) * std::sqrt(spec.ratio());
        rows.push_back({spec.n_total, spec.m_marked, peak->m, peak->p, product});
    }
    return rows;
}

DecayReport mismatch_decay_experiment(const PhaseSet& phases, std::int64_t m_max,
                                      const std::vector<std::int64_t>& n_values,
                                      std::int64_t m_marked) {
    if (matching_defect(phases) < 0.5) {
        throw std::domain_error("decay experiment undefined: matching defect below 0.5");
    }
    if (m_max < 0) throw std::domain_error("m_max must be nonnegative");
    if (n_values.empty()) throw std::domain_error("need at least one database size");

    std::vector<DecayRow> rows;
    rows.reserve(n_values.size());
    for (std::int64_t n : n_values) {
        const ProblemSpec spec{n, m_marked};
        const Kernel2 kernel = build_kernel(phases, spec);
        ReducedState state = initial_reduced_state(spec);
        double max_p = spec.ratio();
        for (std::int64_t m = 1; m <= m_max; ++m) {
            state = apply_kernel(kernel, state);
            max_p = std::max(max_p, std::norm(state.a_w));
        }
        rows.push_back({n, m_marked, max_p, 0.0, false});
    }

    const auto anchor = std::max_element(
        rows.begin(), rows.end(),
        [](const DecayRow& a, const DecayRow& b) { return a.n < b.n; });
    bool all_ok = true;
    for (DecayRow& row : rows) {
        row.fit_bound = 4.0 * anchor->max_p * static_cast<double>(anchor->n) /
                        static_cast<double>(row.n);
        row.within_bound = row.max_p <= row.fit_bound;
        all_ok = all_ok && row.within_bound;
    }
    return {std::move(rows), all_ok};
}

TraceReconciliation reconcile_trace(const Kernel2& kernel) {
    const cplx closed = trace_closed_form(kernel.phases, kernel.spec);
    const cplx variant = trace_closed_form_sign_variant(kernel.phases, kernel.spec);
    return {kernel.trace_g, closed, variant, std::abs(kernel.trace_g - closed),
            std::abs(kernel.trace_g - variant)};
}

CrossValidationReport cross_validate(const PhaseSet& phases, const ProblemSpec& spec,
                                     std::int64_t m_max, double tol) {
    if (spec.n_total > kMaxFullDimension) {
        throw ResourceLimitError("cross-validation rejected: N = " + std::to_string(spec.n_total) +
                                 " exceeds " + std::to_string(kMaxFullDimension));
    }
    const SweepSeries reduced = sweep(phases, spec, m_max, Engine::reduced);
    const SweepSeries full = sweep(phases, spec, m_max, Engine::full);

    double max_diff = 0.0;
    for (std::size_t i = 0; i < reduced.points.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(full.points[i].p - reduced.points[i].p));
    }
    return {spec.n_total, spec.m_marked, m_max,          tol,
            max_diff,     max_diff <= tol, reconcile_trace(build_kernel(phases, spec))};
}

}  // namespace groverlab
