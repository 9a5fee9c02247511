#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groverlab/dynamics.hpp"
#include "groverlab/fullstate.hpp"

namespace groverlab {

enum class Engine { reduced, full };

std::string to_string(Engine engine);
Engine parse_engine(const std::string& name);  // throws std::domain_error

inline constexpr std::int64_t kMaxFullDimension = 10000000;

struct SweepPoint {
    std::int64_t m;
    double p;
};

/// p(m) over m = 0..m_max with interior local maxima annotated.
/// A point is a peak when p[m] >= p[m+1] and p[m] > p[m-1]; the strict left
/// comparison keeps only the smallest m of a tied plateau and leaves flat
/// series peakless.
struct SweepSeries {
    ProblemSpec spec;
    PhaseSet phases;
    Engine engine;
    std::vector<SweepPoint> points;
    std::vector<SweepPoint> peaks;
};

/// Evaluates p at every integer m in [0, m_max]. The reduced engine steps the
/// 2x2 kernel; the full engine runs the O(N)-per-step statevector oracle
/// (rejected above kMaxFullDimension). p(0) is M/N by construction.
SweepSeries sweep(const PhaseSet& phases, const ProblemSpec& spec, std::int64_t m_max,
                  Engine engine);

/// Smallest-m interior local maximum, or nullopt for a peakless (e.g. flat)
/// series. Throws std::domain_error when the series has fewer than 3 points.
std::optional<SweepPoint> first_peak(const SweepSeries& series);

enum class FigureId { fig1, fig2, fig3 };

std::string to_string(FigureId id);
FigureId parse_figure_id(const std::string& name);  // throws std::domain_error

struct FigurePreset {
    FigureId id;
    ProblemSpec spec;
    PhaseSet phases;
    std::int64_t m_max;
};

/// The three canonical parameter sets, N=1000, M=10:
///   fig1: theta = (pi, pi/2),  phi = (pi, pi/2 + 3)   -- mismatched
///   fig2: theta = (1.7pi, 1.6pi), phi = (pi, 0.9pi)   -- matched, gap 0.1pi
///   fig3: theta = (1.7pi, 0.7pi), phi = (1.9pi, 0.9pi)-- matched, gap pi
FigurePreset figure_preset(FigureId id);

struct ScalingRow {
    std::int64_t n;
    std::int64_t m_marked;
    std::int64_t m_star;
    double p_star;
    double product;  ///< m_star * sqrt(M/N); tends to pi/4 under optimal phases
};

/// Sweeps each problem size to its first peak and reports the normalized
/// product. Requires matched phases.
std::vector<ScalingRow> scaling_experiment(const PhaseSet& phases,
                                           const std::vector<ProblemSpec>& specs,
                                           Engine engine = Engine::reduced);

struct DecayRow {
    std::int64_t n;
    std::int64_t m_marked;
    double max_p;      ///< max over m in [0, m_max]
    double fit_bound;  ///< 4x the 1/N fit anchored at the largest-N row
    bool within_bound;
};

struct DecayReport {
    std::vector<DecayRow> rows;
    bool all_within_bound;
};

/// How the best achievable probability collapses with N when the matching
/// condition is violated (defect >= 0.5 required; the probability is a squared
/// overlap, so the O(1/sqrt(N)) amplitude claim is checked as a 1/N fit with
/// 4x slack). M is held fixed across rows.
DecayReport mismatch_decay_experiment(const PhaseSet& phases, std::int64_t m_max,
                                      const std::vector<std::int64_t>& n_values,
                                      std::int64_t m_marked = 1);

struct TraceReconciliation {
    cplx computed;              ///< trace of the assembled matrix
    cplx closed_form;           ///< -[M(a-b)(g-d) + N(ad+bg)]/N
    cplx sign_variant;          ///< -[M(a-b)(g-d) + N(gb-ad)]/N
    double closed_form_abs_diff;
    double sign_variant_abs_diff;  ///< always 2|alpha*delta| = 2
};

TraceReconciliation reconcile_trace(const Kernel2& kernel);

struct CrossValidationReport {
    std::int64_t n;
    std::int64_t m_marked;
    std::int64_t m_max;
    double tol;
    double max_abs_diff;  ///< max over m of |p_full - p_reduced|
    bool pass;
    TraceReconciliation trace;
};

/// Runs both engines over the same m range and compares pointwise; the
/// dynamics is exactly block-diagonal on the invariant plane, so agreement to
/// 1e-10 is the expected outcome, not a numerical accident.
CrossValidationReport cross_validate(const PhaseSet& phases, const ProblemSpec& spec,
                                     std::int64_t m_max, double tol = 1e-10);

}  // namespace groverlab
