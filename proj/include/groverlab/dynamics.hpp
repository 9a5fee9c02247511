#pragma once

#include <cstdint>

#include "groverlab/eigensystem.hpp"

namespace groverlab {

/// One kernel application in the invariant plane.
inline ReducedState apply_kernel(const Kernel2& kernel, const ReducedState& state) {
    const Vec2c v = kernel.g * state.as_vec();
    return {v[0], v[1]};
}

/// Success probability |<w|G^m|s>|^2 by repeated 2x2 application (the
/// reference path). m = 0 returns M/N exactly.
double evolve_probability(const PhaseSet& phases, const ProblemSpec& spec, std::int64_t m);

/// Same probability through the spectral route
///   |A + (e^{i m dl} - 1) <w|g1><g1|s>|^2,  A = sqrt(M/N),
/// valid because the kernel is unitary (orthonormal eigenbasis). Agrees with
/// the iterative path to ~1e-12 for m up to 1e4 away from degeneracy.
double spectral_probability(const EigenSystem& eig, const ProblemSpec& spec, std::int64_t m);
double spectral_probability(const PhaseSet& phases, const ProblemSpec& spec, std::int64_t m);

/// First-peak prediction pi/|dl| from the wrapped eigenphase gap. The raw
/// lambda1-lambda2 can exceed pi when the eigenphases straddle the branch cut;
/// integer-step dynamics only see the gap mod 2*pi, so the wrapped value is
/// the one that predicts the observed peak.
/// Throws std::domain_error for unmatched phases or a degenerate kernel
/// (no oscillation to predict).
double predicted_peak_m(const PhaseSet& phases, const ProblemSpec& spec);

struct AlignmentReport {
    double overlap_w;        ///< |<w|g1>|
    double product_overlap;  ///< |<w|g1><g1|s>|
};

/// Diagnostic for how closely g1 aligns with the marked state: near-complete
/// alignment (product -> 0 like 1/sqrt(N)) signals an unsearchable phase set;
/// product near 1/2 is the matched regime. Throws on a degenerate kernel.
AlignmentReport g1_alignment(const PhaseSet& phases, const ProblemSpec& spec);

}  // namespace groverlab
