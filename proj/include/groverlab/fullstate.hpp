#pragma once

#include <cstdint>
#include <vector>

#include "groverlab/phase_set.hpp"

namespace groverlab {

/// Full N-dimensional statevector with an explicit marked index set.
/// This is the brute-force oracle for the reduced 2x2 model: every operation
/// is a single O(N) pass, no N x N matrix is ever formed.
struct FullState {
    std::vector<cplx> amplitudes;
    std::vector<std::int64_t> marked;  ///< sorted, unique, proper nonempty subset
};

/// Uniform superposition over n items. Throws std::domain_error if the marked
/// set is empty, not a proper subset, or contains out-of-range/duplicate
/// indices (the invariant plane degenerates for empty or full marked sets).
FullState build_full_initial(std::int64_t n, std::vector<std::int64_t> marked);

/// Convenience marked set {0, 1, ..., m-1}.
std::vector<std::int64_t> first_m_indices(std::int64_t m);

/// One kernel application: selective phase on the marked/unmarked indices,
/// then the rank-1 diffusion psi -> delta*psi + (gamma-delta)<s|psi>|s>
/// against the analytically uniform |s>, then global negation.
FullState apply_kernel_full(FullState state, const PhaseSet& phases);

/// Total probability on the marked set.
double marked_probability(const FullState& state);

inline constexpr std::int64_t kMaxFullSteps = 1000000;

/// Probability series p(m) for m = 0..m_max; element m of the result is p(m).
/// Throws ResourceLimitError when m_max exceeds kMaxFullSteps.
std::vector<double> run_full(std::int64_t n, const std::vector<std::int64_t>& marked,
                             const PhaseSet& phases, std::int64_t m_max);

}  // namespace groverlab
