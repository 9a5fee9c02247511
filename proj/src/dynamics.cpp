#include "groverlab/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace groverlab {

double evolve_probability(const PhaseSet& phases, const ProblemSpec& spec, std::int64_t m) {
    if (m < 0) throw std::domain_error("iteration count must be nonnegative");
    if (m == 0) return spec.ratio();

    const Kernel2 kernel = build_kernel(phases, spec);
    // An exactly diagonal kernel (gamma == delta) preserves both component
    // magnitudes step for step, so p(m) is the initial M/N for every m;
    // returning it directly keeps such series exactly flat.
    if (kernel.g.a01 == cplx{} && kernel.g.a10 == cplx{}) return spec.ratio();

    ReducedState state = initial_reduced_state(spec);
    for (std::int64_t i = 0; i < m; ++i) state = apply_kernel(kernel, state);
    return std::norm(state.a_w);
}

double spectral_probability(const EigenSystem& eig, const ProblemSpec& spec, std::int64_t m) {
    const ReducedState s = initial_reduced_state(spec);
    const cplx overlap = eig.g1_vec[0] * dot_conj(eig.g1_vec, s.as_vec());
    const double a = std::sqrt(spec.ratio());
    const double md = static_cast<double>(m);
    const cplx amp = a + (std::polar(1.0, md * eig.delta_lambda) - 1.0) * overlap;
    return std::norm(amp);  // the xi2^m prefactor has unit modulus
}

double spectral_probability(const PhaseSet& phases, const ProblemSpec& spec, std::int64_t m) {
    return spectral_probability(eigensystem(build_kernel(phases, spec)), spec, m);
}

double predicted_peak_m(const PhaseSet& phases, const ProblemSpec& spec) {
    if (!is_matched(phases)) {
        throw std::domain_error("no oscillation to predict: phases violate the matching condition");
    }
    const EigenSystem eig = eigensystem(build_kernel(phases, spec));
    const double gap = std::abs(wrapped_gap(eig));
    if (eig.degenerate || gap == 0.0) {
        throw std::domain_error("no oscillation to predict: degenerate kernel");
    }
    return kPi / gap;
}

AlignmentReport g1_alignment(const PhaseSet& phases, const ProblemSpec& spec) {
    const EigenSystem eig = eigensystem(build_kernel(phases, spec));
    if (eig.degenerate) {
        throw std::domain_error("alignment diagnostic undefined for a degenerate kernel");
    }
    const ReducedState s = initial_reduced_state(spec);
    const double overlap_w = std::abs(eig.g1_vec[0]);
    const double product = overlap_w * std::abs(dot_conj(eig.g1_vec, s.as_vec()));
    return {overlap_w, product};
}

}  // namespace groverlab
