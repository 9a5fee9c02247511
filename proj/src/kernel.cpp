#include "groverlab/kernel.hpp"

#include <cmath>

namespace groverlab {

Kernel2 build_kernel(const PhaseSet& phases, const ProblemSpec& spec) {
    const double n = static_cast<double>(spec.n_total);
    const double m = static_cast<double>(spec.m_marked);
    const cplx a = phases.alpha, b = phases.beta, g = phases.gamma, d = phases.delta;

    const Mat2c g1 = Mat2c::diagonal(a, b);

    // |s><s| in the reduced basis; off-diagonal sqrt(M(N-M))/N.
    const double mm = m / n;
    const double off = std::sqrt(m * (n - m)) / n;
    const cplx gd = g - d;
    const Mat2c g2{d + gd * mm, gd * off, gd * off, g - gd * mm};

    const Mat2c kernel = -(g2 * g1);
    const cplx k = n * (g * b - a * d) - m * (a + b) * gd;

    return {kernel, g1, g2, kernel.trace(), kernel.det(), k, phases, spec};
}

cplx trace_closed_form(const PhaseSet& phases, const ProblemSpec& spec) {
    const double n = static_cast<double>(spec.n_total);
    const double m = static_cast<double>(spec.m_marked);
    const cplx a = phases.alpha, b = phases.beta, g = phases.gamma, d = phases.delta;
    return -(m * (a - b) * (g - d) + n * (a * d + b * g)) / n;
}

cplx trace_closed_form_sign_variant(const PhaseSet& phases, const ProblemSpec& spec) {
    const double n = static_cast<double>(spec.n_total);
    const double m = static_cast<double>(spec.m_marked);
    const cplx a = phases.alpha, b = phases.beta, g = phases.gamma, d = phases.delta;
    return -(m * (a - b) * (g - d) + n * (g * b - a * d)) / n;
}

}  // namespace groverlab
