#pragma once

#include "groverlab/phase_set.hpp"

namespace groverlab {

/// The per-iteration unitary G = -(G2*G1) restricted to the invariant plane,
/// together with its factors and derived scalars.
struct Kernel2 {
    Mat2c g;   ///< the kernel itself
    Mat2c g1;  ///< diag(alpha, beta): selective phase rotation
    Mat2c g2;  ///< delta*I + (gamma-delta)|s><s|: diffusion with phases

    cplx trace_g;   ///< trace of the assembled matrix
    cplx det_g;     ///< determinant of the assembled matrix
    cplx k_scalar;  ///< N(gamma*beta - alpha*delta) - M(alpha+beta)(gamma-delta)

    PhaseSet phases;
    ProblemSpec spec;
};

Kernel2 build_kernel(const PhaseSet& phases, const ProblemSpec& spec);

/// Closed form for the trace that reproduces the assembled matrix:
///   -[M(alpha-beta)(gamma-delta) + N(alpha*delta + beta*gamma)] / N.
cplx trace_closed_form(const PhaseSet& phases, const ProblemSpec& spec);

/// Sign variant of the closed form that circulates for this kernel family,
///   -[M(alpha-beta)(gamma-delta) + N(gamma*beta - alpha*delta)] / N.
/// It does NOT reproduce the assembled matrix (it differs by 2*alpha*delta);
/// kept so reports can show the discrepancy explicitly.
cplx trace_closed_form_sign_variant(const PhaseSet& phases, const ProblemSpec& spec);

}  // namespace groverlab
