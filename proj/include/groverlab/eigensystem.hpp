#pragma once

#include <optional>

#include "groverlab/kernel.hpp"

namespace groverlab {

/// Spectral data of a kernel. Eigenvalues come from the quadratic closed form
/// on the computed trace/determinant; both lie on the unit circle.
///
/// Branch labeling: g1_vec is the eigenvector with the larger overlap
/// magnitude with the marked state (|v[0]|), ties broken toward the "+" root
/// of the quadratic. Eigenvectors are unit norm with the first nonzero
/// component made real positive.
struct EigenSystem {
    cplx xi1;
    cplx xi2;
    double lambda1;       ///< principal argument of xi1, in (-pi, pi]
    double lambda2;       ///< principal argument of xi2, in (-pi, pi]
    double delta_lambda;  ///< lambda1 - lambda2 (raw difference, may exceed pi)
    Vec2c g1_vec;
    Vec2c g2_vec;
    bool degenerate;      ///< |trace^2 - 4 det| < 1e-12; eigenvectors fall back
                          ///< to the canonical basis (the kernel is then a
                          ///< scalar matrix up to that tolerance)
    bool g1_plus_root;    ///< whether g1/xi1 is the "+" branch of the quadratic
};

inline constexpr double kDegeneracyTol = 1e-12;

EigenSystem eigensystem(const Kernel2& kernel);

/// Unnormalized closed-form eigenvector ( (k +/- N*sqrt(trace^2 - 4 det)) / den, 1 )
/// with den = -2*alpha*(gamma-delta)*sqrt(M(N-M)); the sign of den is fixed by
/// requiring (x, 1) to actually satisfy G x = xi x (the +2*alpha variant is
/// anti-parallel in the first component and is not an eigenvector).
/// Returns nullopt when |den| <= 1e-9 or the kernel is degenerate.
std::optional<Vec2c> closed_form_eigvec(const Kernel2& kernel, bool plus_root);

/// Wrapped eigenphase gap: principal value of delta_lambda in (-pi, pi],
/// the quantity that controls the integer-step oscillation.
double wrapped_gap(const EigenSystem& eig);

}  // namespace groverlab
