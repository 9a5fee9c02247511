#include "groverlab/eigensystem.hpp"

#include <cmath>

namespace groverlab {

namespace {

double principal_arg(cplx z) {
    double a = std::arg(z);
    if (a <= -kPi) a = kPi;  // fold the -pi branch onto +pi
    return a;
}

/// Eigenvector of a 2x2 matrix for eigenvalue xi, from the better-conditioned
/// row of (G - xi I). Unit norm, first nonzero component real positive.
Vec2c eigvec_for(const Mat2c& g, cplx xi) {
    const Vec2c va{g.a01, xi - g.a00};
    const Vec2c vb{xi - g.a11, g.a10};
    Vec2c v = norm2(va) >= norm2(vb) ? va : vb;
    const double n = std::sqrt(norm2(v));
    v = scale(v, 1.0 / n);
    const cplx lead = std::abs(v[0]) > 1e-14 ? v[0] : v[1];
    return scale(v, std::conj(lead) / std::abs(lead));
}

}  // namespace

EigenSystem eigensystem(const Kernel2& kernel) {
    const cplx t = kernel.trace_g;
    const cplx d = kernel.det_g;
    const cplx disc = t * t - 4.0 * d;

    if (std::abs(disc) < kDegeneracyTol) {
        const cplx xi = 0.5 * t;
        const double lam = principal_arg(xi);
        return {xi, xi, lam, lam, 0.0, Vec2c{1.0, 0.0}, Vec2c{0.0, 1.0},
                /*degenerate=*/true, /*g1_plus_root=*/true};
    }

    const cplx w = std::sqrt(disc);
    const cplx xi_plus = 0.5 * (t + w);
    const cplx xi_minus = 0.5 * (t - w);
    const Vec2c v_plus = eigvec_for(kernel.g, xi_plus);
    const Vec2c v_minus = eigvec_for(kernel.g, xi_minus);

    const bool plus_first = std::abs(v_plus[0]) >= std::abs(v_minus[0]);
    const cplx xi1 = plus_first ? xi_plus : xi_minus;
    const cplx xi2 = plus_first ? xi_minus : xi_plus;
    const Vec2c g1 = plus_first ? v_plus : v_minus;
    const Vec2c g2 = plus_first ? v_minus : v_plus;

    const double l1 = principal_arg(xi1);
    const double l2 = principal_arg(xi2);
    return {xi1, xi2, l1, l2, l1 - l2, g1, g2, false, plus_first};
}

std::optional<Vec2c> closed_form_eigvec(const Kernel2& kernel, bool plus_root) {
    const cplx disc = kernel.trace_g * kernel.trace_g - 4.0 * kernel.det_g;
    if (std::abs(disc) < kDegeneracyTol) return std::nullopt;

    const double n = static_cast<double>(kernel.spec.n_total);
    const double m = static_cast<double>(kernel.spec.m_marked);
    const cplx den = -2.0 * kernel.phases.alpha * (kernel.phases.gamma - kernel.phases.delta) *
                     std::sqrt(m * (n - m));
    if (std::abs(den) <= 1e-9) return std::nullopt;

    const cplx nw = n * std::sqrt(disc);
    const cplx x = (kernel.k_scalar + (plus_root ? nw : -nw)) / den;
    return Vec2c{x, 1.0};
}

double wrapped_gap(const EigenSystem& eig) {
    double d = std::fmod(eig.delta_lambda, kTwoPi);
    if (d > kPi) d -= kTwoPi;
    if (d <= -kPi) d += kTwoPi;
    return d;
}

}  // namespace groverlab
