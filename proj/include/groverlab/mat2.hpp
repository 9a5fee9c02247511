#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace groverlab {

using cplx = std::complex<double>;
using Vec2c = std::array<cplx, 2>;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

/// Dense 2x2 complex matrix, the only linear algebra the reduced model needs.
struct Mat2c {
    cplx a00{}, a01{}, a10{}, a11{};

    static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2c diagonal(cplx d0, cplx d1) { return {d0, 0.0, 0.0, d1}; }

    cplx trace() const { return a00 + a11; }
    cplx det() const { return a00 * a11 - a01 * a10; }

    Mat2c adjoint() const {
        return {std::conj(a00), std::conj(a10), std::conj(a01), std::conj(a11)};
    }

    Mat2c operator*(const Mat2c& o) const {
        return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
    }

    Vec2c operator*(const Vec2c& v) const {
        return {a00 * v[0] + a01 * v[1], a10 * v[0] + a11 * v[1]};
    }

    Mat2c operator-() const { return {-a00, -a01, -a10, -a11}; }

    Mat2c operator-(const Mat2c& o) const {
        return {a00 - o.a00, a01 - o.a01, a10 - o.a10, a11 - o.a11};
    }

    /// Largest elementwise absolute value, used for tolerance checks.
    double max_abs() const {
        return std::max(std::max(std::abs(a00), std::abs(a01)),
                        std::max(std::abs(a10), std::abs(a11)));
    }
};

/// <u|v> with the conjugation on the first argument.
inline cplx dot_conj(const Vec2c& u, const Vec2c& v) {
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
}

inline double norm2(const Vec2c& v) { return std::norm(v[0]) + std::norm(v[1]); }

inline Vec2c scale(const Vec2c& v, cplx s) { return {s * v[0], s * v[1]}; }

/// 2-D "cross product" magnitude |u0 v1 - u1 v0|; zero iff u and v are parallel.
inline double cross_magnitude(const Vec2c& u, const Vec2c& v) {
    return std::abs(u[0] * v[1] - u[1] * v[0]);
}

}  // namespace groverlab
