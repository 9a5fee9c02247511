#include <doctest.h>

#include <cmath>
#include <random>

#include "groverlab/eigensystem.hpp"
#include "test_support.hpp"

using namespace groverlab;
using groverlab::testing::random_phases;
using groverlab::testing::random_spec;

TEST_CASE("G = -I is degenerate with canonical eigenvectors") {
    const EigenSystem e = eigensystem(build_kernel({0, 0, 0, 0}, {100, 1}));
    CHECK(e.degenerate);
    CHECK(std::abs(e.xi1 - cplx{-1.0, 0.0}) < 1e-15);
    CHECK(e.xi1 == e.xi2);
    CHECK(e.lambda1 == doctest::Approx(kPi));
    CHECK(e.delta_lambda == 0.0);
    CHECK(e.g1_vec == Vec2c{cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    CHECK(e.g2_vec == Vec2c{cplx{0.0, 0.0}, cplx{1.0, 0.0}});
}

TEST_CASE("equal phase pairs produce a scalar kernel") {
    const EigenSystem e = eigensystem(build_kernel({1.3, 1.3, 2.1, 2.1}, {50, 3}));
    CHECK(e.degenerate);
}

TEST_CASE("reflection kernel at N=4: roots of the characteristic polynomial") {
    const Kernel2 k = build_kernel({kPi, 0.0, kPi, 0.0}, {4, 1});
    const EigenSystem e = eigensystem(k);
    REQUIRE_FALSE(e.degenerate);

    // char poly xi^2 - trace*xi + det has roots (1 +- i sqrt(3))/2
    const cplx expect1{0.5, std::sqrt(3.0) / 2.0};
    const cplx expect2{0.5, -std::sqrt(3.0) / 2.0};
    CHECK(std::abs(e.xi1 - expect1) < 1e-12);
    CHECK(std::abs(e.xi2 - expect2) < 1e-12);
    CHECK(e.lambda1 == doctest::Approx(kPi / 3.0).epsilon(1e-14));
    CHECK(e.lambda2 == doctest::Approx(-kPi / 3.0).epsilon(1e-14));
    CHECK(e.delta_lambda == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));

    for (cplx xi : {e.xi1, e.xi2}) {
        CHECK(std::abs(xi * xi - k.trace_g * xi + k.det_g) < 1e-12);
    }
}

TEST_CASE("eigenpairs satisfy the defining relations") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 400; ++i) {
        const PhaseSet ph = random_phases(rng);
        const ProblemSpec spec = random_spec(rng, 2, 100000);
        const Kernel2 k = build_kernel(ph, spec);
        const EigenSystem e = eigensystem(k);

        CHECK(std::abs(std::abs(e.xi1) - 1.0) < 1e-10);
        CHECK(std::abs(std::abs(e.xi2) - 1.0) < 1e-10);
        CHECK(std::abs(e.xi1 * e.xi2 - k.det_g) < 1e-10);
        CHECK(std::abs(e.xi1 + e.xi2 - k.trace_g) < 1e-10);
        CHECK(e.lambda1 > -kPi);
        CHECK(e.lambda1 <= kPi);
        CHECK(e.lambda2 > -kPi);
        CHECK(e.lambda2 <= kPi);
        if (e.degenerate) continue;

        for (auto& [xi, v] : {std::pair{e.xi1, e.g1_vec}, std::pair{e.xi2, e.g2_vec}}) {
            const Vec2c gv = k.g * v;
            CHECK(std::abs(gv[0] - xi * v[0]) < 1e-9);
            CHECK(std::abs(gv[1] - xi * v[1]) < 1e-9);
            CHECK(std::abs(norm2(v) - 1.0) < 1e-12);
        }
        // canonical gauge: leading component real nonnegative
        const cplx lead = std::abs(e.g1_vec[0]) > 1e-14 ? e.g1_vec[0] : e.g1_vec[1];
        CHECK(lead.real() >= 0.0);
        CHECK(std::abs(lead.imag()) < 1e-13);
        // branch labeling: g1 has the larger marked-state overlap
        CHECK(std::abs(e.g1_vec[0]) >= std::abs(e.g2_vec[0]) - 1e-15);
    }
}

TEST_CASE("closed-form eigenvector is parallel to the numerical one") {
    std::mt19937_64 rng(32);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        const PhaseSet ph = random_phases(rng);
        const ProblemSpec spec = random_spec(rng, 2, 5000);
        const Kernel2 k = build_kernel(ph, spec);
        const EigenSystem e = eigensystem(k);
        if (e.degenerate) continue;

        for (bool plus : {true, false}) {
            const auto closed = closed_form_eigvec(k, plus);
            if (!closed) continue;
            const Vec2c numeric = (plus == e.g1_plus_root) ? e.g1_vec : e.g2_vec;
            const Vec2c unit = scale(*closed, 1.0 / std::sqrt(norm2(*closed)));
            CHECK(cross_magnitude(unit, numeric) < 1e-8);
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("closed-form eigenvector declines a vanishing denominator") {
    // gamma == delta zeroes 2*alpha*(gamma-delta)*sqrt(M(N-M))
    const Kernel2 diag = build_kernel({1.0, 2.0, 0.7, 0.7}, {100, 3});
    CHECK_FALSE(closed_form_eigvec(diag, true).has_value());
    CHECK_FALSE(closed_form_eigvec(diag, false).has_value());
    // degenerate kernels decline as well
    const Kernel2 deg = build_kernel({0, 0, 0, 0}, {100, 3});
    CHECK_FALSE(closed_form_eigvec(deg, true).has_value());
}

TEST_CASE("diagonal but non-degenerate kernel still diagonalizes") {
    // gamma == delta with alpha != beta: distinct diagonal entries
    const Kernel2 k = build_kernel({1.0, 2.5, 0.7, 0.7}, {100, 3});
    const EigenSystem e = eigensystem(k);
    REQUIRE_FALSE(e.degenerate);
    for (auto& [xi, v] : {std::pair{e.xi1, e.g1_vec}, std::pair{e.xi2, e.g2_vec}}) {
        const Vec2c gv = k.g * v;
        CHECK(std::abs(gv[0] - xi * v[0]) < 1e-12);
        CHECK(std::abs(gv[1] - xi * v[1]) < 1e-12);
    }
    // eigenvectors collapse to the basis vectors
    CHECK(std::abs(std::abs(e.g1_vec[0]) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(e.g2_vec[1]) - 1.0) < 1e-12);
}

TEST_CASE("wrapped gap folds the raw eigenphase difference") {
    // mismatched preset phases straddle the branch cut: |raw| > pi
    const EigenSystem e =
        eigensystem(build_kernel({kPi, kPi / 2.0, kPi, kPi / 2.0 + 3.0}, {1000, 10}));
    CHECK(std::abs(e.delta_lambda) > kPi);
    const double wrapped = wrapped_gap(e);
    CHECK(std::abs(wrapped) <= kPi);
    CHECK(std::abs(wrapped) ==
          doctest::Approx(kTwoPi - std::abs(e.delta_lambda)).epsilon(1e-12));
    // same point on the circle
    CHECK(std::abs(std::polar(1.0, wrapped) - std::polar(1.0, e.delta_lambda)) < 1e-12);
}
