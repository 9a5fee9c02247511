#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "groverlab/dynamics.hpp"
#include "test_support.hpp"

using namespace groverlab;
using groverlab::testing::direct_probability;
using groverlab::testing::random_matched_phases;
using groverlab::testing::random_phases;
using groverlab::testing::random_spec;

namespace {
const PhaseSet kGrover{kPi, 0.0, kPi, 0.0};
}

TEST_CASE("zero iterations return M/N exactly") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const PhaseSet ph = random_phases(rng);
        const ProblemSpec spec = random_spec(rng, 2, 100000);
        CHECK(evolve_probability(ph, spec, 0) == spec.ratio());
    }
    CHECK(evolve_probability(kGrover, {1000, 10}, 0) == 0.01);
}

TEST_CASE("single reflection step at N=4 finds the marked item") {
    CHECK(evolve_probability(kGrover, {4, 1}, 1) == doctest::Approx(1.0).epsilon(1e-12));
    // independent route through the explicit entry formulas
    CHECK(direct_probability(kGrover, {4, 1}, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reflection phases reproduce the textbook sin^2((2m+1)theta) law") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        const ProblemSpec spec = random_spec(rng, 4, 4096);
        const double theta = std::asin(std::sqrt(spec.ratio()));
        std::uniform_int_distribution<std::int64_t> md(0, 200);
        const std::int64_t m = md(rng);
        const double expected = std::pow(std::sin((2.0 * m + 1.0) * theta), 2);
        CHECK(evolve_probability(kGrover, spec, m) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("optimal preset values around the first peak") {
    const PhaseSet fig3{1.7 * kPi, 0.7 * kPi, 1.9 * kPi, 0.9 * kPi};
    const ProblemSpec spec{1000, 10};
    CHECK(evolve_probability(fig3, spec, 7) == doctest::Approx(0.9953444003575985).epsilon(1e-9));
    CHECK(evolve_probability(fig3, spec, 8) == doctest::Approx(0.9826639577705814).epsilon(1e-9));
    CHECK(evolve_probability(fig3, spec, 7) >= 0.99);
}

TEST_CASE("iterative path matches the direct-entry oracle") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const PhaseSet ph = random_phases(rng);
        const ProblemSpec spec = random_spec(rng, 2, 5000);
        std::uniform_int_distribution<std::int64_t> md(1, 300);
        const std::int64_t m = md(rng);
        CHECK(evolve_probability(ph, spec, m) ==
              doctest::Approx(direct_probability(ph, spec, m)).epsilon(1e-12));
    }
}

TEST_CASE("spectral route agrees with the iterative route") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 100; ++i) {
        const PhaseSet ph = random_phases(rng);
        const ProblemSpec spec = random_spec(rng, 2, 5000);
        const EigenSystem eig = eigensystem(build_kernel(ph, spec));
        for (std::int64_t m : {std::int64_t{0}, std::int64_t{1}, std::int64_t{13},
                               std::int64_t{500}, std::int64_t{10000}}) {
            const double it = evolve_probability(ph, spec, m);
            const double sp = spectral_probability(eig, spec, m);
            CHECK(std::abs(it - sp) < 1e-10);
        }
    }
}

TEST_CASE("spectral route handles degenerate kernels") {
    CHECK(spectral_probability(PhaseSet{0, 0, 0, 0}, ProblemSpec{1000, 10}, 77) ==
          doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("negative iteration count is rejected") {
    CHECK_THROWS_AS(evolve_probability(kGrover, ProblemSpec{4, 1}, -1), std::domain_error);
}

TEST_CASE("predicted peak position") {
    SUBCASE("reflection phases at N=4: pi / (2pi/3) = 1.5") {
        CHECK(predicted_peak_m(kGrover, {4, 1}) == doctest::Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("optimal phases at N=1000 M=10: pi / (4 asin(1/10))") {
        CHECK(predicted_peak_m(kGrover, {1000, 10}) ==
              doctest::Approx(kPi / (4.0 * std::asin(0.1))).epsilon(1e-12));
    }
    SUBCASE("matched 0.1pi gap: near the asymptotic closed form") {
        const PhaseSet fig2{1.7 * kPi, 1.6 * kPi, kPi, 0.9 * kPi};
        const double predicted = predicted_peak_m(fig2, {1000, 10});
        CHECK(predicted == doctest::Approx(50.204162333337).epsilon(1e-9));
        // (pi/2) sqrt(N/M) / (2 sin(0.05 pi)) is the M<<N approximation
        const double asymptotic = (kPi / 2.0) * 10.0 / (2.0 * std::sin(0.05 * kPi));
        CHECK(std::abs(predicted - asymptotic) < 0.01);
    }
    SUBCASE("unmatched or degenerate inputs are rejected") {
        CHECK_THROWS_AS(predicted_peak_m(PhaseSet{kPi, kPi / 2.0, kPi, kPi / 2.0 + 3.0},
                                         ProblemSpec{1000, 10}),
                        std::domain_error);
        CHECK_THROWS_AS(predicted_peak_m(PhaseSet{0, 0, 0, 0}, ProblemSpec{1000, 10}),
                        std::domain_error);
    }
}

TEST_CASE("alignment diagnostic") {
    const ProblemSpec spec{1000, 10};
    SUBCASE("mismatched preset: eigenvector locks onto the marked state") {
        const AlignmentReport r =
            g1_alignment({kPi, kPi / 2.0, kPi, kPi / 2.0 + 3.0}, spec);
        CHECK(r.overlap_w == doctest::Approx(0.997849031310740).epsilon(1e-9));
        CHECK(r.product_overlap == doctest::Approx(0.070607655844006).epsilon(1e-9));
        CHECK(r.product_overlap < 0.1);
    }
    SUBCASE("matched preset: product near one half") {
        const AlignmentReport r = g1_alignment({1.7 * kPi, 1.6 * kPi, kPi, 0.9 * kPi}, spec);
        CHECK(r.product_overlap == doctest::Approx(0.549390460752557).epsilon(1e-9));
        CHECK(r.product_overlap > 0.44);
        CHECK(r.product_overlap < 0.56);
    }
    SUBCASE("matched at M = N/2: finite, no smallness claim") {
        const AlignmentReport r =
            g1_alignment({1.7 * kPi, 1.6 * kPi, kPi, 0.9 * kPi}, ProblemSpec{100, 50});
        CHECK(r.product_overlap > 0.0);
        CHECK(r.product_overlap <= 1.0);
    }
    SUBCASE("degenerate kernel rejected") {
        CHECK_THROWS_AS(g1_alignment(PhaseSet{0, 0, 0, 0}, spec), std::domain_error);
    }
}

TEST_CASE("global phase shifts leave p(m) unchanged") {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 50; ++i) {
        const PhaseSet ph = random_phases(rng);
        const PhaseSet shifted = ph.shifted(u(rng), u(rng));
        const ProblemSpec spec = random_spec(rng, 2, 2000);
        for (std::int64_t m : {std::int64_t{1}, std::int64_t{29}, std::int64_t{100}}) {
            CHECK(std::abs(evolve_probability(ph, spec, m) -
                           evolve_probability(shifted, spec, m)) < 1e-10);
        }
    }
}
