#include "groverlab/phase_set.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace groverlab {

namespace {

double normalize_angle(double a) {
    if (!std::isfinite(a)) {
        throw std::domain_error("phase angle must be finite, got " + std::to_string(a));
    }
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod remainder can round up to 2*pi
    return r;
}

}  // namespace

PhaseSet::PhaseSet(double t1, double t2, double p1, double p2)
    : theta1(normalize_angle(t1)),
      theta2(normalize_angle(t2)),
      phi1(normalize_angle(p1)),
      phi2(normalize_angle(p2)),
      alpha(std::polar(1.0, theta1)),
      beta(std::polar(1.0, theta2)),
      gamma(std::polar(1.0, phi1)),
      delta(std::polar(1.0, phi2)) {}

ProblemSpec::ProblemSpec(std::int64_t n, std::int64_t m) : n_total(n), m_marked(m) {
    if (n < 2) {
        throw std::domain_error("database size must be at least 2, got " + std::to_string(n));
    }
    if (m < 1 || m > n - 1) {
        throw std::domain_error("marked count must satisfy 1 <= M <= N-1, got M=" +
                                std::to_string(m) + " N=" + std::to_string(n));
    }
}

ReducedState initial_reduced_state(const ProblemSpec& spec) {
    const double n = static_cast<double>(spec.n_total);
    const double m = static_cast<double>(spec.m_marked);
    return {std::sqrt(m / n), std::sqrt((n - m) / n)};
}

double matching_defect(const PhaseSet& phases) {
    return std::abs(phases.alpha * phases.delta - phases.beta * phases.gamma);
}

}  // namespace groverlab
