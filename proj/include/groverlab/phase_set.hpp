#pragma once

#include <cstdint>

#include "groverlab/mat2.hpp"

namespace groverlab {

/// The four rotation phases of the generalized search kernel together with
/// their unit-modulus exponentials.
///
/// Angles are normalized into [0, 2*pi) on construction; the exponentials are
/// always rederivable bit-for-bit as exp(i*angle) of the stored angles.
struct PhaseSet {
    double theta1;  ///< phase on the marked component (alpha = e^{i theta1})
    double theta2;  ///< phase on the unmarked component (beta = e^{i theta2})
    double phi1;    ///< phase on the uniform state (gamma = e^{i phi1})
    double phi2;    ///< phase on its orthogonal complement (delta = e^{i phi2})

    cplx alpha;
    cplx beta;
    cplx gamma;
    cplx delta;

    /// Throws std::domain_error on non-finite input.
    PhaseSet(double t1, double t2, double p1, double p2);

    /// Same phase set with constant offsets added to the theta and phi pairs.
    PhaseSet shifted(double theta_offset, double phi_offset) const {
        return {theta1 + theta_offset, theta2 + theta_offset,
                phi1 + phi_offset, phi2 + phi_offset};
    }
};

inline PhaseSet make_phase_set(double t1, double t2, double p1, double p2) {
    return {t1, t2, p1, p2};
}

/// Database geometry: N items, M of them marked. Requires 1 <= M <= N-1 so
/// that both the marked and the unmarked uniform combinations exist.
struct ProblemSpec {
    std::int64_t n_total;
    std::int64_t m_marked;

    ProblemSpec(std::int64_t n, std::int64_t m);

    double ratio() const {
        return static_cast<double>(m_marked) / static_cast<double>(n_total);
    }
};

/// Amplitudes on the {marked, unmarked} basis of the invariant plane.
struct ReducedState {
    cplx a_w;
    cplx a_r;

    double norm2() const { return std::norm(a_w) + std::norm(a_r); }
    Vec2c as_vec() const { return {a_w, a_r}; }
};

/// The uniform superposition expressed in the invariant plane:
/// (sqrt(M/N), sqrt((N-M)/N)).
ReducedState initial_reduced_state(const ProblemSpec& spec);

/// |alpha*delta - beta*gamma|: scalar distance from the phase matching
/// condition theta1 - theta2 = phi1 - phi2.
double matching_defect(const PhaseSet& phases);

inline constexpr double kDefaultMatchTol = 1e-9;

inline bool is_matched(const PhaseSet& phases, double tol = kDefaultMatchTol) {
    return matching_defect(phases) < tol;
}

}  // namespace groverlab
