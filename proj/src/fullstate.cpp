#include "groverlab/fullstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "groverlab/errors.hpp"

namespace groverlab {

namespace {

// Neumaier-compensated accumulator; keeps long sums at O(eps) error so the
// oracle stays well below the 1e-10 cross-validation tolerance at N ~ 1e7.
struct CompensatedSum {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

void validate_marked(std::int64_t n, const std::vector<std::int64_t>& marked) {
    if (n < 2) {
        throw std::domain_error("state dimension must be at least 2, got " + std::to_string(n));
    }
    if (marked.empty()) {
        throw std::domain_error("marked set must be nonempty");
    }
    if (static_cast<std::int64_t>(marked.size()) >= n) {
        throw std::domain_error("marked set must be a proper subset of the database");
    }
    for (std::size_t i = 0; i < marked.size(); ++i) {
        if (marked[i] < 0 || marked[i] >= n) {
            throw std::domain_error("marked index out of range: " + std::to_string(marked[i]));
        }
        if (i > 0 && marked[i] == marked[i - 1]) {
            throw std::domain_error("duplicate marked index: " + std::to_string(marked[i]));
        }
    }
}

// In-place step over a sorted marked list.
void step_inplace(std::vector<cplx>& psi, const std::vector<std::int64_t>& marked,
                  const PhaseSet& ph) {
    const std::size_t n = psi.size();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));

    std::size_t next = 0;
    CompensatedSum re, im;
    for (std::size_t i = 0; i < n; ++i) {
        cplx v = psi[i];
        if (next < marked.size() && static_cast<std::size_t>(marked[next]) == i) {
            v *= ph.alpha;
            ++next;
        } else {
            v *= ph.beta;
        }
        psi[i] = v;
        re.add(v.real());
        im.add(v.imag());
    }
    // <s|psi> |s> contributes the same constant to every amplitude.
    const cplx shift = (ph.gamma - ph.delta) * cplx{re.value(), im.value()} *
                       (inv_sqrt_n * inv_sqrt_n);
    for (std::size_t i = 0; i < n; ++i) {
        psi[i] = -(ph.delta * psi[i] + shift);
    }
}

double marked_prob(const std::vector<cplx>& psi, const std::vector<std::int64_t>& marked) {
    CompensatedSum p;
    for (std::int64_t idx : marked) p.add(std::norm(psi[static_cast<std::size_t>(idx)]));
    return p.value();
}

}  // namespace

FullState build_full_initial(std::int64_t n, std::vector<std::int64_t> marked) {
    std::sort(marked.begin(), marked.end());
    validate_marked(n, marked);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    return {std::vector<cplx>(static_cast<std::size_t>(n), cplx{amp, 0.0}), std::move(marked)};
}

std::vector<std::int64_t> first_m_indices(std::int64_t m) {
    std::vector<std::int64_t> idx(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    return idx;
}

FullState apply_kernel_full(FullState state, const PhaseSet& phases) {
    validate_marked(static_cast<std::int64_t>(state.amplitudes.size()), state.marked);
    step_inplace(state.amplitudes, state.marked, phases);
    return state;
}

double marked_probability(const FullState& state) {
    return marked_prob(state.amplitudes, state.marked);
}

std::vector<double> run_full(std::int64_t n, const std::vector<std::int64_t>& marked,
                             const PhaseSet& phases, std::int64_t m_max) {
    if (m_max < 0) throw std::domain_error("m_max must be nonnegative");
    if (m_max > kMaxFullSteps) {
        throw ResourceLimitError("full-state run of " + std::to_string(m_max) +
                                 " steps exceeds the " + std::to_string(kMaxFullSteps) +
                                 "-step guard");
    }
    FullState state = build_full_initial(n, marked);

    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(m_max) + 1);
    series.push_back(marked_prob(state.amplitudes, state.marked));
    for (std::int64_t m = 1; m <= m_max; ++m) {
        step_inplace(state.amplitudes, state.marked, phases);
        series.push_back(marked_prob(state.amplitudes, state.marked));
    }
    return series;
}

}  // namespace groverlab
