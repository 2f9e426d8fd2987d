#ifndef TMNLCS_TESTS_HELPERS_HPP
#define TMNLCS_TESTS_HELPERS_HPP

#include <complex>
#include <random>

#include "tmnlcs/fock_ladder.hpp"

namespace testutil {

using cplx = std::complex<double>;

// Normalized state with standard-normal complex entries; deterministic for a
// given rng state.
inline tmnlcs::FockLadderState random_state(std::mt19937& rng, long q, long trunc) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    tmnlcs::FockLadderState s;
    s.charge_q = q;
    s.amplitudes.resize(static_cast<std::size_t>(trunc) + 1);
    for (auto& c : s.amplitudes) c = cplx(gauss(rng), gauss(rng));
    return tmnlcs::normalize(s);
}

inline double max_amplitude_distance(const tmnlcs::FockLadderState& a,
                                     const tmnlcs::FockLadderState& b) {
    const std::size_t n = std::max(a.amplitudes.size(), b.amplitudes.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx va = i < a.amplitudes.size() ? a.amplitudes[i] : cplx(0.0);
        const cplx vb = i < b.amplitudes.size() ? b.amplitudes[i] : cplx(0.0);
        worst = std::max(worst, std::abs(va - vb));
    }
    return worst;
}

} // namespace testutil

#endif
