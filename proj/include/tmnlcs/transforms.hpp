#ifndef TMNLCS_TRANSFORMS_HPP
#define TMNLCS_TRANSFORMS_HPP

#include "tmnlcs/fock_ladder.hpp"
#include "tmnlcs/nlfun.hpp"
#include "tmnlcs/transform_record.hpp"

namespace tmnlcs {

struct KerrParams {
    double gamma_t = 0.0; // accumulated phase; never reduced mod 2 pi in computation
};

struct TransformResult {
    FockLadderState state;
    NonlinearFunction induced_function;
    TransformRecord record;
};

// Normalized a'^m b'^n |psi> together with the nonlinear function the output
// satisfies (photon_added_function of f) and a provenance record.  Raising
// past the charge-zero point re-labels the modes: the output charge is
// |q + m - n|, the induced function is composed with the argument swap, and
// a mode_swap record is appended to the state's provenance.
TransformResult photon_add(const FockLadderState& state, const NonlinearFunction& f,
                           long m, long n);

// Normalized a^m b^n |psi> with the induced function f(N_a+m, N_b+n); same
// mode re-labeling rules.  Throws ZeroStateError when the lowering
// annihilates the whole state.
TransformResult photon_subtract(const FockLadderState& state, const NonlinearFunction& f,
                                long m, long n);

// Kerr medium evolution: c_n -> exp(-i gamma_t n(n-1)) c_n.  Charge and norm
// are preserved.
std::pair<FockLadderState, TransformRecord> kerr_evolve(const FockLadderState& state,
                                                        const KerrParams& params);

} // namespace tmnlcs

#endif
