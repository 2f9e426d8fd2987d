#ifndef TMNLCS_FOCK_LADDER_HPP
#define TMNLCS_FOCK_LADDER_HPP

#include <complex>
#include <vector>

#include "tmnlcs/errors.hpp"
#include "tmnlcs/nlfun.hpp"
#include "tmnlcs/transform_record.hpp"

namespace tmnlcs {

// Underflow guard for norms and phase gauges.
inline constexpr double kEpsFloor = 1e-300;

// State on the fixed-charge ladder F_q = span{|n+q, n> : n = 0, 1, 2, ...}.
// amplitudes[n] multiplies the basis ket |n+q, n>; the occupations are never
// stored explicitly.  Values are immutable after construction: every
// operation below is a pure function returning a new state.
struct FockLadderState {
    long charge_q = 0;
    std::vector<std::complex<double>> amplitudes; // c_0 ... c_truncation
    bool converged = true;
    std::vector<TransformRecord> provenance;

    long truncation_n() const {
        return static_cast<long>(amplitudes.size()) - 1;
    }

    double norm_sq() const;
    double norm() const;

    // |c_N|^2 / max(norm^2, eps); the mass sitting on the top retained rung.
    double tail_mass() const;
};

// Basis ket |n+q, n> as a ladder state of truncation n.
FockLadderState basis_ket(long q, long n);

enum class Mode { a, b };

enum class LadderOpKind {
    lower_both,        // ab
    raise_both,        // a'b' (a-dagger b-dagger)
    raise_a,
    raise_b,
    lower_a,
    lower_b,
    number_a,
    number_b,
    diagonal_function, // f(N_a, N_b); needs an explicit function argument
    parity_b,          // (-1)^N_b
};

// Change in the canonical charge q caused by one application of the action.
struct LadderOperatorAction {
    LadderOpKind kind;
    int charge_shift;
};

LadderOperatorAction ladder_action(LadderOpKind kind);

// Single application of any kind except diagonal_function (which needs f;
// use apply_diagonal).  Mode counts are 1.
FockLadderState apply_elementary(const FockLadderState& s, LadderOpKind kind);

// ab: out[n] = sqrt((n+1)(n+q+1)) * in[n+1].  Charge unchanged, truncation
// shrinks by one rung, output not renormalized.
FockLadderState apply_lower_both(const FockLadderState& s);

// a'b': out[n+1] = sqrt((n+1)(n+q+1)) * in[n].  Charge unchanged, truncation
// grows by one rung, output not renormalized.
FockLadderState apply_raise_both(const FockLadderState& s);

// c_n -> f(n+q, n) * c_n.  Components that are exactly zero pass through
// without evaluating f: the diagonal action only needs f on the state's
// support.  Throws FunctionDomainError where f is undefined at a required
// index pair.
FockLadderState apply_diagonal(const FockLadderState& s, const NonlinearFunction& f);

// a'^count (mode a) or b'^count (mode b).  Raising a shifts the charge up by
// count; raising b shifts it down and moves every component one rung up per
// photon.  Throws ChargeNegativeError when the canonical charge would go
// negative (callers that want mode re-labeling handle it; see transforms).
// Output not renormalized.
FockLadderState apply_raise_mode(const FockLadderState& s, Mode mode, long count);

// a^count / b^count, the adjoint of apply_raise_mode; components with
// insufficient occupation are annihilated.  Same charge rules.
FockLadderState apply_lower_mode(const FockLadderState& s, Mode mode, long count);

// <s1|s2> = sum conj(c1_n) c2_n, zero-padding the shorter truncation.
// Throws ChargeMismatchError when the charge sectors differ.
std::complex<double> inner_product(const FockLadderState& s1, const FockLadderState& s2);

// Unit-norm copy with the phase gauge fixed: the lowest amplitude with
// |c| > eps_floor is made real and positive.  Throws ZeroStateError when
// the norm is at or below the underflow floor.
FockLadderState normalize(const FockLadderState& s);

} // namespace tmnlcs

#endif
