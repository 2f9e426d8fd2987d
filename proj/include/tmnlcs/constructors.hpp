#ifndef TMNLCS_CONSTRUCTORS_HPP
#define TMNLCS_CONSTRUCTORS_HPP

#include <complex>
#include <optional>

#include "tmnlcs/fock_ladder.hpp"
#include "tmnlcs/nlfun.hpp"

namespace tmnlcs {

enum class StateKind { pair, perelomov, parity_pair, parity_perelomov, custom };

const char* to_string(StateKind kind);
StateKind state_kind_from_string(const std::string& s);

struct TruncationPolicy {
    enum class Mode { adaptive, fixed };

    Mode mode = Mode::adaptive;
    double tail_tolerance = 1e-14; // adaptive: |c_n|^2 / norm^2 bound
    long fixed_n = 0;              // fixed: truncation index
    long n_max = 4096;             // adaptive: hard cap on the ladder index

    static TruncationPolicy adaptive(double tail_tolerance = 1e-14,
                                     long n_max = 4096) {
        TruncationPolicy p;
        p.mode = Mode::adaptive;
        p.tail_tolerance = tail_tolerance;
        p.n_max = n_max;
        return p;
    }
    static TruncationPolicy fixed(long n) {
        TruncationPolicy p;
        p.mode = Mode::fixed;
        p.fixed_n = n;
        return p;
    }
};

// Declarative recipe for a state.  For the perelomov kinds `eigenvalue`
// holds the displacement parameter xi; the eigenvalue of the defining
// relation is always the derived tau = xi tanh|xi| / |xi|.
struct StateSpec {
    StateKind kind = StateKind::pair;
    std::complex<double> eigenvalue{0.0, 0.0};
    long charge_q = 0;
    TruncationPolicy truncation;
    std::optional<NonlinearFunction> custom_f; // kind == custom only

    // The nonlinear function of the defining eigen-relation for this kind.
    NonlinearFunction nonlinear_function() const;

    // alpha of the eigen-relation: the eigenvalue itself, except for the
    // perelomov kinds where it is tau.
    std::complex<double> effective_eigenvalue() const;
};

// tau = xi tanh(|xi|) / |xi|, continued to 0 at xi = 0.
std::complex<double> perelomov_tau(std::complex<double> xi);

// Coefficient recursion c_{n+1} = alpha c_n / (f(n+q, n) sqrt((n+1)(n+q+1))),
// normalized, with the adaptive or fixed truncation of the spec.  Throws
// FunctionZeroError if f vanishes on the trajectory and ConvergenceError if
// adaptive truncation hits n_max (suppressed by allow_unconverged, which
// returns the state with converged = false instead).
FockLadderState build_by_recursion(const StateSpec& spec, bool allow_unconverged = false);

// Operator series sum_k (1/k!) [g a'b']^k |q,0> with
// g = alpha / (f(N_a-1, N_b-1) N_a), evaluated term by term through
// apply_raise_both and apply_diagonal, halted when a term's norm drops below
// 1e-16 of the running sum; then normalized.  Agrees with build_by_recursion.
FockLadderState build_by_exponential(const StateSpec& spec, bool allow_unconverged = false);

// Closed form of the two-mode Perelomov state: c_n proportional to
// tau^n sqrt((n+q)!/(n! q!)).  ConvergenceError when |tau| >= 1 (cannot
// happen for finite xi; guarded anyway).
FockLadderState build_perelomov_closed(std::complex<double> xi, long q,
                                       const TruncationPolicy& truncation = {});

// (e^{-i pi/4} |i z, q> + e^{+i pi/4} |-i z, q>) / sqrt(2), the superposition
// route to the parity states; base_kind selects pair or perelomov components
// (z = zeta resp. xi).  Renormalized after summation.
FockLadderState build_parity_superposition(StateKind base_kind,
                                           std::complex<double> eigenvalue, long q,
                                           const TruncationPolicy& truncation = {});

} // namespace tmnlcs

#endif
