#ifndef TMNLCS_VERIFY_HPP
#define TMNLCS_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tmnlcs/constructors.hpp"
#include "tmnlcs/fock_ladder.hpp"
#include "tmnlcs/nlfun.hpp"

namespace tmnlcs {

struct CheckResult {
    std::string name;
    double value = 0.0;   // always finite; error entries carry DBL_MAX
    double tolerance = 0.0;
    bool passed = false;
    std::string error;    // non-empty when the check aborted with an exception
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool overall_passed = true;

    void add(CheckResult check);
    void add_value(const std::string& name, double value, double tolerance);
    void add_error(const std::string& name, double tolerance, const std::string& what);
};

// || f * ab |psi> - alpha |psi> || / max(|alpha|, 1), evaluated on rungs
// 0 .. truncation-1 only: the top rung has no ladder information above it,
// so its mass is reported separately (FockLadderState::tail_mass) rather
// than polluting the residual.
double eigen_residual(const FockLadderState& state, const NonlinearFunction& f,
                      std::complex<double> alpha);

// |<s1|s2>| / (||s1|| ||s2||), in [0, 1] up to roundoff.
double fidelity(const FockLadderState& s1, const FockLadderState& s2);

// On F_0 the two-mode phase operator 1/sqrt((1+N_a)(1+N_b)) ab coincides
// with 1/(1+N_a) ab; reports the difference norm per sample, tolerance
// 1e-12.  Throws ChargeMismatchError for inputs of nonzero charge.
VerificationReport check_phase_operator_equivalence(
    const std::vector<FockLadderState>& q0_states);

struct PhotonStatistics {
    double mean_na = 0.0;
    double mean_nb = 0.0;
    double var_na = 0.0;
    double var_nb = 0.0;
    double cross_corr = 0.0;               // <N_a N_b> - <N_a><N_b>
    std::optional<double> mandel_q_b;      // absent when <N_b> ~ 0
};

// Moments from the |c_n|^2 weights of a normalized state.
PhotonStatistics photon_statistics(const FockLadderState& state);

// Construction checks (eigen residual, dual-route fidelity, truncation
// tail) for every spec in the grid.  Failures of individual points are
// recorded in the report, never thrown.
VerificationReport run_suite(const std::vector<StateSpec>& grid);

// The catalog grid: all four named kinds, |alpha| in {0.1, 0.5, 1, 2},
// arg alpha in {0, pi/3}, q in {0, 1, 2, 5}.
std::vector<StateSpec> default_suite_grid(long n_max = 4096);

// Deterministic short tag used in check names, e.g. "pair(a=0.5+0.866i,q=1)".
std::string spec_tag(const StateSpec& spec);

} // namespace tmnlcs

#endif
