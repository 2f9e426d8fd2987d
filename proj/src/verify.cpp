#include "tmnlcs/verify.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>

namespace tmnlcs {

namespace {

using cplx = std::complex<double>;

std::string format_short(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string format_complex_short(cplx z) {
    return format_short(z.real()) + (z.imag() < 0 ? "-" : "+") +
           format_short(std::abs(z.imag())) + "i";
}

} // namespace

void VerificationReport::add(CheckResult check) {
    overall_passed = overall_passed && check.passed;
    checks.push_back(std::move(check));
}

void VerificationReport::add_value(const std::string& name, double value,
                                   double tolerance) {
    CheckResult c;
    c.name = name;
    c.tolerance = tolerance;
    if (!std::isfinite(value)) {
        c.value = DBL_MAX;
        c.passed = false;
        c.error = "non-finite value";
    } else {
        c.value = value;
        c.passed = value < tolerance;
    }
    add(std::move(c));
}

void VerificationReport::add_error(const std::string& name, double tolerance,
                                   const std::string& what) {
    CheckResult c;
    c.name = name;
    c.value = DBL_MAX;
    c.tolerance = tolerance;
    c.passed = false;
    c.error = what;
    add(std::move(c));
}

double eigen_residual(const FockLadderState& state, const NonlinearFunction& f,
                      std::complex<double> alpha) {
    const FockLadderState lowered = apply_diagonal(apply_lower_both(state), f);
    const long top = state.truncation_n(); // exclusive: rungs 0 .. top-1
    double acc = 0.0;
    for (long n = 0; n < top; ++n) {
        const cplx lhs = lowered.amplitudes[static_cast<std::size_t>(n)];
        const cplx rhs = alpha * state.amplitudes[static_cast<std::size_t>(n)];
        acc += std::norm(lhs - rhs);
    }
    return std::sqrt(acc) / std::max(std::abs(alpha), 1.0);
}

double fidelity(const FockLadderState& s1, const FockLadderState& s2) {
    const double n1 = s1.norm();
    const double n2 = s2.norm();
    if (!(n1 > kEpsFloor) || !(n2 > kEpsFloor))
        throw ZeroStateError("fidelity of a zero state is undefined");
    return std::abs(inner_product(s1, s2)) / (n1 * n2);
}

VerificationReport check_phase_operator_equivalence(
    const std::vector<FockLadderState>& q0_states) {
    const NonlinearFunction phase_full(
        "1/sqrt((1+N_a)(1+N_b))", [](long na, long nb) {
            return cplx(1.0 / std::sqrt(static_cast<double>(na + 1) *
                                        static_cast<double>(nb + 1)),
                        0.0);
        });
    const NonlinearFunction phase_reduced("1/(1+N_a)", [](long na, long) {
        return cplx(1.0 / static_cast<double>(na + 1), 0.0);
    });

    VerificationReport report;
    constexpr double tol = 1e-12;
    for (std::size_t i = 0; i < q0_states.size(); ++i) {
        const FockLadderState& s = q0_states[i];
        if (s.charge_q != 0) throw ChargeMismatchError(s.charge_q, 0);
        const FockLadderState a = apply_diagonal(apply_lower_both(s), phase_full);
        const FockLadderState b = apply_diagonal(apply_lower_both(s), phase_reduced);
        double acc = 0.0;
        for (std::size_t n = 0; n < a.amplitudes.size(); ++n)
            acc += std::norm(a.amplitudes[n] - b.amplitudes[n]);
        report.add_value("phase_operator_equivalence[" + std::to_string(i) + "]",
                         std::sqrt(acc), tol);
    }
    return report;
}

PhotonStatistics photon_statistics(const FockLadderState& state) {
    const long q = state.charge_q;
    double mean_na = 0.0, mean_nb = 0.0, m2_na = 0.0, m2_nb = 0.0, mean_ab = 0.0;
    for (std::size_t n = 0; n < state.amplitudes.size(); ++n) {
        const double w = std::norm(state.amplitudes[n]);
        const double nb = static_cast<double>(n);
        const double na = static_cast<double>(static_cast<long>(n) + q);
        mean_na += w * na;
        mean_nb += w * nb;
        m2_na += w * na * na;
        m2_nb += w * nb * nb;
        mean_ab += w * na * nb;
    }
    PhotonStatistics stats;
    stats.mean_na = mean_na;
    stats.mean_nb = mean_nb;
    stats.var_na = m2_na - mean_na * mean_na;
    stats.var_nb = m2_nb - mean_nb * mean_nb;
    stats.cross_corr = mean_ab - mean_na * mean_nb;
    if (mean_nb >= 1e-12)
        stats.mandel_q_b = (stats.var_nb - mean_nb) / mean_nb;
    return stats;
}

std::string spec_tag(const StateSpec& spec) {
    return std::string(to_string(spec.kind)) + "(a=" +
           format_complex_short(spec.eigenvalue) + ",q=" +
           std::to_string(spec.charge_q) + ")";
}

VerificationReport run_suite(const std::vector<StateSpec>& grid) {
    VerificationReport report;
    constexpr double kResidualTol = 1e-10;
    constexpr double kFidelityTol = 1e-10;

    for (const StateSpec& spec : grid) {
        const std::string tag = spec_tag(spec);
        try {
            const FockLadderState by_rec = build_by_recursion(spec);
            const FockLadderState by_exp = build_by_exponential(spec);
            report.add_value(tag + " eigen_residual",
                             eigen_residual(by_rec, spec.nonlinear_function(),
                                            spec.effective_eigenvalue()),
                             kResidualTol);
            report.add_value(tag + " dual_route_fidelity_defect",
                             std::abs(fidelity(by_rec, by_exp) - 1.0), kFidelityTol);
            if (spec.truncation.mode == TruncationPolicy::Mode::adaptive)
                report.add_value(tag + " truncation_tail_mass", by_rec.tail_mass(),
                                 spec.truncation.tail_tolerance);
        } catch (const FunctionZeroError& e) {
            report.add_error(tag + " construct", kResidualTol,
                             std::string("FunctionZeroError: ") + e.what());
        } catch (const FunctionDomainError& e) {
            report.add_error(tag + " construct", kResidualTol,
                             std::string("FunctionDomainError: ") + e.what());
        } catch (const ConvergenceError& e) {
            report.add_error(tag + " construct", kResidualTol,
                             std::string("ConvergenceError: ") + e.what());
        } catch (const Error& e) {
            report.add_error(tag + " construct", kResidualTol, e.what());
        }
    }
    return report;
}

std::vector<StateSpec> default_suite_grid(long n_max) {
    const StateKind kinds[] = {StateKind::pair, StateKind::perelomov,
                               StateKind::parity_pair, StateKind::parity_perelomov};
    const double moduli[] = {0.1, 0.5, 1.0, 2.0};
    const double args[] = {0.0, M_PI / 3.0};
    const long charges[] = {0, 1, 2, 5};

    std::vector<StateSpec> grid;
    for (StateKind kind : kinds)
        for (double mod : moduli)
            for (double arg : args)
                for (long q : charges) {
                    StateSpec spec;
                    spec.kind = kind;
                    spec.eigenvalue = std::polar(mod, arg);
                    spec.charge_q = q;
                    spec.truncation = TruncationPolicy::adaptive(1e-14, n_max);
                    grid.push_back(spec);
                }
    return grid;
}

} // namespace tmnlcs
