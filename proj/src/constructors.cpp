#include "tmnlcs/constructors.hpp"

#include <cmath>

namespace tmnlcs {

namespace {

using cplx = std::complex<double>;

double rung_element(long n, long q) {
    return std::sqrt(static_cast<double>(n + 1) * static_cast<double>(n + q + 1));
}

// Grow the coefficient vector from c_0 = 1 using ratio(n) = c_{n+1}/c_n,
// under the given truncation policy.  Adaptive mode stops once the last two
// rungs each carry less than tail_tolerance of the total weight; hitting
// n_max clears `converged` instead.
std::vector<cplx> grow_amplitudes(const std::function<cplx(long)>& ratio,
                                  const TruncationPolicy& policy, bool& converged) {
    std::vector<cplx> c{cplx(1.0, 0.0)};
    double total = 1.0;
    converged = true;

    auto extend = [&] {
        const long n = static_cast<long>(c.size()) - 1;
        const cplx next = ratio(n) * c.back();
        if (!std::isfinite(next.real()) || !std::isfinite(next.imag()))
            throw ConvergenceError("amplitude is not finite at rung n=" +
                                   std::to_string(n + 1));
        c.push_back(next);
        total += std::norm(next);
    };

    if (policy.mode == TruncationPolicy::Mode::fixed) {
        for (long n = 0; n < policy.fixed_n; ++n) extend();
        if (c.size() >= 2) {
            const double floor_total = std::max(total, kEpsFloor);
            converged =
                std::norm(c[c.size() - 1]) / floor_total < policy.tail_tolerance &&
                std::norm(c[c.size() - 2]) / floor_total < policy.tail_tolerance;
        } else {
            converged = false;
        }
        return c;
    }

    while (true) {
        if (c.size() >= 3) {
            const double floor_total = std::max(total, kEpsFloor);
            if (std::norm(c[c.size() - 1]) / floor_total < policy.tail_tolerance &&
                std::norm(c[c.size() - 2]) / floor_total < policy.tail_tolerance)
                break;
        }
        if (static_cast<long>(c.size()) - 1 >= policy.n_max) {
            converged = false;
            break;
        }
        extend();
    }
    return c;
}

FockLadderState assemble(long q, std::vector<cplx> amplitudes, bool converged,
                         const char* route, const std::string& fn_label) {
    FockLadderState s;
    s.charge_q = q;
    s.amplitudes = std::move(amplitudes);
    s.converged = converged;
    s = normalize(s);
    TransformRecord rec;
    rec.operation = TransformRecord::Op::construct;
    rec.detail = route;
    rec.input_charge = q;
    rec.output_charge = q;
    rec.induced_function_label = fn_label;
    s.provenance.push_back(std::move(rec));
    return s;
}

} // namespace

const char* to_string(StateKind kind) {
    switch (kind) {
    case StateKind::pair: return "pair";
    case StateKind::perelomov: return "perelomov";
    case StateKind::parity_pair: return "parity_pair";
    case StateKind::parity_perelomov: return "parity_perelomov";
    case StateKind::custom: return "custom";
    }
    return "?";
}

StateKind state_kind_from_string(const std::string& s) {
    if (s == "pair") return StateKind::pair;
    if (s == "perelomov") return StateKind::perelomov;
    if (s == "parity_pair") return StateKind::parity_pair;
    if (s == "parity_perelomov") return StateKind::parity_perelomov;
    if (s == "custom") return StateKind::custom;
    throw UnknownNameError(s);
}

NonlinearFunction StateSpec::nonlinear_function() const {
    switch (kind) {
    case StateKind::pair:
        return catalog(CatalogFunction::unity);
    case StateKind::perelomov:
        return catalog(CatalogFunction::perelomov_reduced);
    case StateKind::parity_pair:
        return catalog(CatalogFunction::parity_b);
    case StateKind::parity_perelomov:
        return catalog(CatalogFunction::parity_perelomov);
    case StateKind::custom:
        if (!custom_f) throw Error("custom state spec has no nonlinear function");
        return *custom_f;
    }
    throw Error("invalid state kind");
}

std::complex<double> StateSpec::effective_eigenvalue() const {
    if (kind == StateKind::perelomov || kind == StateKind::parity_perelomov)
        return perelomov_tau(eigenvalue);
    return eigenvalue;
}

std::complex<double> perelomov_tau(std::complex<double> xi) {
    const double mag = std::abs(xi);
    if (mag == 0.0) return {0.0, 0.0};
    return xi * (std::tanh(mag) / mag);
}

FockLadderState build_by_recursion(const StateSpec& spec, bool allow_unconverged) {
    const NonlinearFunction f = spec.nonlinear_function();
    const cplx alpha = spec.effective_eigenvalue();
    const long q = spec.charge_q;

    auto ratio = [&f, alpha, q](long n) -> cplx {
        if (f.vanishes_at(n + q, n)) throw FunctionZeroError(f.label(), n);
        return alpha / (f(n + q, n) * rung_element(n, q));
    };

    bool converged = true;
    std::vector<cplx> c = grow_amplitudes(ratio, spec.truncation, converged);
    if (!converged && spec.truncation.mode == TruncationPolicy::Mode::adaptive &&
        !allow_unconverged)
        throw ConvergenceError("recursion did not meet the tail criterion by n_max=" +
                               std::to_string(spec.truncation.n_max));
    return assemble(q, std::move(c), converged, "recursion", f.label());
}

FockLadderState build_by_exponential(const StateSpec& spec, bool allow_unconverged) {
    const NonlinearFunction f = spec.nonlinear_function();
    const cplx alpha = spec.effective_eigenvalue();
    const long q = spec.charge_q;

    // g of the exponential form; only ever evaluated on rungs reached by
    // raising, where N_a >= 1 and the f arguments sit on the trajectory.
    NonlinearFunction g(
        "exp_series_g(" + f.label() + ")",
        [f, alpha](long na, long nb) -> cplx {
            if (na == 0)
                throw FunctionDomainError("alpha/(f(N_a-1,N_b-1) N_a)", na, nb);
            if (f.vanishes_at(na - 1, nb - 1))
                throw FunctionZeroError(f.label(), nb - 1);
            return alpha / (f(na - 1, nb - 1) * static_cast<double>(na));
        });

    const bool fixed = spec.truncation.mode == TruncationPolicy::Mode::fixed;
    const long term_cap = fixed ? spec.truncation.fixed_n : spec.truncation.n_max;
    constexpr double kTermHalt = 1e-16;

    FockLadderState sum = basis_ket(q, 0);
    FockLadderState term = sum;
    bool converged = true;
    long k = 0;
    while (k < term_cap) {
        term = apply_diagonal(apply_raise_both(term), g);
        const double scale = 1.0 / static_cast<double>(k + 1);
        for (auto& a : term.amplitudes) a *= scale;
        ++k;

        if (sum.amplitudes.size() < term.amplitudes.size())
            sum.amplitudes.resize(term.amplitudes.size(), cplx(0.0, 0.0));
        for (std::size_t i = 0; i < term.amplitudes.size(); ++i)
            sum.amplitudes[i] += term.amplitudes[i];

        const double term_norm = term.norm();
        if (!std::isfinite(term_norm))
            throw ConvergenceError("series term is not finite at k=" +
                                   std::to_string(k));
        if (!fixed) {
            if (term_norm <= kTermHalt * sum.norm()) break;
            if (k >= term_cap) converged = false; // cap hit while still adding weight
        }
    }
    if (!converged && !allow_unconverged)
        throw ConvergenceError("exponential series did not converge by n_max=" +
                               std::to_string(term_cap));
    return assemble(q, std::move(sum.amplitudes), converged, "exponential", f.label());
}

FockLadderState build_perelomov_closed(std::complex<double> xi, long q,
                                       const TruncationPolicy& truncation) {
    const cplx tau = perelomov_tau(xi);
    if (std::abs(tau) >= 1.0)
        throw ConvergenceError("perelomov series requires |tau| < 1, got |tau|=" +
                               std::to_string(std::abs(tau)));

    auto ratio = [tau, q](long n) -> cplx {
        return tau * std::sqrt(static_cast<double>(n + q + 1) /
                               static_cast<double>(n + 1));
    };

    bool converged = true;
    std::vector<cplx> c = grow_amplitudes(ratio, truncation, converged);
    if (!converged && truncation.mode == TruncationPolicy::Mode::adaptive)
        throw ConvergenceError("perelomov closed form did not converge by n_max=" +
                               std::to_string(truncation.n_max));
    return assemble(q, std::move(c), converged, "perelomov_closed", "perelomov_reduced");
}

FockLadderState build_parity_superposition(StateKind base_kind,
                                           std::complex<double> eigenvalue, long q,
                                           const TruncationPolicy& truncation) {
    const cplx i_unit(0.0, 1.0);
    FockLadderState plus, minus;
    if (base_kind == StateKind::pair) {
        StateSpec sp;
        sp.kind = StateKind::pair;
        sp.charge_q = q;
        sp.truncation = truncation;
        sp.eigenvalue = i_unit * eigenvalue;
        plus = build_by_recursion(sp);
        sp.eigenvalue = -i_unit * eigenvalue;
        minus = build_by_recursion(sp);
    } else if (base_kind == StateKind::perelomov) {
        plus = build_perelomov_closed(i_unit * eigenvalue, q, truncation);
        minus = build_perelomov_closed(-i_unit * eigenvalue, q, truncation);
    } else {
        throw Error("parity superposition base kind must be pair or perelomov");
    }

    const cplx phase_plus = std::polar(1.0, -M_PI / 4.0);
    const cplx phase_minus = std::polar(1.0, M_PI / 4.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    FockLadderState out;
    out.charge_q = q;
    out.converged = plus.converged && minus.converged;
    out.amplitudes.assign(std::max(plus.amplitudes.size(), minus.amplitudes.size()),
                          cplx(0.0, 0.0));
    for (std::size_t n = 0; n < out.amplitudes.size(); ++n) {
        cplx v(0.0, 0.0);
        if (n < plus.amplitudes.size()) v += phase_plus * plus.amplitudes[n];
        if (n < minus.amplitudes.size()) v += phase_minus * minus.amplitudes[n];
        out.amplitudes[n] = v * inv_sqrt2;
    }
    // The two components are not orthogonal, so renormalize.
    out = normalize(out);
    TransformRecord rec;
    rec.operation = TransformRecord::Op::construct;
    rec.detail = "parity_superposition";
    rec.input_charge = q;
    rec.output_charge = q;
    rec.induced_function_label = base_kind == StateKind::pair
                                     ? catalog(CatalogFunction::parity_b).label()
                                     : catalog(CatalogFunction::parity_perelomov).label();
    out.provenance.push_back(std::move(rec));
    return out;
}

} // namespace tmnlcs
