#include "tmnlcs/fock_ladder.hpp"

#include <algorithm>
#include <cmath>

namespace tmnlcs {

namespace {

using cplx = std::complex<double>;

const cplx kZero(0.0, 0.0);

// sqrt((n+1)(n+q+1)): matrix element of ab / a'b' between neighboring rungs.
double rung_element(long n, long q) {
    return std::sqrt(static_cast<double>(n + 1) * static_cast<double>(n + q + 1));
}

} // namespace

double FockLadderState::norm_sq() const {
    double s = 0.0;
    for (const auto& c : amplitudes) s += std::norm(c);
    return s;
}

double FockLadderState::norm() const { return std::sqrt(norm_sq()); }

double FockLadderState::tail_mass() const {
    if (amplitudes.empty()) return 0.0;
    return std::norm(amplitudes.back()) / std::max(norm_sq(), kEpsFloor);
}

FockLadderState basis_ket(long q, long n) {
    FockLadderState s;
    s.charge_q = q;
    s.amplitudes.assign(static_cast<std::size_t>(n) + 1, kZero);
    s.amplitudes.back() = cplx(1.0, 0.0);
    return s;
}

LadderOperatorAction ladder_action(LadderOpKind kind) {
    switch (kind) {
    case LadderOpKind::lower_both:
    case LadderOpKind::raise_both:
    case LadderOpKind::number_a:
    case LadderOpKind::number_b:
    case LadderOpKind::diagonal_function:
    case LadderOpKind::parity_b:
        return {kind, 0};
    case LadderOpKind::raise_a:
        return {kind, +1};
    case LadderOpKind::lower_a:
        return {kind, -1};
    case LadderOpKind::raise_b:
        return {kind, -1};
    case LadderOpKind::lower_b:
        return {kind, +1};
    }
    return {kind, 0};
}

FockLadderState apply_elementary(const FockLadderState& s, LadderOpKind kind) {
    switch (kind) {
    case LadderOpKind::lower_both:
        return apply_lower_both(s);
    case LadderOpKind::raise_both:
        return apply_raise_both(s);
    case LadderOpKind::raise_a:
        return apply_raise_mode(s, Mode::a, 1);
    case LadderOpKind::raise_b:
        return apply_raise_mode(s, Mode::b, 1);
    case LadderOpKind::lower_a:
        return apply_lower_mode(s, Mode::a, 1);
    case LadderOpKind::lower_b:
        return apply_lower_mode(s, Mode::b, 1);
    case LadderOpKind::number_a:
        return apply_diagonal(
            s, NonlinearFunction("N_a", [](long na, long) {
                return cplx(static_cast<double>(na), 0.0);
            }));
    case LadderOpKind::number_b:
        return apply_diagonal(
            s, NonlinearFunction("N_b", [](long, long nb) {
                return cplx(static_cast<double>(nb), 0.0);
            }));
    case LadderOpKind::parity_b:
        return apply_diagonal(s, catalog(CatalogFunction::parity_b));
    case LadderOpKind::diagonal_function:
        throw Error("diagonal_function needs an explicit function; use apply_diagonal");
    }
    throw Error("invalid ladder operator kind");
}

FockLadderState apply_lower_both(const FockLadderState& s) {
    const long n_in = static_cast<long>(s.amplitudes.size());
    FockLadderState out = s;
    out.amplitudes.assign(static_cast<std::size_t>(std::max<long>(n_in - 1, 1)), kZero);
    for (long n = 0; n + 1 < n_in; ++n) {
        out.amplitudes[static_cast<std::size_t>(n)] =
            rung_element(n, s.charge_q) * s.amplitudes[static_cast<std::size_t>(n + 1)];
    }
    return out;
}

FockLadderState apply_raise_both(const FockLadderState& s) {
    FockLadderState out = s;
    out.amplitudes.assign(s.amplitudes.size() + 1, kZero);
    for (std::size_t n = 0; n < s.amplitudes.size(); ++n) {
        out.amplitudes[n + 1] =
            rung_element(static_cast<long>(n), s.charge_q) * s.amplitudes[n];
    }
    return out;
}

FockLadderState apply_diagonal(const FockLadderState& s, const NonlinearFunction& f) {
    FockLadderState out = s;
    for (std::size_t n = 0; n < s.amplitudes.size(); ++n) {
        if (s.amplitudes[n] == kZero) continue;
        out.amplitudes[n] =
            f(static_cast<long>(n) + s.charge_q, static_cast<long>(n)) * s.amplitudes[n];
    }
    return out;
}

FockLadderState apply_raise_mode(const FockLadderState& s, Mode mode, long count) {
    if (count < 1) throw Error("raise count must be >= 1");
    FockLadderState out = s;
    if (mode == Mode::a) {
        // |n+q, n> -> sqrt((n+q+1)...(n+q+count)) |n+q+count, n>
        out.charge_q = s.charge_q + count;
        for (std::size_t n = 0; n < s.amplitudes.size(); ++n) {
            double w = 1.0;
            for (long j = 1; j <= count; ++j)
                w *= static_cast<double>(static_cast<long>(n) + s.charge_q + j);
            out.amplitudes[n] = std::sqrt(w) * s.amplitudes[n];
        }
        return out;
    }
    // mode b: |n+q, n> -> sqrt((n+1)...(n+count)) |n+q, n+count>, charge drops.
    if (s.charge_q - count < 0)
        throw ChargeNegativeError(
            "raising mode b by " + std::to_string(count) + " from charge q=" +
            std::to_string(s.charge_q) + " would make the photon-number difference negative");
    out.charge_q = s.charge_q - count;
    out.amplitudes.assign(s.amplitudes.size() + static_cast<std::size_t>(count), kZero);
    for (std::size_t n = 0; n < s.amplitudes.size(); ++n) {
        double w = 1.0;
        for (long j = 1; j <= count; ++j)
            w *= static_cast<double>(static_cast<long>(n) + j);
        out.amplitudes[n + static_cast<std::size_t>(count)] =
            std::sqrt(w) * s.amplitudes[n];
    }
    return out;
}

FockLadderState apply_lower_mode(const FockLadderState& s, Mode mode, long count) {
    if (count < 1) throw Error("lower count must be >= 1");
    FockLadderState out = s;
    if (mode == Mode::a) {
        // |n+q, n> -> sqrt((n+q)(n+q-1)...(n+q-count+1)) |n+q-count, n>
        if (s.charge_q - count < 0)
            throw ChargeNegativeError(
                "lowering mode a by " + std::to_string(count) + " from charge q=" +
                std::to_string(s.charge_q) +
                " would make the photon-number difference negative");
        out.charge_q = s.charge_q - count;
        for (std::size_t n = 0; n < s.amplitudes.size(); ++n) {
            double w = 1.0;
            for (long j = 0; j < count; ++j)
                w *= static_cast<double>(static_cast<long>(n) + s.charge_q - j);
            out.amplitudes[n] = std::sqrt(w) * s.amplitudes[n];
        }
        return out;
    }
    // mode b: |n+q, n> -> sqrt(n(n-1)...(n-count+1)) |n+q, n-count>; charge
    // rises, components with n < count are annihilated.
    out.charge_q = s.charge_q + count;
    const long n_in = static_cast<long>(s.amplitudes.size());
    out.amplitudes.assign(
        static_cast<std::size_t>(std::max<long>(n_in - count, 1)), kZero);
    for (long n = count; n < n_in; ++n) {
        double w = 1.0;
        for (long j = 0; j < count; ++j) w *= static_cast<double>(n - j);
        out.amplitudes[static_cast<std::size_t>(n - count)] =
            std::sqrt(w) * s.amplitudes[static_cast<std::size_t>(n)];
    }
    return out;
}

std::complex<double> inner_product(const FockLadderState& s1, const FockLadderState& s2) {
    if (s1.charge_q != s2.charge_q)
        throw ChargeMismatchError(s1.charge_q, s2.charge_q);
    const std::size_t n_common = std::min(s1.amplitudes.size(), s2.amplitudes.size());
    cplx acc = kZero;
    for (std::size_t n = 0; n < n_common; ++n)
        acc += std::conj(s1.amplitudes[n]) * s2.amplitudes[n];
    return acc;
}

FockLadderState normalize(const FockLadderState& s) {
    const double nrm = s.norm();
    if (!(nrm > kEpsFloor))
        throw ZeroStateError("cannot normalize a state of norm " + std::to_string(nrm));
    FockLadderState out = s;
    for (auto& c : out.amplitudes) c /= nrm;
    // Gauge: rotate the lowest non-negligible amplitude onto the positive
    // real axis.
    for (const auto& c : out.amplitudes) {
        const double mag = std::abs(c);
        if (mag > kEpsFloor) {
            const cplx phase = std::conj(c) / mag;
            if (phase != cplx(1.0, 0.0)) {
                for (auto& d : out.amplitudes) d *= phase;
            }
            break;
        }
    }
    return out;
}

} // namespace tmnlcs
