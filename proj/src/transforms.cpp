#include "tmnlcs/transforms.hpp"

#include <cmath>

namespace tmnlcs {

namespace {

using cplx = std::complex<double>;

TransformRecord make_record(TransformRecord::Op op, long m, long n, long q_in,
                            long q_out, const std::string& induced_label) {
    TransformRecord rec;
    rec.operation = op;
    rec.m = m;
    rec.n = n;
    rec.input_charge = q_in;
    rec.output_charge = q_out;
    rec.induced_function_label = induced_label;
    return rec;
}

void append_swap_record(FockLadderState& s, long q_in) {
    TransformRecord rec;
    rec.operation = TransformRecord::Op::mode_swap;
    rec.detail = "modes re-labeled at the charge-zero crossing";
    rec.input_charge = q_in;
    rec.output_charge = s.charge_q;
    s.provenance.push_back(std::move(rec));
}

} // namespace

const char* to_string(TransformRecord::Op op) {
    switch (op) {
    case TransformRecord::Op::construct: return "construct";
    case TransformRecord::Op::photon_add: return "photon_add";
    case TransformRecord::Op::photon_subtract: return "photon_subtract";
    case TransformRecord::Op::kerr: return "kerr";
    case TransformRecord::Op::mode_swap: return "mode_swap";
    }
    return "?";
}

TransformRecord::Op transform_op_from_string(const std::string& s) {
    if (s == "construct") return TransformRecord::Op::construct;
    if (s == "photon_add") return TransformRecord::Op::photon_add;
    if (s == "photon_subtract") return TransformRecord::Op::photon_subtract;
    if (s == "kerr") return TransformRecord::Op::kerr;
    if (s == "mode_swap") return TransformRecord::Op::mode_swap;
    throw UnknownNameError(s);
}

TransformResult photon_add(const FockLadderState& state, const NonlinearFunction& f,
                           long m, long n) {
    if (m < 0 || n < 0) throw Error("photon counts must be >= 0");
    const long q_in = state.charge_q;

    FockLadderState s = state;
    bool swapped = false;
    if (m > 0) s = apply_raise_mode(s, Mode::a, m);
    if (n > 0) {
        if (s.charge_q - n >= 0) {
            s = apply_raise_mode(s, Mode::b, n);
        } else {
            // Raise b down to charge zero, where the representation is
            // swap-symmetric, then re-label: the remaining physical b'
            // raises act as label-a raises.
            const long k = s.charge_q;
            if (k > 0) s = apply_raise_mode(s, Mode::b, k);
            swapped = true;
            s = apply_raise_mode(s, Mode::a, n - k);
        }
    }
    if (m > 0 || n > 0) s = normalize(s);

    NonlinearFunction induced = photon_added_function(f, m, n);
    if (swapped) induced = swap_arguments(induced);

    TransformRecord rec = make_record(TransformRecord::Op::photon_add, m, n, q_in,
                                      s.charge_q, induced.label());
    s.provenance.push_back(rec);
    if (swapped) append_swap_record(s, q_in);
    return {std::move(s), std::move(induced), std::move(rec)};
}

TransformResult photon_subtract(const FockLadderState& state, const NonlinearFunction& f,
                                long m, long n) {
    if (m < 0 || n < 0) throw Error("photon counts must be >= 0");
    const long q_in = state.charge_q;

    FockLadderState s = state;
    bool swapped = false;
    if (n > 0) s = apply_lower_mode(s, Mode::b, n); // charge rises, cannot fail
    if (m > 0) {
        if (s.charge_q - m >= 0) {
            s = apply_lower_mode(s, Mode::a, m);
        } else {
            const long k = s.charge_q;
            if (k > 0) s = apply_lower_mode(s, Mode::a, k);
            swapped = true;
            s = apply_lower_mode(s, Mode::b, m - k);
        }
    }
    if (m > 0 || n > 0) {
        if (!(s.norm() > kEpsFloor))
            throw ZeroStateError("photon subtraction annihilated the state");
        s = normalize(s);
    }

    NonlinearFunction induced = photon_subtracted_function(f, m, n);
    if (swapped) induced = swap_arguments(induced);

    TransformRecord rec = make_record(TransformRecord::Op::photon_subtract, m, n, q_in,
                                      s.charge_q, induced.label());
    s.provenance.push_back(rec);
    if (swapped) append_swap_record(s, q_in);
    return {std::move(s), std::move(induced), std::move(rec)};
}

std::pair<FockLadderState, TransformRecord> kerr_evolve(const FockLadderState& state,
                                                        const KerrParams& params) {
    if (!std::isfinite(params.gamma_t))
        throw Error("kerr gamma_t must be finite");
    FockLadderState out = state;
    for (std::size_t n = 0; n < out.amplitudes.size(); ++n) {
        const double nb = static_cast<double>(n); // N_b eigenvalue on F_q
        out.amplitudes[n] *= std::polar(1.0, -params.gamma_t * nb * (nb - 1.0));
    }
    TransformRecord rec;
    rec.operation = TransformRecord::Op::kerr;
    rec.gamma_t = params.gamma_t;
    rec.input_charge = state.charge_q;
    rec.output_charge = out.charge_q;
    out.provenance.push_back(rec);
    return {std::move(out), std::move(rec)};
}

} // namespace tmnlcs
