#ifndef TMNLCS_TRANSFORM_RECORD_HPP
#define TMNLCS_TRANSFORM_RECORD_HPP

#include <string>

namespace tmnlcs {

// Provenance entry attached to a state: how it was built or transformed.
// Construction routes use Op::construct with the route name in `detail`.
struct TransformRecord {
    enum class Op { construct, photon_add, photon_subtract, kerr, mode_swap };

    Op operation = Op::construct;
    long m = 0;             // photon counts for photon_add / photon_subtract
    long n = 0;
    double gamma_t = 0.0;   // accumulated Kerr phase; stored unreduced
    std::string detail;     // construction route or free-form note
    long input_charge = 0;
    long output_charge = 0;
    std::string induced_function_label;
};

const char* to_string(TransformRecord::Op op);
TransformRecord::Op transform_op_from_string(const std::string& s);

} // namespace tmnlcs

#endif
