#ifndef TMNLCS_IO_HPP
#define TMNLCS_IO_HPP

#include <string>

#include <json.hpp>

#include "tmnlcs/constructors.hpp"
#include "tmnlcs/fock_ladder.hpp"
#include "tmnlcs/verify.hpp"

namespace tmnlcs {

using json = nlohmann::json;

// State file schema (format_version 1):
//   { "format_version": 1, "charge_q": int, "truncation_n": int,
//     "amplitudes": [[re, im], ...], "converged": bool,
//     "provenance": [record, ...] }
json state_to_json(const FockLadderState& state);
FockLadderState state_from_json(const json& j); // throws SchemaError

json record_to_json(const TransformRecord& rec);
TransformRecord record_from_json(const json& j);

// Spec schema:
//   { "kind": str, "eigenvalue": [re, im], "charge_q": int,
//     "truncation": {"mode": "adaptive"|"fixed", "param": number},
//     "custom_f": str (expression; custom kind only) }
json spec_to_json(const StateSpec& spec);
StateSpec spec_from_json(const json& j, long n_max = 4096);

json report_to_json(const VerificationReport& report);
json stats_to_json(const PhotonStatistics& stats);

// Byte-deterministic serialization: object keys in lexicographic order,
// floating-point numbers as lowercase scientific with 17 significant
// digits.  Non-finite numbers are rejected.
std::string dump_deterministic(const json& j, int indent = 2);

json read_json_file(const std::string& path);          // IoError / SchemaError
void write_json_file(const std::string& path, const json& j);

// "%.16e" of a double; the fixed CLI float format.
std::string format_double(double x);

} // namespace tmnlcs

#endif
