#include "tmnlcs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tmnlcs/expr.hpp"

namespace tmnlcs {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw SchemaError(msg);
}

double number_at(const json& j, const char* key) {
    require(j.contains(key) && j[key].is_number(), std::string("missing number '") + key + "'");
    return j[key].get<double>();
}

long integer_at(const json& j, const char* key) {
    require(j.contains(key) && j[key].is_number_integer(),
            std::string("missing integer '") + key + "'");
    return j[key].get<long>();
}

std::complex<double> complex_from(const json& j, const char* what) {
    require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
            std::string(what) + " must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

bool all_primitive(const json& arr) {
    for (const auto& v : arr)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

void dump_impl(const json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += pad_in;
            out += json(it.key()).dump();
            out += ": ";
            dump_impl(it.value(), out, indent, depth + 1);
            if (i + 1 < j.size()) out += ",";
            out += "\n";
        }
        out += pad + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (all_primitive(j)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                dump_impl(j[i], out, indent, depth);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad_in;
            dump_impl(j[i], out, indent, depth + 1);
            if (i + 1 < j.size()) out += ",";
            out += "\n";
        }
        out += pad + "]";
        return;
    }
    case json::value_t::string:
        out += j.dump();
        return;
    case json::value_t::boolean:
        out += j.get<bool>() ? "true" : "false";
        return;
    case json::value_t::number_integer:
        out += std::to_string(j.get<long long>());
        return;
    case json::value_t::number_unsigned:
        out += std::to_string(j.get<unsigned long long>());
        return;
    case json::value_t::number_float:
        out += format_double(j.get<double>());
        return;
    case json::value_t::null:
        out += "null";
        return;
    default:
        throw Error("cannot serialize this JSON value type");
    }
}

} // namespace

std::string format_double(double x) {
    if (!std::isfinite(x)) throw Error("refusing to serialize a non-finite number");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

std::string dump_deterministic(const json& j, int indent) {
    std::string out;
    dump_impl(j, out, indent, 0);
    return out;
}

json record_to_json(const TransformRecord& rec) {
    json j;
    j["operation"] = to_string(rec.operation);
    j["input_charge"] = rec.input_charge;
    j["output_charge"] = rec.output_charge;
    if (rec.operation == TransformRecord::Op::photon_add ||
        rec.operation == TransformRecord::Op::photon_subtract) {
        j["m"] = rec.m;
        j["n"] = rec.n;
    }
    if (rec.operation == TransformRecord::Op::kerr) j["gamma_t"] = rec.gamma_t;
    if (!rec.detail.empty()) j["detail"] = rec.detail;
    if (!rec.induced_function_label.empty())
        j["induced_function_label"] = rec.induced_function_label;
    return j;
}

TransformRecord record_from_json(const json& j) {
    require(j.is_object(), "provenance record must be an object");
    require(j.contains("operation") && j["operation"].is_string(),
            "provenance record needs an 'operation' string");
    TransformRecord rec;
    rec.operation = transform_op_from_string(j["operation"].get<std::string>());
    rec.input_charge = integer_at(j, "input_charge");
    rec.output_charge = integer_at(j, "output_charge");
    if (j.contains("m")) rec.m = integer_at(j, "m");
    if (j.contains("n")) rec.n = integer_at(j, "n");
    if (j.contains("gamma_t")) rec.gamma_t = number_at(j, "gamma_t");
    if (j.contains("detail")) rec.detail = j["detail"].get<std::string>();
    if (j.contains("induced_function_label"))
        rec.induced_function_label = j["induced_function_label"].get<std::string>();
    return rec;
}

json state_to_json(const FockLadderState& state) {
    json j;
    j["format_version"] = 1;
    j["charge_q"] = state.charge_q;
    j["truncation_n"] = state.truncation_n();
    json amps = json::array();
    for (const auto& c : state.amplitudes) amps.push_back(complex_to(c));
    j["amplitudes"] = std::move(amps);
    j["converged"] = state.converged;
    json prov = json::array();
    for (const auto& rec : state.provenance) prov.push_back(record_to_json(rec));
    j["provenance"] = std::move(prov);
    return j;
}

FockLadderState state_from_json(const json& j) {
    require(j.is_object(), "state file must be a JSON object");
    require(j.contains("format_version") && j["format_version"].is_number_integer() &&
                j["format_version"].get<long>() == 1,
            "unsupported or missing format_version (expected 1)");
    FockLadderState s;
    s.charge_q = integer_at(j, "charge_q");
    require(s.charge_q >= 0, "charge_q must be >= 0");
    const long trunc = integer_at(j, "truncation_n");
    require(trunc >= 0, "truncation_n must be >= 0");
    require(j.contains("amplitudes") && j["amplitudes"].is_array(),
            "missing 'amplitudes' array");
    const json& amps = j["amplitudes"];
    require(static_cast<long>(amps.size()) == trunc + 1,
            "amplitudes length must equal truncation_n + 1");
    s.amplitudes.reserve(amps.size());
    for (const auto& entry : amps) {
        const std::complex<double> c = complex_from(entry, "amplitude");
        require(std::isfinite(c.real()) && std::isfinite(c.imag()),
                "amplitudes must be finite");
        s.amplitudes.push_back(c);
    }
    require(j.contains("converged") && j["converged"].is_boolean(),
            "missing boolean 'converged'");
    s.converged = j["converged"].get<bool>();
    if (j.contains("provenance")) {
        require(j["provenance"].is_array(), "'provenance' must be an array");
        for (const auto& rec : j["provenance"])
            s.provenance.push_back(record_from_json(rec));
    }
    return s;
}

json spec_to_json(const StateSpec& spec) {
    json j;
    j["kind"] = to_string(spec.kind);
    j["eigenvalue"] = complex_to(spec.eigenvalue);
    j["charge_q"] = spec.charge_q;
    json t;
    if (spec.truncation.mode == TruncationPolicy::Mode::adaptive) {
        t["mode"] = "adaptive";
        t["param"] = spec.truncation.tail_tolerance;
    } else {
        t["mode"] = "fixed";
        t["param"] = spec.truncation.fixed_n;
    }
    j["truncation"] = std::move(t);
    if (spec.kind == StateKind::custom && spec.custom_f)
        j["custom_f"] = spec.custom_f->label();
    return j;
}

StateSpec spec_from_json(const json& j, long n_max) {
    require(j.is_object(), "state spec must be a JSON object");
    require(j.contains("kind") && j["kind"].is_string(), "spec needs a 'kind' string");
    StateSpec spec;
    spec.kind = state_kind_from_string(j["kind"].get<std::string>());
    require(j.contains("eigenvalue"), "spec needs an 'eigenvalue'");
    spec.eigenvalue = complex_from(j["eigenvalue"], "eigenvalue");
    spec.charge_q = integer_at(j, "charge_q");
    require(spec.charge_q >= 0, "charge_q must be >= 0");
    spec.truncation = TruncationPolicy::adaptive(1e-14, n_max);
    if (j.contains("truncation")) {
        const json& t = j["truncation"];
        require(t.is_object() && t.contains("mode") && t["mode"].is_string(),
                "'truncation' needs a 'mode' string");
        const std::string mode = t["mode"].get<std::string>();
        if (mode == "adaptive") {
            spec.truncation =
                TruncationPolicy::adaptive(number_at(t, "param"), n_max);
        } else if (mode == "fixed") {
            spec.truncation = TruncationPolicy::fixed(
                static_cast<long>(number_at(t, "param")));
        } else {
            throw SchemaError("truncation mode must be 'adaptive' or 'fixed'");
        }
    }
    if (spec.kind == StateKind::custom) {
        require(j.contains("custom_f") && j["custom_f"].is_string(),
                "custom kind needs a 'custom_f' expression string");
        spec.custom_f = parse_nonlinear_function(j["custom_f"].get<std::string>());
    }
    return spec;
}

json report_to_json(const VerificationReport& report) {
    json j;
    json checks = json::array();
    for (const auto& c : report.checks) {
        json e;
        e["name"] = c.name;
        e["value"] = c.value;
        e["tolerance"] = c.tolerance;
        e["passed"] = c.passed;
        if (!c.error.empty()) e["error"] = c.error;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["overall_passed"] = report.overall_passed;
    return j;
}

json stats_to_json(const PhotonStatistics& stats) {
    json j;
    j["mean_na"] = stats.mean_na;
    j["mean_nb"] = stats.mean_nb;
    j["var_na"] = stats.var_na;
    j["var_nb"] = stats.var_nb;
    j["cross_corr"] = stats.cross_corr;
    j["mandel_q_b"] = stats.mandel_q_b ? json(*stats.mandel_q_b) : json(nullptr);
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << dump_deterministic(j) << "\n";
    if (!out) throw IoError("failed writing '" + path + "'");
}

} // namespace tmnlcs
