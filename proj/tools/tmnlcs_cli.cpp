// Command-line front end: construct, transform, evolve, stats, verify, sweep.
// All numeric output goes through the fixed float format (17 significant
// digits, lowercase scientific) so identical inputs give identical bytes.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tmnlcs/constructors.hpp"
#include "tmnlcs/expr.hpp"
#include "tmnlcs/io.hpp"
#include "tmnlcs/transforms.hpp"
#include "tmnlcs/verify.hpp"

namespace {

using namespace tmnlcs;
using cplx = std::complex<double>;

constexpr int kExitDomainError = 2;
constexpr int kExitIoError = 3;

cplx parse_complex_flag(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw SchemaError("cannot parse complex value '" + text + "' (expected re,im)");
    }
}

long max_truncation_from_env() {
    if (const char* env = std::getenv("TMNLCS_MAX_TRUNC")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw SchemaError("TMNLCS_MAX_TRUNC must be a positive integer");
    }
    return 4096;
}

void emit_json(const json& j, const std::string& path) {
    if (path == "-")
        std::cout << dump_deterministic(j) << "\n";
    else
        write_json_file(path, j);
}

void emit_text(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(path);
        if (!out) throw IoError("cannot open '" + path + "' for writing");
        out << text;
        if (!out) throw IoError("failed writing '" + path + "'");
    }
}

// Catalog name, or an expression over (na, nb) as a fallback.
NonlinearFunction resolve_function(const std::string& text, long q) {
    try {
        return catalog_by_name(text, q);
    } catch (const UnknownNameError&) {
    }
    try {
        return parse_nonlinear_function(text);
    } catch (const ExprParseError& e) {
        throw SchemaError("'" + text + "' is neither a catalog function name nor a valid expression: " + e.what());
    }
}

struct ConstructOptions {
    std::string kind = "pair";
    std::string eigenvalue = "0,0";
    long q = 0;
    double tail_tol = 1e-14;
    long fixed_n = -1; // < 0: adaptive
    std::string custom_f;
    std::string spec_path;
    std::string output = "-";
    bool allow_unconverged = false;
};

StateSpec spec_from_options(const ConstructOptions& opt, long n_max) {
    if (!opt.spec_path.empty()) return spec_from_json(read_json_file(opt.spec_path), n_max);
    StateSpec spec;
    spec.kind = state_kind_from_string(opt.kind);
    spec.eigenvalue = parse_complex_flag(opt.eigenvalue);
    spec.charge_q = opt.q;
    if (spec.charge_q < 0) throw SchemaError("charge q must be >= 0");
    spec.truncation = opt.fixed_n >= 0 ? TruncationPolicy::fixed(opt.fixed_n)
                                       : TruncationPolicy::adaptive(opt.tail_tol, n_max);
    if (spec.kind == StateKind::custom) {
        if (opt.custom_f.empty())
            throw SchemaError("--kind custom requires --custom-f EXPRESSION");
        spec.custom_f = parse_nonlinear_function(opt.custom_f);
    }
    return spec;
}

int run_construct(const ConstructOptions& opt) {
    const StateSpec spec = spec_from_options(opt, max_truncation_from_env());
    const FockLadderState state = build_by_recursion(spec, opt.allow_unconverged);
    if (!state.converged) {
        if (!opt.allow_unconverged) {
            std::cerr << dump_deterministic(json{
                             {"error", "ConvergenceError"},
                             {"message", "state did not meet the truncation tail criterion"}})
                      << "\n";
            return kExitDomainError;
        }
        std::cerr << "warning: state did not meet the truncation tail criterion\n";
    }
    emit_json(state_to_json(state), opt.output);
    return 0;
}

struct TransformOptions {
    std::vector<long> add;
    std::vector<long> sub;
    std::string f = "unity";
    std::string input;
    std::string output = "-";
};

int run_transform(const TransformOptions& opt) {
    if (opt.add.empty() == opt.sub.empty())
        throw SchemaError("exactly one of --add M N or --sub M N is required");
    const FockLadderState state = state_from_json(read_json_file(opt.input));
    const NonlinearFunction f = resolve_function(opt.f, state.charge_q);
    const TransformResult result =
        opt.add.empty() ? photon_subtract(state, f, opt.sub[0], opt.sub[1])
                        : photon_add(state, f, opt.add[0], opt.add[1]);
    emit_json(state_to_json(result.state), opt.output);
    return 0;
}

int run_evolve(double gamma_t, const std::string& input, const std::string& output) {
    const FockLadderState state = state_from_json(read_json_file(input));
    auto [evolved, rec] = kerr_evolve(state, KerrParams{gamma_t});
    emit_json(state_to_json(evolved), output);
    return 0;
}

int run_stats(const std::string& input, const std::string& output) {
    const FockLadderState state = state_from_json(read_json_file(input));
    emit_json(stats_to_json(photon_statistics(state)), output);
    return 0;
}

struct VerifyOptions {
    std::string suite;
    std::string spec_path;
    std::string state_path;
    std::string f = "unity";
    std::string alpha = "0,0";
    double tol = 1e-10;
    std::string output = "-";
};

int run_verify(const VerifyOptions& opt) {
    const long n_max = max_truncation_from_env();
    VerificationReport report;
    if (!opt.suite.empty()) {
        if (opt.suite != "default")
            throw SchemaError("only '--suite default' is available");
        report = run_suite(default_suite_grid(n_max));
    } else if (!opt.spec_path.empty()) {
        const StateSpec spec = spec_from_json(read_json_file(opt.spec_path), n_max);
        report = run_suite({spec});
    } else if (!opt.state_path.empty()) {
        const FockLadderState state = state_from_json(read_json_file(opt.state_path));
        const NonlinearFunction f = resolve_function(opt.f, state.charge_q);
        report.add_value("eigen_residual",
                         eigen_residual(state, f, parse_complex_flag(opt.alpha)),
                         opt.tol);
        report.add_value("truncation_tail_mass", state.tail_mass(), 1e-10);
    } else {
        throw SchemaError("one of --suite, --spec, or --state is required");
    }
    emit_json(report_to_json(report), opt.output);
    if (!report.overall_passed) {
        std::cerr << dump_deterministic(
                         json{{"error", "VerificationFailed"},
                              {"message", "one or more checks failed"}})
                  << "\n";
        return kExitDomainError;
    }
    return 0;
}

struct SweepOptions {
    std::string kind = "pair";
    std::string eigenvalue = "1,0";
    std::vector<std::string> eigenvalue_list;
    long q = 0;
    std::vector<double> gamma_t;
    std::string target; // "", "parity"
    std::string output = "-";
};

std::string csv_cell(double v) { return format_double(v); }

int run_sweep(const SweepOptions& opt) {
    const long n_max = max_truncation_from_env();
    const StateKind kind = state_kind_from_string(opt.kind);
    if (kind != StateKind::pair && kind != StateKind::perelomov)
        throw SchemaError("sweep supports --kind pair or perelomov");
    if (!opt.target.empty() && opt.target != "parity")
        throw SchemaError("only '--target parity' is available");

    std::vector<cplx> eigenvalues;
    if (opt.eigenvalue_list.empty()) {
        eigenvalues.push_back(parse_complex_flag(opt.eigenvalue));
    } else {
        for (const auto& s : opt.eigenvalue_list)
            eigenvalues.push_back(parse_complex_flag(s));
        std::sort(eigenvalues.begin(), eigenvalues.end(), [](cplx a, cplx b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
    }
    std::vector<double> gammas = opt.gamma_t;
    std::sort(gammas.begin(), gammas.end());

    std::string out =
        "kind,q,eigenvalue_re,eigenvalue_im,gamma_t,fidelity_target,mean_na,mean_nb,"
        "var_na,var_nb,mandel_q_b,cross_corr,error\n";
    std::size_t failures = 0, rows = 0;
    for (const cplx ev : eigenvalues) {
        for (const double g : gammas) {
            ++rows;
            out += std::string(to_string(kind)) + "," + std::to_string(opt.q) + "," +
                   csv_cell(ev.real()) + "," + csv_cell(ev.imag()) + "," + csv_cell(g);
            try {
                StateSpec spec;
                spec.kind = kind;
                spec.eigenvalue = ev;
                spec.charge_q = opt.q;
                spec.truncation = TruncationPolicy::adaptive(1e-14, n_max);
                const FockLadderState base = build_by_recursion(spec);
                auto [evolved, rec] = kerr_evolve(base, KerrParams{g});
                std::string fid_cell;
                if (opt.target == "parity") {
                    const FockLadderState target =
                        build_parity_superposition(kind, ev, opt.q, spec.truncation);
                    fid_cell = csv_cell(fidelity(evolved, target));
                }
                const PhotonStatistics stats = photon_statistics(evolved);
                out += "," + fid_cell + "," + csv_cell(stats.mean_na) + "," +
                       csv_cell(stats.mean_nb) + "," + csv_cell(stats.var_na) + "," +
                       csv_cell(stats.var_nb) + "," +
                       (stats.mandel_q_b ? csv_cell(*stats.mandel_q_b) : "") + "," +
                       csv_cell(stats.cross_corr) + ",\n";
            } catch (const Error& e) {
                ++failures;
                std::string msg = e.what();
                std::replace(msg.begin(), msg.end(), ',', ';');
                out += ",,,,,,,," + msg + "\n";
            }
        }
    }
    emit_text(out, opt.output);
    return (rows > 0 && failures == rows) ? kExitDomainError : 0;
}

template <typename Fn>
int guarded(Fn&& fn) {
    auto emit_error = [](const char* kind, const std::string& message) {
        std::cerr << dump_deterministic(json{{"error", kind}, {"message", message}})
                  << "\n";
    };
    try {
        return fn();
    } catch (const SchemaError& e) {
        emit_error("SchemaError", e.what());
        return kExitIoError;
    } catch (const IoError& e) {
        emit_error("IoError", e.what());
        return kExitIoError;
    } catch (const FunctionDomainError& e) {
        emit_error("FunctionDomainError", e.what());
        return kExitDomainError;
    } catch (const FunctionZeroError& e) {
        emit_error("FunctionZeroError", e.what());
        return kExitDomainError;
    } catch (const ChargeNegativeError& e) {
        emit_error("ChargeNegativeError", e.what());
        return kExitDomainError;
    } catch (const ChargeMismatchError& e) {
        emit_error("ChargeMismatchError", e.what());
        return kExitDomainError;
    } catch (const ZeroStateError& e) {
        emit_error("ZeroStateError", e.what());
        return kExitDomainError;
    } catch (const ConvergenceError& e) {
        emit_error("ConvergenceError", e.what());
        return kExitDomainError;
    } catch (const UnknownNameError& e) {
        emit_error("UnknownNameError", e.what());
        return kExitDomainError;
    } catch (const ExprParseError& e) {
        emit_error("ExprParseError", e.what());
        return kExitDomainError;
    } catch (const Error& e) {
        emit_error("Error", e.what());
        return kExitDomainError;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-mode nonlinear coherent states on the fixed-charge Fock ladder"};
    app.require_subcommand(1);

    ConstructOptions construct_opt;
    auto* construct = app.add_subcommand("construct", "build a state from a spec");
    construct->add_option("--kind", construct_opt.kind,
                          "pair|perelomov|parity_pair|parity_perelomov|custom");
    construct->add_option("--eigenvalue", construct_opt.eigenvalue,
                          "complex eigenvalue as re,im (xi for perelomov kinds)");
    construct->add_option("--q", construct_opt.q, "charge (photon-number difference)");
    construct->add_option("--tail-tol", construct_opt.tail_tol,
                          "adaptive truncation tail tolerance");
    construct->add_option("--fixed-n", construct_opt.fixed_n,
                          "fixed truncation index (disables adaptive mode)");
    construct->add_option("--custom-f", construct_opt.custom_f,
                          "expression over na, nb for --kind custom");
    construct->add_option("--spec", construct_opt.spec_path,
                          "read the state spec from a JSON file instead of flags");
    construct->add_option("-o,--output", construct_opt.output, "output path or -");
    construct->add_flag("--allow-unconverged", construct_opt.allow_unconverged,
                        "emit the state even if the tail criterion failed");

    TransformOptions transform_opt;
    auto* transform = app.add_subcommand("transform", "photon addition / subtraction");
    transform->add_option("--add", transform_opt.add, "photon counts m n to add")
        ->expected(2);
    transform->add_option("--sub", transform_opt.sub, "photon counts m n to subtract")
        ->expected(2);
    transform->add_option("--f", transform_opt.f,
                          "nonlinear function of the input state (catalog name or expression)");
    transform->add_option("-i,--input", transform_opt.input, "input state file")
        ->required();
    transform->add_option("-o,--output", transform_opt.output, "output path or -");

    double gamma_t = 0.0;
    std::string evolve_in, evolve_out = "-";
    auto* evolve = app.add_subcommand("evolve", "Kerr-medium evolution");
    evolve->add_option("--kerr", gamma_t, "accumulated phase gamma*t")->required();
    evolve->add_option("-i,--input", evolve_in, "input state file")->required();
    evolve->add_option("-o,--output", evolve_out, "output path or -");

    std::string stats_in, stats_out = "-";
    auto* stats = app.add_subcommand("stats", "photon statistics of a state");
    stats->add_option("-i,--input", stats_in, "input state file")->required();
    stats->add_option("-o,--output", stats_out, "output path or -");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "verification reports");
    verify->add_option("--suite", verify_opt.suite, "run a named suite (default)");
    verify->add_option("--spec", verify_opt.spec_path, "verify a state spec file");
    verify->add_option("--state", verify_opt.state_path,
                       "verify a state file against --f and --alpha");
    verify->add_option("--f", verify_opt.f, "nonlinear function for --state");
    verify->add_option("--alpha", verify_opt.alpha, "eigenvalue re,im for --state");
    verify->add_option("--tol", verify_opt.tol, "residual tolerance for --state");
    verify->add_option("-o,--output", verify_opt.output, "output path or -");

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    sweep->add_option("--kind", sweep_opt.kind, "pair|perelomov");
    sweep->add_option("--eigenvalue", sweep_opt.eigenvalue, "base eigenvalue re,im");
    sweep->add_option("--eigenvalue-list", sweep_opt.eigenvalue_list,
                      "eigenvalue axis: re,im values (sorted before use)");
    sweep->add_option("--q", sweep_opt.q, "charge");
    sweep->add_option("--gamma-t", sweep_opt.gamma_t,
                      "Kerr phase axis (sorted before use)");
    sweep->add_option("--target", sweep_opt.target,
                      "fidelity target per row: parity");
    sweep->add_option("-o,--output", sweep_opt.output, "output path or -");

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed()) return guarded([&] { return run_construct(construct_opt); });
    if (transform->parsed()) return guarded([&] { return run_transform(transform_opt); });
    if (evolve->parsed())
        return guarded([&] { return run_evolve(gamma_t, evolve_in, evolve_out); });
    if (stats->parsed()) return guarded([&] { return run_stats(stats_in, stats_out); });
    if (verify->parsed()) return guarded([&] { return run_verify(verify_opt); });
    if (sweep->parsed()) return guarded([&] { return run_sweep(sweep_opt); });
    return 0;
}
