#ifndef TMNLCS_ERRORS_HPP
#define TMNLCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tmnlcs {

// Base class for all library errors, so callers can catch the whole family.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A nonlinear function was evaluated outside its domain (e.g. division by
// zero, or a shifted argument that the underlying function cannot accept).
// Carries the offending (n_a, n_b) point.
class FunctionDomainError : public Error {
public:
    FunctionDomainError(const std::string& what_fn, long na, long nb)
        : Error(what_fn + " undefined at (n_a=" + std::to_string(na) +
                ", n_b=" + std::to_string(nb) + ")"),
          na_(na), nb_(nb) {}
    long na() const { return na_; }
    long nb() const { return nb_; }
private:
    long na_;
    long nb_;
};

// The nonlinear function vanishes on the coefficient trajectory, so the
// recursion cannot continue past the named rung.
class FunctionZeroError : public Error {
public:
    FunctionZeroError(const std::string& label, long rung)
        : Error("nonlinear function '" + label + "' vanishes at rung n=" +
                std::to_string(rung)),
          rung_(rung) {}
    long rung() const { return rung_; }
private:
    long rung_;
};

// An operation would drive the canonical photon-number difference below
// zero; the caller must re-label modes (see transforms) or reject.
class ChargeNegativeError : public Error {
public:
    explicit ChargeNegativeError(const std::string& msg) : Error(msg) {}
};

// Two states in different charge sectors were combined.  Such states are
// orthogonal by construction; the error forces callers to be explicit.
class ChargeMismatchError : public Error {
public:
    ChargeMismatchError(long q1, long q2)
        : Error("charge mismatch: q=" + std::to_string(q1) + " vs q=" +
                std::to_string(q2)) {}
};

// A state with (numerically) zero norm cannot be normalized.
class ZeroStateError : public Error {
public:
    explicit ZeroStateError(const std::string& msg) : Error(msg) {}
};

// Adaptive truncation hit its hard cap before the tail criterion was met.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Unknown catalog name.
class UnknownNameError : public Error {
public:
    explicit UnknownNameError(const std::string& name)
        : Error("unknown catalog function '" + name + "'") {}
};

// Syntax error in the little (na, nb) expression grammar.
class ExprParseError : public Error {
public:
    explicit ExprParseError(const std::string& msg) : Error(msg) {}
};

// A file does not match the expected JSON schema.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// Filesystem-level failure (missing file, unreadable, unwritable).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace tmnlcs

#endif
