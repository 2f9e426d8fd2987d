#ifndef TMNLCS_NLFUN_HPP
#define TMNLCS_NLFUN_HPP

#include <complex>
#include <functional>
#include <string>
#include <string_view>

#include "tmnlcs/errors.hpp"

namespace tmnlcs {

// Diagonal nonlinear function f(N_a, N_b) of the two number operators,
// represented by its values on integer occupation pairs.  Functions are
// immutable closures; equality is only ever meaningful pointwise.
class NonlinearFunction {
public:
    using EvalFn = std::function<std::complex<double>(long na, long nb)>;
    using ZeroGuard = std::function<bool(long na, long nb)>;

    NonlinearFunction(std::string label, EvalFn eval)
        : label_(std::move(label)), eval_(std::move(eval)) {}

    NonlinearFunction(std::string label, EvalFn eval, ZeroGuard zero_guard)
        : label_(std::move(label)),
          eval_(std::move(eval)),
          zero_guard_(std::move(zero_guard)) {}

    // May throw FunctionDomainError; deterministic for fixed arguments.
    std::complex<double> operator()(long na, long nb) const {
        return eval_(na, nb);
    }

    // True iff f vanishes at (na, nb).  Falls back to evaluating when no
    // dedicated guard was installed.
    bool vanishes_at(long na, long nb) const {
        if (zero_guard_) return zero_guard_(na, nb);
        return eval_(na, nb) == std::complex<double>(0.0, 0.0);
    }

    const std::string& label() const { return label_; }

private:
    std::string label_;
    EvalFn eval_;
    ZeroGuard zero_guard_;
};

// Named catalog entries.  perelomov_full is the only one that carries the
// charge explicitly; the others ignore the q argument.
enum class CatalogFunction {
    unity,              // f = 1                  (pair coherent states)
    perelomov_full,     // f = 2/(N_a+N_b+q+2)
    perelomov_reduced,  // f = 1/(N_a+1)          (equal to the full form on F_q)
    parity_b,           // f = (-1)^N_b
    parity_perelomov,   // f = (-1)^N_b/(N_a+1)
};

NonlinearFunction catalog(CatalogFunction name, long q = 0);

// String lookup used by the CLI; throws UnknownNameError.
NonlinearFunction catalog_by_name(std::string_view name, long q = 0);

// g(na, nb) = f(na + da, nb + db).  Domain violations surface when the
// shifted point falls outside f's own domain, at evaluation time.
NonlinearFunction shifted(const NonlinearFunction& f, long da, long db);

// Pointwise product.
NonlinearFunction product(const NonlinearFunction& f, const NonlinearFunction& g);

// g(na, nb) = f(nb, na).  Needed when a transform re-labels the modes.
NonlinearFunction swap_arguments(const NonlinearFunction& f);

// Nonlinear function satisfied by the m,n photon-added state:
//   f(N_a-m, N_b-n) * (1 - m/(N_a+1)) * (1 - n/(N_b+1)).
// The polynomial factors vanish on the rings N_a = m-1 and N_b = n-1, where
// the composite is zero without consulting f; past those rings the shifted
// argument is genuinely out of range and evaluation throws.
NonlinearFunction photon_added_function(const NonlinearFunction& f, long m, long n);

// Nonlinear function satisfied by the m,n photon-subtracted state:
//   f(N_a+m, N_b+n).
NonlinearFunction photon_subtracted_function(const NonlinearFunction& f, long m, long n);

// (-1)^k for any integer k.
inline double parity_sign(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

} // namespace tmnlcs

#endif
