#include "tmnlcs/nlfun.hpp"

namespace tmnlcs {

namespace {

bool never_zero(long, long) { return false; }

} // namespace

NonlinearFunction catalog(CatalogFunction name, long q) {
    switch (name) {
    case CatalogFunction::unity:
        return NonlinearFunction(
            "unity",
            [](long, long) { return std::complex<double>(1.0, 0.0); },
            never_zero);
    case CatalogFunction::perelomov_full:
        return NonlinearFunction(
            "perelomov_full[q=" + std::to_string(q) + "]",
            [q](long na, long nb) {
                const long denom = na + nb + q + 2;
                if (denom == 0)
                    throw FunctionDomainError("2/(N_a+N_b+q+2)", na, nb);
                return std::complex<double>(2.0 / static_cast<double>(denom), 0.0);
            },
            never_zero);
    case CatalogFunction::perelomov_reduced:
        return NonlinearFunction(
            "perelomov_reduced",
            [](long na, long nb) {
                if (na == -1)
                    throw FunctionDomainError("1/(N_a+1)", na, nb);
                return std::complex<double>(1.0 / static_cast<double>(na + 1), 0.0);
            },
            never_zero);
    case CatalogFunction::parity_b:
        return NonlinearFunction(
            "parity_b",
            [](long, long nb) { return std::complex<double>(parity_sign(nb), 0.0); },
            never_zero);
    case CatalogFunction::parity_perelomov:
        return NonlinearFunction(
            "parity_perelomov",
            [](long na, long nb) {
                if (na == -1)
                    throw FunctionDomainError("(-1)^N_b/(N_a+1)", na, nb);
                return std::complex<double>(
                    parity_sign(nb) / static_cast<double>(na + 1), 0.0);
            },
            never_zero);
    }
    throw UnknownNameError("<invalid catalog enum>");
}

NonlinearFunction catalog_by_name(std::string_view name, long q) {
    if (name == "unity") return catalog(CatalogFunction::unity);
    if (name == "perelomov_full") return catalog(CatalogFunction::perelomov_full, q);
    if (name == "perelomov_reduced") return catalog(CatalogFunction::perelomov_reduced);
    if (name == "parity_b") return catalog(CatalogFunction::parity_b);
    if (name == "parity_perelomov") return catalog(CatalogFunction::parity_perelomov);
    throw UnknownNameError(std::string(name));
}

NonlinearFunction shifted(const NonlinearFunction& f, long da, long db) {
    std::string label = "shift[" + std::to_string(da) + "," + std::to_string(db) +
                        "](" + f.label() + ")";
    return NonlinearFunction(
        std::move(label),
        [f, da, db](long na, long nb) { return f(na + da, nb + db); },
        [f, da, db](long na, long nb) { return f.vanishes_at(na + da, nb + db); });
}

NonlinearFunction product(const NonlinearFunction& f, const NonlinearFunction& g) {
    std::string label = f.label() + "*" + g.label();
    return NonlinearFunction(
        std::move(label),
        [f, g](long na, long nb) { return f(na, nb) * g(na, nb); },
        [f, g](long na, long nb) {
            return f.vanishes_at(na, nb) || g.vanishes_at(na, nb);
        });
}

NonlinearFunction swap_arguments(const NonlinearFunction& f) {
    return NonlinearFunction(
        "swap(" + f.label() + ")",
        [f](long na, long nb) { return f(nb, na); },
        [f](long na, long nb) { return f.vanishes_at(nb, na); });
}

NonlinearFunction photon_added_function(const NonlinearFunction& f, long m, long n) {
    if (m == 0 && n == 0) return f;

    std::string label = "added[m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                        "](" + f.label() + ")";
    auto eval = [f, m, n](long na, long nb) -> std::complex<double> {
        if (na == -1 && m != 0)
            throw FunctionDomainError("1-m/(N_a+1)", na, nb);
        if (nb == -1 && n != 0)
            throw FunctionDomainError("1-n/(N_b+1)", na, nb);
        const double pa =
            static_cast<double>(na + 1 - m) / static_cast<double>(na + 1);
        const double pb =
            static_cast<double>(nb + 1 - n) / static_cast<double>(nb + 1);
        // On the rings N_a = m-1 and N_b = n-1 the polynomial factor kills
        // the component; f is never consulted there.
        if (pa == 0.0 || pb == 0.0) return {0.0, 0.0};
        if (na < m || nb < n)
            throw FunctionDomainError("added[" + std::to_string(m) + "," +
                                          std::to_string(n) + "]",
                                      na, nb);
        return f(na - m, nb - n) * (pa * pb);
    };
    auto zero_guard = [f, m, n](long na, long nb) -> bool {
        if (na + 1 == m || nb + 1 == n) return true;
        if (na < m || nb < n) return false; // undefined, not zero
        return f.vanishes_at(na - m, nb - n);
    };
    return NonlinearFunction(std::move(label), std::move(eval), std::move(zero_guard));
}

NonlinearFunction photon_subtracted_function(const NonlinearFunction& f, long m, long n) {
    if (m == 0 && n == 0) return f;
    NonlinearFunction g = shifted(f, m, n);
    return NonlinearFunction(
        "subtracted[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "](" +
            f.label() + ")",
        [g](long na, long nb) { return g(na, nb); },
        [g](long na, long nb) { return g.vanishes_at(na, nb); });
}

} // namespace tmnlcs
