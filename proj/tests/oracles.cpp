#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

double rung(long n, long q) {
    return std::sqrt(static_cast<double>(n + 1) * static_cast<double>(n + q + 1));
}

struct DenseMatrix {
    std::size_t n = 0;
    std::vector<cplx> a;

    explicit DenseMatrix(std::size_t size) : n(size), a(size * size, cplx(0.0)) {}
    cplx& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static DenseMatrix identity(std::size_t size) {
        DenseMatrix m(size);
        for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1.0;
        return m;
    }

    DenseMatrix multiply(const DenseMatrix& rhs) const {
        DenseMatrix out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const cplx aik = at(i, k);
                if (aik == cplx(0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) out.at(i, j) += aik * rhs.at(k, j);
            }
        return out;
    }

    double one_norm() const {
        double best = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double col = 0.0;
            for (std::size_t i = 0; i < n; ++i) col += std::abs(at(i, j));
            best = std::max(best, col);
        }
        return best;
    }
};

DenseMatrix taylor_exp(const DenseMatrix& a) {
    DenseMatrix sum = DenseMatrix::identity(a.n);
    DenseMatrix term = DenseMatrix::identity(a.n);
    for (int k = 1; k <= 40; ++k) {
        term = term.multiply(a);
        const double scale = 1.0 / static_cast<double>(k);
        double term_norm = 0.0;
        for (std::size_t i = 0; i < term.a.size(); ++i) {
            term.a[i] *= scale;
            sum.a[i] += term.a[i];
            term_norm += std::norm(term.a[i]);
        }
        if (std::sqrt(term_norm) < 1e-20) break;
    }
    return sum;
}

} // namespace

double pair_norm_series(double abs_zeta_sq, long q) {
    double sum = 1.0;
    double term = 1.0;
    for (long n = 0; n < 100000; ++n) {
        term *= abs_zeta_sq /
                (static_cast<double>(n + 1) * static_cast<double>(n + q + 1));
        sum += term;
        if (term < 1e-18 * sum) return sum;
    }
    throw std::runtime_error("pair_norm_series did not converge");
}

std::vector<cplx> pair_coefficients(cplx zeta, long q, std::size_t count) {
    std::vector<cplx> c(count);
    c[0] = 1.0 / std::sqrt(pair_norm_series(std::norm(zeta), q));
    for (std::size_t n = 0; n + 1 < count; ++n)
        c[n + 1] = zeta / rung(static_cast<long>(n), q) * c[n];
    return c;
}

cplx pair_overlap(cplx z1, cplx z2, long q) {
    const cplx w = std::conj(z1) * z2;
    cplx sum = 1.0;
    cplx term = 1.0;
    for (long n = 0; n < 100000; ++n) {
        term *= w / (static_cast<double>(n + 1) * static_cast<double>(n + q + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum / std::sqrt(pair_norm_series(std::norm(z1), q) *
                           pair_norm_series(std::norm(z2), q));
}

std::vector<cplx> parity_pair_coefficients(cplx zeta, long q, std::size_t count) {
    // Same magnitudes as the pair state; signs from (-1)^{n(n-1)/2}.
    std::vector<cplx> c = pair_coefficients(zeta, q, count);
    for (std::size_t n = 0; n < count; ++n) {
        const long exponent = static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;
        if (exponent % 2 != 0) c[n] = -c[n];
    }
    return c;
}

std::vector<cplx> perelomov_coefficients(cplx tau, long q, std::size_t count) {
    std::vector<cplx> c(count);
    c[0] = 1.0;
    double total = 1.0;
    for (std::size_t n = 0; n + 1 < count; ++n) {
        c[n + 1] = tau *
                   std::sqrt(static_cast<double>(static_cast<long>(n) + q + 1) /
                             static_cast<double>(n + 1)) *
                   c[n];
        total += std::norm(c[n + 1]);
    }
    const double inv = 1.0 / std::sqrt(total);
    for (auto& v : c) v *= inv;
    return c;
}

std::vector<cplx> perelomov_matrix_exponential(cplx xi, long q, std::size_t dim) {
    DenseMatrix k(dim);
    for (std::size_t n = 0; n + 1 < dim; ++n) {
        const double s = rung(static_cast<long>(n), q);
        k.at(n + 1, n) = xi * s;          // a'b' rung up
        k.at(n, n + 1) = -std::conj(xi) * s; // -conj(xi) ab rung down
    }

    int squarings = 0;
    double norm = k.one_norm();
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& v : k.a) v *= scale;

    DenseMatrix e = taylor_exp(k);
    for (int s = 0; s < squarings; ++s) e = e.multiply(e);

    std::vector<cplx> column(dim);
    for (std::size_t i = 0; i < dim; ++i) column[i] = e.at(i, 0);
    return column;
}

} // namespace oracle
