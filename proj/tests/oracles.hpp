// Test-only oracles, independent of the library's construction paths:
// direct series summation for normalizations and overlaps, closed-form
// coefficient tables, and a dense matrix exponential.  Nothing here calls
// into the builders under test.
#ifndef TMNLCS_TESTS_ORACLES_HPP
#define TMNLCS_TESTS_ORACLES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// sum_n q! |z|^{2n} / (n! (n+q)!), accumulated through term ratios.
double pair_norm_series(double abs_zeta_sq, long q);

// Normalized pair-coherent-state coefficients c_0 .. c_{count-1}.
std::vector<cplx> pair_coefficients(cplx zeta, long q, std::size_t count);

// <z1|z2> for normalized pair coherent states of equal charge.
cplx pair_overlap(cplx z1, cplx z2, long q);

// Normalized parity-pair coefficients: zeta^n (-1)^{n(n-1)/2} sqrt(q!/(n!(n+q)!)).
std::vector<cplx> parity_pair_coefficients(cplx zeta, long q, std::size_t count);

// Normalized Perelomov coefficients: tau^n sqrt((n+q)!/(n! q!)).
std::vector<cplx> perelomov_coefficients(cplx tau, long q, std::size_t count);

// First column of exp(xi a'b' - conj(xi) ab) on the ladder truncated to
// `dim` rungs, i.e. the exact displaced |q,0> up to truncation.  Dense
// scaling-and-squaring with a Taylor kernel.
std::vector<cplx> perelomov_matrix_exponential(cplx xi, long q, std::size_t dim);

} // namespace oracle

#endif
