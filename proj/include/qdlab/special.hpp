#pragma once

#include <complex>

// Scalar special functions used throughout: complex log-gamma (Stirling
// series with recurrence shift and reflection) and Hurwitz/Riemann zeta
// by Euler-Maclaurin summation.

namespace qdlab::special {

using cplx = std::complex<double>;

// Principal branch of log Gamma(z); accurate to ~1e-14 relative away
// from the poles at z = 0, -1, -2, ...
cplx log_gamma(cplx z);

cplx gamma(cplx z);

// Hurwitz zeta(s, a) for a > 0, s != 1. Euler-Maclaurin with shift >= 20
// and Bernoulli terms through B_24; absolute error well under 1e-12 for
// |s| <~ 60.
cplx hurwitz_zeta(cplx s, double a);

// Riemann zeta via Euler-Maclaurin (analytic continuation, s != 1).
cplx zeta(cplx s);

// zeta with the Euler factor at 2 removed: zeta(s) * (1 - 2^{-s}).
cplx zeta2(cplx s);

// zeta2(1+x) * x, computed stably for small |x| (pole-zero pairing).
cplx zeta2_shift_times_x(cplx x);

}  // namespace qdlab::special
