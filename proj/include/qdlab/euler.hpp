#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "qdlab/arith.hpp"

// Local Euler factors of the multiple Dirichlet series behind the fourth
// moment: parity-restricted exponent sums B_{p,k}, the combinatorial
// factors C_p and H_l, the off-diagonal series Z and its local factors,
// Z_3/Z_4, residue identities, and the tenth-degree leading constant.

namespace qdlab::euler {

using cplx = std::complex<double>;

struct LocalPoint {
  long long p;            // odd prime
  std::array<cplx, 4> u;
  cplx s;
  long long k1;           // squarefree positive
  long long a;            // odd positive
};

struct TruncatedProduct {
  cplx value;
  long long prime_cutoff;
  double tail_estimate;
};

// B_{p,k}(u; parity) = sum over exponent tuples n with sum n_i = parity
// (mod 2) of p^{-sum n_i u_i}, each n_i <= emax; plain truncated sum with
// a geometric tail estimate.
struct BSum {
  cplx value;
  double tail_estimate;
};
BSum b_sum(long long p, const std::vector<cplx>& u, int parity, int emax);

// Closed forms: B_{p,2k}(u;0) = prod_{i<=j} (1-p^{-u_i-u_j})^{-1} C_{p,2k}(u)
// and C_{p,2k}(u) = prod_{i<j}(1-p^{-u_i-u_j}) sum_{|A| even} prod_A p^{-u_i}.
cplx b_closed(long long p, const std::vector<cplx>& u);
cplx c_p(long long p, const std::array<cplx, 4>& u);

// g_1(p) = 1 - 1/p, g_2(p) = 1 - 1/(p+1).
double g_weight(int ell, long long p);

// Local factor of H_ell and the truncated global product over odd p <= P.
cplx h_local(int ell, long long p, const std::array<cplx, 4>& u);
TruncatedProduct h_global(int ell, const std::array<cplx, 4>& u, long long P,
                          const arith::ArithTables& t);

// Brute-force check of D_ell(u) = prod_{i<=j} zeta_2(u_i+u_j) * H_ell(u):
// the left side is the direct sum over odd tuples with square product.
struct SeriesCheck {
  cplx brute;
  cplx factored;
  double residual_rel;
  double brute_tail;
  double product_tail;
};
SeriesCheck d_series_check(int ell, const std::array<cplx, 4>& u, long long nmax,
                           long long P, const arith::ArithTables& t);

// Local factor Z_{2,p}(u, s; k1, a): three case shapes depending on
// p | a, p | k1, or neither.
cplx z2_local(const LocalPoint& pt);

// Local factor of Z at p (for p not dividing 2a) assembled from the
// zeta/L local factors and Z_{2,p}.
cplx z_local_factor(const LocalPoint& pt);

// Brute-force local factor: doubly truncated sum over the k2-exponent and
// the four n-exponents using exact Gauss-sum values at prime powers.
BSum f_p_brute(const LocalPoint& pt, int emax, const arith::ArithTables& t);

// Z(u, s; k1, a) assembled from zeta(2s), L-factors and the Z_2 product
// over odd p <= P.
TruncatedProduct z_assemble(const std::array<cplx, 4>& u, cplx s, long long k1,
                            long long a, long long P,
                            const arith::ArithTables& t);

// |Z* - (2^{1-2s}-1) Z| with Z* summed directly over k2 with alternating
// signs (absolutely convergent regime only).
struct RelationCheck {
  cplx lhs;
  cplx rhs;
  double residual;
};
RelationCheck zstar_relation_check(const std::array<cplx, 4>& u, cplx s,
                                   long long k1, long long a, long long P,
                                   const arith::ArithTables& t);

// Spectrally accurate contour residue: (1/2 pi i) oint f around center.
cplx residue_numeric(const std::function<cplx(cplx)>& f, cplx center,
                     double radius, int npoints);

// Z_3(u,s): global zeta ratios times the product over odd p <= P of the
// bracket local factor (merged with the L-ratio locals so the product
// converges absolutely).
TruncatedProduct z3(const std::array<cplx, 4>& u, cplx s, long long P,
                    const arith::ArithTables& t);

// Brute a-sum oracle: sum_{a odd <= amax} mu(a) a^{-(2-2s)} Z_2(u,s;1,a).
struct Z3SumCheck {
  cplx closed;
  cplx summed;
  double residual;
  double a_tail;
};
Z3SumCheck z3_sum_check(const std::array<cplx, 4>& u, cplx s, long long amax,
                        long long P, const arith::ArithTables& t);

// Z_4 = prod_{i<=j} zeta_2(1+u_i+u_j)^{-1} Z_3 (the shared zeta ratios
// cancel algebraically before anything is truncated).
TruncatedProduct z4(const std::array<cplx, 4>& u, cplx s, long long P,
                    const arith::ArithTables& t);

// Residuals of the two bracket identities relating B-sums across the
// sign flip z1 -> -z1, and of the Z_4 / H_2 product identity at matched
// truncation.
double iden_i_check(long long p, const std::array<cplx, 4>& z, int emax = 80);
double iden_ii_check(const std::array<cplx, 4>& z, long long P,
                     const arith::ArithTables& t);

// Leading coefficient of the degree-10 moment polynomial:
// hat Phi(0) / (2^18 3^3 5^2 7 pi^2) * prod_p (1-1/p)^10/(1+1/p) *
// [((1+1/sqrt p)^-4 + (1-1/sqrt p)^-4)/2 + 1/p].
struct LeadingCoefficient {
  double value;
  double phi_hat0;
  TruncatedProduct euler_product;
  double max_local_mismatch;  // |local - h_local(2,p,(1/2,...))| over p <= P
};
LeadingCoefficient q10_leading_coefficient(long long P,
                                           const arith::ArithTables& t);

}  // namespace qdlab::euler
