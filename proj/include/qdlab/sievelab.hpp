#pragma once

#include <complex>
#include <vector>

#include "qdlab/arith.hpp"
#include "qdlab/smooth.hpp"

// Brute-force fourth-power large-sieve statistics against the analytic
// envelope, Poisson-summation verification for quadratic characters, and
// the diagonal-sum diagnostic.

namespace qdlab::sievelab {

using cplx = std::complex<double>;

// sum_{3N/4 <= n <= 2N} chi_m(n) n^{-1/2-it} G(n/N).
cplx dirichlet_poly(long long m, double N, double t,
                    const smooth::TestFunction& g);

// Fourth-power means over M < |m| <= 2M: s_full over non-square m,
// s_flat over fundamental discriminants.
double s_full(long long M, double N, double t, const smooth::TestFunction& g);
double s_flat(long long M, double N, double t, const smooth::TestFunction& g);

struct SieveCell {
  long long M;
  double N;
  double t;
  double flat;
  double full;
  double envelope;
  double ratio;  // flat / envelope
};

double envelope(long long M, double N, double t);

std::vector<SieveCell> envelope_report(const std::vector<long long>& ms,
                                       const std::vector<double>& ns,
                                       const std::vector<double>& ts,
                                       int threads = 1);

// Poisson summation for (d/n) with a smooth drop F:
//   all: sum_d (d/n) F(d/Z)        = (Z/n)   sum_k G_k(n) Fcheck(kZ/n)
//   odd: sum_{d odd} (d/n) F(d/Z)  = (Z/2n)(2/n) sum_k (-1)^k G_k(n) Fcheck(kZ/2n)
enum class PoissonVariant { all, odd };

struct PoissonCheck {
  cplx lhs;
  cplx rhs;
  double residual;
  double lhs_tail;
  double rhs_tail;
};

PoissonCheck poisson_check(const smooth::TestFunction& f, long long n, double Z,
                           PoissonVariant variant,
                           const arith::ArithTables& tables);

// Diagonal-sum diagnostic at t = 0: the directly summed
//   sum_{n1 n2 n3 n4 square, odd} (n1 n2 n3 n4)^{-1/2}
//       prod_{p | n1 n2 n3 n4} (1-1/p) prod G(n_i/N)
// against the predicted (|tilde G(0)|^4 / (2^10 6!)) H_1(1/2,..) (1 - 12/32)
// (log N)^6 leading value.
struct M0Diagnostic {
  double brute;      // the sum above (already divided by hat F(0) X)
  double predicted;
  double ratio;
  long long tuple_count;
};

M0Diagnostic m0_diagnostic(double N, long long P, const arith::ArithTables& t,
                           int threads = 1);

// Finite inequality check of the inflation step:
// flat(M,N,t) <= C (log c / sqrt c)(full(Mc)+full(2Mc)+sum_p flat(M,N/p)/p^2).
struct InflationCheck {
  double lhs;
  double rhs;
  bool pass;
};

InflationCheck inflation_check(double inflation_c, long long M, double N,
                               double t, double C);

}  // namespace qdlab::sievelab
