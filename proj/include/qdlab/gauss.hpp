#pragma once

#include <complex>
#include <cstdint>

#include "qdlab/arith.hpp"

// The twisted quadratic Gauss sum
//   G_k(n) = ((1-i)/2 + (-1/n)(1+i)/2) * sum_{a mod n} (a/n) e(ak/n)
// for odd n: a direct O(n) evaluation and the exact multiplicative
// closed form over prime powers.

namespace qdlab::gauss {

using cplx = std::complex<double>;

// Exact value q * sqrt(r), q rational, r squarefree positive.
struct GaussValue {
  long long num = 0;
  long long den = 1;
  long long root = 1;  // squarefree

  static GaussValue integer(long long v) { return {v, 1, 1}; }
  static GaussValue zero() { return {0, 1, 1}; }

  GaussValue operator*(const GaussValue& o) const;
  double to_double() const;
  bool is_rational() const { return root == 1; }
  void reduce();
};

// Direct definition, O(n); n odd, n <= 10^6. The imaginary part of the
// result is a roundoff diagnostic (the true value is real).
cplx gauss_direct(long long k, long long n);

// Same sum by the five-case prime-power table, carried exactly.
// k = 0 is treated as having infinite valuation at every prime.
GaussValue gauss_closed(long long k, long long n, const arith::ArithTables& t);

// Single prime-power factor G_k(p^beta).
GaussValue gauss_prime_power(long long k, long long p, int beta);

}  // namespace qdlab::gauss
