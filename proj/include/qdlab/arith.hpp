#pragma once

#include <cstdint>
#include <vector>

// Integer and real-character kernel: Kronecker symbols, fundamental
// discriminants, and sieved multiplicative-function tables.

namespace qdlab::arith {

// Full Kronecker symbol (m/n), defined for every pair except (0,0):
// completely multiplicative in n, with (m/2) = 0, +1, -1 according as
// m is even, m = +-1 (mod 8), m = +-3 (mod 8), and (m/-1) = sign(m)
// extended by (m/-1) = 1 for m >= 0.
int kronecker(long long m, long long n);

// True iff m is the discriminant of a quadratic field:
// m = 1 (mod 4) squarefree, or m = 4k with k = 2,3 (mod 4) squarefree.
bool is_fundamental_discriminant(long long m);

// Discriminant attached to a squarefree k1 > 0: k1 itself when
// k1 = 1 (mod 4), else 4*k1. Throws on non-squarefree input.
long long m_of_k1(long long k1);

bool is_squarefree(long long n);

struct ArithTables {
  long long limit = 0;
  std::vector<int32_t> smallest_prime_factor;  // spf[n] for 2 <= n <= limit
  std::vector<int8_t> mobius;                  // mu[n], mu[0] unused, mu[1]=1
  std::vector<int64_t> euler_phi;              // phi[n]
  std::vector<uint8_t> is_odd_squarefree;      // n odd and mu(n) != 0
  std::vector<int64_t> primes;                 // ascending primes <= limit

  bool is_prime(long long n) const {
    return n >= 2 && n <= limit && smallest_prime_factor[n] == n;
  }
  // Distinct prime divisors of n (n <= limit).
  std::vector<long long> prime_divisors(long long n) const;
};

// Linear sieve. limit >= 2; throws std::bad_alloc style failures upward
// if the memory budget is exceeded.
ArithTables build_tables(long long limit);

// Squarefree kernel of n (product of primes dividing n), n >= 1.
long long core_of(long long n, const ArithTables& t);

}  // namespace qdlab::arith
