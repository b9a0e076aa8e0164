#include "qdlab/arith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qdlab::arith {

namespace {

// (2/n) for odd n.
int kron2(long long n) {
  long long r = n & 7;  // n mod 8 for n > 0; fix sign below
  if (r < 0) r += 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

int kronecker(long long m, long long n) {
  if (m == 0 && n == 0) throw std::invalid_argument("kronecker(0,0) undefined");
  if (n == 0) return (m == 1 || m == -1) ? 1 : 0;

  int result = 1;
  if (n < 0) {
    n = -n;
    if (m < 0) result = -result;
  }
  if (n == 1) return result;

  // Bottom factor of 2.
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  if (v > 0) {
    if ((m & 1) == 0) return 0;
    if (v & 1) result *= kron2(m);
  }
  // Now n odd >= 1; Jacobi loop with quadratic reciprocity.
  long long a = m % n;
  if (a < 0) a += n;
  while (a != 0) {
    int w = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++w;
    }
    if (w & 1) {
      long long r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    long long t = n % a;
    n = a;
    a = t;
  }
  return (n == 1) ? result : 0;
}

bool is_squarefree(long long n) {
  n = std::llabs(n);
  if (n == 0) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

bool is_fundamental_discriminant(long long m) {
  if (m == 0) throw std::invalid_argument("discriminant must be nonzero");
  long long r4 = m % 4;
  if (r4 < 0) r4 += 4;
  if (r4 == 1) return is_squarefree(m);
  if (m % 4 != 0) return false;
  long long k = m / 4;
  long long k4 = k % 4;
  if (k4 < 0) k4 += 4;
  return (k4 == 2 || k4 == 3) && is_squarefree(k);
}

long long m_of_k1(long long k1) {
  if (k1 <= 0 || !is_squarefree(k1))
    throw std::invalid_argument("m_of_k1 requires squarefree k1 > 0");
  return (k1 % 4 == 1) ? k1 : 4 * k1;
}

std::vector<long long> ArithTables::prime_divisors(long long n) const {
  std::vector<long long> ps;
  while (n > 1) {
    long long p = smallest_prime_factor[n];
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  return ps;
}

ArithTables build_tables(long long limit) {
  if (limit < 2) throw std::invalid_argument("build_tables: limit >= 2");
  ArithTables t;
  t.limit = limit;
  t.smallest_prime_factor.assign(limit + 1, 0);
  t.mobius.assign(limit + 1, 0);
  t.euler_phi.assign(limit + 1, 0);
  t.is_odd_squarefree.assign(limit + 1, 0);
  t.mobius[1] = 1;
  t.euler_phi[1] = 1;
  t.is_odd_squarefree[1] = 1;

  for (long long i = 2; i <= limit; ++i) {
    if (t.smallest_prime_factor[i] == 0) {
      t.smallest_prime_factor[i] = static_cast<int32_t>(i);
      t.mobius[i] = -1;
      t.euler_phi[i] = i - 1;
      t.primes.push_back(i);
    }
    for (long long p : t.primes) {
      if (p > t.smallest_prime_factor[i] || i * p > limit) break;
      t.smallest_prime_factor[i * p] = static_cast<int32_t>(p);
      if (i % p == 0) {
        t.mobius[i * p] = 0;
        t.euler_phi[i * p] = t.euler_phi[i] * p;
      } else {
        t.mobius[i * p] = -t.mobius[i];
        t.euler_phi[i * p] = t.euler_phi[i] * (p - 1);
      }
    }
    if ((i & 1) && t.mobius[i] != 0) t.is_odd_squarefree[i] = 1;
  }
  return t;
}

long long core_of(long long n, const ArithTables& t) {
  long long c = 1;
  while (n > 1) {
    long long p = t.smallest_prime_factor[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e & 1) c *= p;
  }
  return c;
}

}  // namespace qdlab::arith
