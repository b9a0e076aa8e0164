#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdlab/arith.hpp"

using namespace qdlab;

namespace {

// Quadratic-residue oracle for the Legendre symbol at an odd prime.
int legendre_brute(long long m, long long p) {
  long long r = m % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  for (long long x = 1; x < p; ++x)
    if ((x * x) % p == r) return 1;
  return -1;
}

}  // namespace

TEST_CASE("kronecker basic values") {
  CHECK(arith::kronecker(7, 1) == 1);
  CHECK(arith::kronecker(-3, 1) == 1);
  CHECK(arith::kronecker(0, 1) == 1);
  CHECK(arith::kronecker(5, 5) == 0);
  CHECK(arith::kronecker(2, 7) == 1);  // 3^2 = 2 mod 7
  CHECK_THROWS(arith::kronecker(0, 0));
}

TEST_CASE("kronecker matches quadratic-residue enumeration at odd primes") {
  std::mt19937_64 rng(12345);
  const long long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101};
  for (long long p : primes) {
    for (int i = 0; i < 40; ++i) {
      long long m = (long long)(rng() % 4000) - 2000;
      CHECK(arith::kronecker(m, p) == legendre_brute(m, p));
    }
  }
}

TEST_CASE("chi_8 and chi_-4 character tables") {
  // chi_8(n) = (8/n): period 8 on odd n with values 1,-1,-1,1 at 1,3,5,7.
  int chi8[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  for (long long n = 1; n < 200; n += 2)
    CHECK(arith::kronecker(8, n) == chi8[n % 8]);
  // chi_{-4}(n) = (-4/n): 1 at n=1 mod 4, -1 at n=3 mod 4.
  for (long long n = 1; n < 200; n += 2)
    CHECK(arith::kronecker(-4, n) == ((n % 4 == 1) ? 1 : -1));
}

TEST_CASE("kronecker multiplicativity and periodicity in lower argument") {
  std::mt19937_64 rng(777);
  const long long fundamentals[] = {5, 8, 12, 13, -4, -8, -3, -20, 21, 24};
  for (long long m : fundamentals) {
    REQUIRE(arith::is_fundamental_discriminant(m));
    for (int i = 0; i < 200; ++i) {
      long long n1 = 1 + rng() % 10000;
      long long n2 = 1 + rng() % 10000;
      CHECK(arith::kronecker(m, n1 * n2) ==
            arith::kronecker(m, n1) * arith::kronecker(m, n2));
    }
    long long period = std::llabs(m);
    for (int i = 0; i < 1000; ++i) {
      long long n = 1 + rng() % 100000;
      CHECK(arith::kronecker(m, n) == arith::kronecker(m, n + period));
    }
  }
}

TEST_CASE("character orthogonality: full-period sums vanish") {
  for (long long am = 2; am <= 200; ++am) {
    for (long long m : {am, -am}) {
      if (!arith::is_fundamental_discriminant(m)) continue;
      long long s = 0;
      for (long long n = 0; n < std::llabs(m); ++n) s += arith::kronecker(m, n);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("fundamental discriminants") {
  CHECK(arith::is_fundamental_discriminant(24));
  CHECK(arith::is_fundamental_discriminant(1));
  // 12 = 4*3 with 3 = 3 (mod 4) squarefree, so it is fundamental (disc of Q(sqrt(3))).
  CHECK(arith::is_fundamental_discriminant(12));
  CHECK(!arith::is_fundamental_discriminant(4));
  CHECK(!arith::is_fundamental_discriminant(9));
  CHECK(!arith::is_fundamental_discriminant(-4 * 4));
  CHECK(arith::is_fundamental_discriminant(-4));
  CHECK(arith::is_fundamental_discriminant(-8));
  CHECK(arith::is_fundamental_discriminant(-3));
  CHECK_THROWS(arith::is_fundamental_discriminant(0));
}

TEST_CASE("m_of_k1") {
  CHECK(arith::m_of_k1(5) == 5);
  CHECK(arith::m_of_k1(3) == 12);
  CHECK(arith::m_of_k1(1) == 1);
  CHECK(arith::m_of_k1(2) == 8);
  CHECK_THROWS(arith::m_of_k1(9));
  for (long long k1 : {1LL, 2LL, 3LL, 5LL, 6LL, 7LL, 10LL, 11LL, 13LL, 15LL})
    CHECK(arith::is_fundamental_discriminant(arith::m_of_k1(k1)));
}

TEST_CASE("sieve tables") {
  auto t = arith::build_tables(1000);
  CHECK(t.mobius[6] == 1);
  CHECK(t.euler_phi[9] == 6);
  CHECK(t.mobius[12] == 0);
  CHECK(t.mobius[30] == -1);
  int count = 0;
  for (int n = 1; n <= 30; ++n)
    if (t.is_odd_squarefree[n]) ++count;
  // Odd squarefree n <= 30: 1,3,5,7,11,13,15,17,19,21,23,29.
  CHECK(count == 12);
  for (long long p : {2, 3, 5, 7, 11, 13}) CHECK(t.euler_phi[p] == p - 1);
  // mobius[n] in {-1,0,1} and zero exactly off squarefree.
  for (int n = 1; n <= 1000; ++n) {
    CHECK(std::abs(int(t.mobius[n])) <= 1);
    CHECK((t.mobius[n] != 0) == arith::is_squarefree(n));
    CHECK(t.is_odd_squarefree[n] == ((n % 2 == 1) && arith::is_squarefree(n)));
  }
  CHECK_THROWS(arith::build_tables(1));
}

TEST_CASE("core and prime divisors") {
  auto t = arith::build_tables(2000);
  CHECK(arith::core_of(1, t) == 1);
  CHECK(arith::core_of(12, t) == 3);
  CHECK(arith::core_of(36, t) == 1);
  CHECK(arith::core_of(90, t) == 10);
  auto ps = t.prime_divisors(360);
  CHECK(ps == std::vector<long long>{2, 3, 5});
}
