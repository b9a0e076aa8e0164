#include "qdlab/gauss.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qdlab::gauss {

namespace {

// Extract the square part of r: r = s^2 * r', r' squarefree; returns {s, r'}.
std::pair<long long, long long> split_square(long long r) {
  long long s = 1;
  for (long long p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      s *= p;
    }
  }
  return {s, r};
}

}  // namespace

void GaussValue::reduce() {
  if (num == 0) {
    den = 1;
    root = 1;
    return;
  }
  if (den < 0) {
    den = -den;
    num = -num;
  }
  long long g = std::gcd(std::llabs(num), den);
  num /= g;
  den /= g;
}

GaussValue GaussValue::operator*(const GaussValue& o) const {
  GaussValue r;
  r.num = num * o.num;
  r.den = den * o.den;
  auto [sq, rest] = split_square(root * o.root);
  r.num *= sq;
  r.root = rest;
  r.reduce();
  return r;
}

double GaussValue::to_double() const {
  return double(num) / double(den) * std::sqrt(double(root));
}

cplx gauss_direct(long long k, long long n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("gauss_direct: n odd > 0");
  if (n > 1000000) throw std::invalid_argument("gauss_direct: n <= 10^6");
  const double two_pi = 2.0 * std::numbers::pi;
  cplx sum = 0.0;
  for (long long a = 0; a < n; ++a) {
    int chi = arith::kronecker(a, n);
    if (chi == 0) continue;
    long long r = (a * (k % n)) % n;
    if (r < 0) r += n;
    double ang = two_pi * double(r) / double(n);
    sum += double(chi) * cplx(std::cos(ang), std::sin(ang));
  }
  int eps = arith::kronecker(-1, n);
  cplx pre = cplx(0.5, -0.5) + double(eps) * cplx(0.5, 0.5);
  return pre * sum;
}

GaussValue gauss_prime_power(long long k, long long p, int beta) {
  if (beta == 0) return GaussValue::integer(1);
  // alpha = v_p(k), infinite for k = 0.
  int alpha = -1;  // -1 encodes infinity
  long long kk = k;
  if (k != 0) {
    alpha = 0;
    while (kk % p == 0) {
      kk /= p;
      ++alpha;
    }
  }
  const bool alpha_inf = (alpha < 0);
  auto phi_pb = [&](int b) {
    long long v = 1;
    for (int i = 0; i < b - 1; ++i) v *= p;
    return v * (p - 1);
  };
  if (alpha_inf || beta <= alpha) {
    if (beta % 2 == 1) return GaussValue::zero();
    return GaussValue::integer(phi_pb(beta));
  }
  if (beta == alpha + 1) {
    long long pa = 1;
    for (int i = 0; i < alpha; ++i) pa *= p;
    if (beta % 2 == 0) return GaussValue::integer(-pa);
    // (k p^{-alpha} / p) p^alpha sqrt(p)
    int chi = arith::kronecker(kk % p, p);
    GaussValue g;
    g.num = chi * pa;
    g.den = 1;
    g.root = p;
    return g;
  }
  return GaussValue::zero();  // beta >= alpha + 2
}

GaussValue gauss_closed(long long k, long long n, const arith::ArithTables& t) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("gauss_closed: n odd > 0");
  if (n > t.limit) throw std::invalid_argument("gauss_closed: n beyond tables");
  GaussValue out = GaussValue::integer(1);
  long long m = n;
  while (m > 1) {
    long long p = t.smallest_prime_factor[m];
    int beta = 0;
    while (m % p == 0) {
      m /= p;
      ++beta;
    }
    out = out * gauss_prime_power(k, p, beta);
    if (out.num == 0) return GaussValue::zero();
  }
  return out;
}

}  // namespace qdlab::gauss
