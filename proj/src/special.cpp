#include "qdlab/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdlab::special {

namespace {

constexpr double kPi = std::numbers::pi;

// B_2, B_4, ..., B_24.
constexpr double kBernoulli[] = {
    1.0 / 6,      -1.0 / 30,         1.0 / 42,      -1.0 / 30,
    5.0 / 66,     -691.0 / 2730,     7.0 / 6,       -3617.0 / 510,
    43867.0 / 798, -174611.0 / 330,  854513.0 / 138, -236364091.0 / 2730};

// Stirling series for log Gamma, valid for large Re(z).
cplx stirling(cplx z) {
  cplx lz = std::log(z);
  cplx s = (z - 0.5) * lz - z + 0.5 * std::log(2 * kPi);
  cplx z2 = z * z;
  cplx zp = z;
  for (int k = 0; k < 12; ++k) {
    int two_k = 2 * (k + 1);
    s += kBernoulli[k] / (double(two_k) * (two_k - 1) * zp);
    zp *= z2;
  }
  return s;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    // log sin(pi z) computed to avoid overflow for large |Im z|.
    cplx log_sin;
    if (z.imag() > 10.0) {
      log_sin = cplx(0, -kPi) * z + std::log(cplx(0, 0.5)) +
                std::log(1.0 - std::exp(cplx(0, 2 * kPi) * z));
    } else if (z.imag() < -10.0) {
      log_sin = cplx(0, kPi) * z + std::log(cplx(0, -0.5)) +
                std::log(1.0 - std::exp(cplx(0, -2 * kPi) * z));
    } else {
      log_sin = std::log(std::sin(kPi * z));
    }
    return std::log(cplx(kPi)) - log_sin - log_gamma(1.0 - z);
  }
  int shift = 0;
  cplx w = z;
  while (w.real() < 20.0) {
    w += 1.0;
    ++shift;
  }
  cplx s = stirling(w);
  w = z;
  for (int i = 0; i < shift; ++i) {
    s -= std::log(w);
    w += 1.0;
  }
  return s;
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx hurwitz_zeta(cplx s, double a) {
  if (a <= 0) throw std::invalid_argument("hurwitz_zeta: a > 0 required");
  if (s == cplx(1.0, 0.0))
    throw std::invalid_argument("hurwitz_zeta: pole at s = 1");

  // Shift so that N + a is comfortably large; order-12 tail.
  const int N = 24 + int(std::ceil(std::abs(s.imag()) * 0.5));
  cplx sum = 0.0;
  for (int k = 0; k < N; ++k) sum += std::pow(cplx(k + a), -s);
  const cplx q = cplx(N + a);
  const cplx qs = std::pow(q, -s);
  sum += q * qs / (s - 1.0);
  sum += 0.5 * qs;
  // Euler-Maclaurin correction: sum_j B_2j/(2j)! * (s)_{2j-1} * q^{-s-2j+1}.
  cplx poch = s;        // (s)_1
  cplx qpow = qs / q;   // q^{-s-1}
  double fact = 2.0;    // (2j)!
  for (int j = 1; j <= 12; ++j) {
    sum += kBernoulli[j - 1] / fact * poch * qpow;
    poch *= (s + double(2 * j - 1)) * (s + double(2 * j));
    qpow /= q * q;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum;
}

cplx zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx zeta2(cplx s) { return zeta(s) * (1.0 - std::exp(-s * std::log(2.0))); }

cplx zeta2_shift_times_x(cplx x) {
  // zeta2(1+x)*x = (1-2^{-1-x}) * (x*zeta(1+x)); the latter is computed
  // from the Euler-Maclaurin expansion with the 1/x pole folded in.
  const cplx s = 1.0 + x;
  const int N = 24 + int(std::ceil(std::abs(s.imag()) * 0.5));
  cplx sum = 0.0;
  for (int k = 1; k < N; ++k) sum += std::pow(cplx(double(k)), -s);
  const cplx q = cplx(double(N));
  const cplx qs = std::pow(q, -s);
  // x * q^{1-s}/(s-1) = q^{-x} exactly, since s-1 = x.
  cplx total = x * sum + std::pow(q, -x);
  total += x * 0.5 * qs;
  cplx poch = s;
  cplx qpow = qs / q;
  double fact = 2.0;
  for (int j = 1; j <= 12; ++j) {
    total += x * kBernoulli[j - 1] / fact * poch * qpow;
    poch *= (s + double(2 * j - 1)) * (s + double(2 * j));
    qpow /= q * q;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return (1.0 - std::exp(-s * std::log(2.0))) * total;
}

}  // namespace qdlab::special
