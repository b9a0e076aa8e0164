#include "qdlab/euler.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <numbers>
#include <stdexcept>

#include "qdlab/gauss.hpp"
#include "qdlab/lfun.hpp"
#include "qdlab/smooth.hpp"
#include "qdlab/special.hpp"

namespace qdlab::euler {

namespace {

constexpr double kPi = std::numbers::pi;

cplx pw(long long p, cplx w) { return std::exp(-w * std::log(double(p))); }

double min_re(const std::array<cplx, 4>& u) {
  double m = u[0].real();
  for (int i = 1; i < 4; ++i) m = std::min(m, u[i].real());
  return m;
}

// Tail of a product whose local factors are 1 + O(p^-kappa); the constant
// is calibrated on the largest retained primes.
double product_tail(const std::vector<double>& last_devs,
                    const std::vector<long long>& last_primes, double kappa,
                    long long P) {
  double c = 0.0;
  for (size_t i = 0; i < last_devs.size(); ++i)
    c = std::max(c, last_devs[i] * std::pow(double(last_primes[i]), kappa));
  if (kappa <= 1.0) return c;
  return c * std::pow(double(P), 1.0 - kappa) /
         ((kappa - 1.0) * std::log(double(P)));
}

}  // namespace

BSum b_sum(long long p, const std::vector<cplx>& u, int parity, int emax) {
  if (emax < 10) throw std::invalid_argument("b_sum: emax >= 10");
  const int k = int(u.size());
  double qmax = 0.0;
  for (const cplx& ui : u) {
    if (ui.real() <= 0.0)
      throw std::invalid_argument("b_sum: divergent (Re u_i <= 0)");
    qmax = std::max(qmax, std::pow(double(p), -ui.real()));
  }
  std::vector<std::vector<cplx>> pows(k);
  std::vector<double> rest_bound(k + 1, 1.0);
  for (int i = k - 1; i >= 0; --i) {
    pows[i].resize(emax + 1);
    pows[i][0] = 1.0;
    const cplx r = pw(p, u[i]);
    for (int n = 1; n <= emax; ++n) pows[i][n] = pows[i][n - 1] * r;
    rest_bound[i] = rest_bound[i + 1] / (1.0 - std::abs(r));
  }
  const double cut = 1e-19;
  // Kahan-compensated accumulation: millions of near-unit terms otherwise
  // leave ~1e-11 of random-walk roundoff.
  cplx total = 0.0, comp = 0.0;
  std::function<void(int, cplx, int)> rec = [&](int i, cplx w, int par) {
    if (i == k) {
      if (par == (parity & 1)) {
        const cplx y = w - comp;
        const cplx t2 = total + y;
        comp = (t2 - total) - y;
        total = t2;
      }
      return;
    }
    for (int n = 0; n <= emax; ++n) {
      const cplx wn = w * pows[i][n];
      if (std::abs(wn) * rest_bound[i + 1] < cut) break;
      rec(i + 1, wn, (par + n) & 1);
    }
  };
  rec(0, cplx(1.0), 0);
  const double tail =
      k * std::pow(qmax, emax + 1) / (1.0 - qmax) * rest_bound[0];
  return {total, tail};
}

cplx b_closed(long long p, const std::vector<cplx>& u) {
  const int n = int(u.size());
  if (n % 2 != 0) throw std::invalid_argument("b_closed: even tuple expected");
  std::vector<cplx> x(n);
  for (int i = 0; i < n; ++i) x[i] = pw(p, u[i]);
  cplx denom = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const cplx f = 1.0 - x[i] * x[j];
      if (std::abs(f) < 1e-14)
        throw std::invalid_argument("b_closed: pole at u_i + u_j = 0");
      denom *= f;
    }
  cplx cross = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cross *= 1.0 - x[i] * x[j];
  cplx subset_sum = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    cplx t = 1.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) t *= x[i];
    subset_sum += t;
  }
  return cross * subset_sum / denom;
}

cplx c_p(long long p, const std::array<cplx, 4>& u) {
  std::array<cplx, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = pw(p, u[i]);
  cplx cross = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) cross *= 1.0 - x[i] * x[j];
  cplx subset_sum = 0.0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    cplx t = 1.0;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) t *= x[i];
    subset_sum += t;
  }
  return cross * subset_sum;
}

double g_weight(int ell, long long p) {
  if (ell == 1) return 1.0 - 1.0 / double(p);
  if (ell == 2) return 1.0 - 1.0 / double(p + 1);
  throw std::invalid_argument("g_weight: ell in {1,2}");
}

cplx h_local(int ell, long long p, const std::array<cplx, 4>& u) {
  const double g = g_weight(ell, p);
  std::array<cplx, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = pw(p, u[i]);
  cplx full = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) full *= 1.0 - x[i] * x[j];
  return (1.0 - g) * full + g * c_p(p, u);
}

TruncatedProduct h_global(int ell, const std::array<cplx, 4>& u, long long P,
                          const arith::ArithTables& t) {
  if (min_re(u) < 0.25 + 0.01)
    throw std::invalid_argument("h_global: Re u_i >= 1/4 + 0.01");
  if (P > t.limit) throw std::invalid_argument("h_global: P beyond tables");
  cplx prod = 1.0;
  std::vector<double> devs;
  std::vector<long long> ps;
  for (long long p : t.primes) {
    if (p == 2) continue;
    if (p > P) break;
    const cplx loc = h_local(ell, p, u);
    prod *= loc;
    if (p > P / 2) {
      devs.push_back(std::abs(loc - 1.0));
      ps.push_back(p);
    }
  }
  const double kappa = std::min(4.0 * min_re(u), 1.0 + 2.0 * min_re(u));
  return {prod, P, product_tail(devs, ps, kappa, P)};
}

SeriesCheck d_series_check(int ell, const std::array<cplx, 4>& u, long long nmax,
                           long long P, const arith::ArithTables& t) {
  if (min_re(u) < 0.8)
    throw std::invalid_argument("d_series_check: Re u_i >= 0.8");
  std::vector<long long> small_primes;
  for (long long p : t.primes) {
    if (p > nmax) break;
    if (p != 2) small_primes.push_back(p);
  }
  if (small_primes.size() > 128)
    throw std::invalid_argument("d_series_check: nmax too large for masks");
  std::vector<double> gp(small_primes.size());
  for (size_t i = 0; i < small_primes.size(); ++i)
    gp[i] = g_weight(ell, small_primes[i]);

  const long long M = nmax;
  std::vector<uint64_t> mask_lo(M + 1, 0), mask_hi(M + 1, 0);
  std::vector<long long> core(M + 1, 1);
  for (size_t i = 0; i < small_primes.size(); ++i) {
    long long p = small_primes[i];
    for (long long n = p; n <= M; n += p) {
      if (n % 2 == 0) continue;
      if (i < 64)
        mask_lo[n] |= (1ull << i);
      else
        mask_hi[n] |= (1ull << (i - 64));
    }
  }
  for (long long n = 1; n <= M; n += 2) core[n] = arith::core_of(n, t);

  std::array<std::vector<cplx>, 4> pow_u;
  for (int i = 0; i < 4; ++i) {
    pow_u[i].assign(M + 1, cplx(0.0));
    for (long long n = 1; n <= M; n += 2)
      pow_u[i][n] = std::exp(-u[i] * std::log(double(n)));
  }

  cplx brute = 0.0, s_half = 0.0, s_quarter = 0.0;
  for (long long n1 = 1; n1 <= M; n1 += 2)
    for (long long n2 = 1; n2 <= M; n2 += 2) {
      const long long g12 = std::gcd(core[n1], core[n2]);
      const long long c12 = core[n1] / g12 * (core[n2] / g12);
      const uint64_t lo12 = mask_lo[n1] | mask_lo[n2];
      const uint64_t hi12 = mask_hi[n1] | mask_hi[n2];
      const cplx w12 = pow_u[0][n1] * pow_u[1][n2];
      const long long mx12 = std::max(n1, n2);
      for (long long n3 = 1; n3 <= M; n3 += 2) {
        const long long g3 = std::gcd(c12, core[n3]);
        const long long c123 = c12 / g3 * (core[n3] / g3);
        if (c123 > M) continue;
        const cplx w123 = w12 * pow_u[2][n3];
        const long long mx3 = std::max(mx12, n3);
        for (long long j = 1; c123 * j * j <= M; j += 2) {
          const long long n4 = c123 * j * j;
          uint64_t lo = lo12 | mask_lo[n3] | mask_lo[n4];
          uint64_t hi = hi12 | mask_hi[n3] | mask_hi[n4];
          double gw = 1.0;
          while (lo) {
            gw *= gp[__builtin_ctzll(lo)];
            lo &= lo - 1;
          }
          while (hi) {
            gw *= gp[64 + __builtin_ctzll(hi)];
            hi &= hi - 1;
          }
          const cplx term = gw * w123 * pow_u[3][n4];
          brute += term;
          const long long mx = std::max(mx3, n4);
          if (2 * mx <= M) s_half += term;
          if (4 * mx <= M) s_quarter += term;
        }
      }
    }

  cplx zfac = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) zfac *= special::zeta2(u[i] + u[j]);
  auto h = h_global(ell, u, P, t);
  const cplx factored = zfac * h.value;

  // The truncated series converges like nmax^{1-2 min Re u} times a high
  // power of log nmax; extrapolate the dyadic increments geometrically.
  const double d1 = std::abs(s_half - s_quarter);
  const double d2 = std::abs(brute - s_half);
  double brute_tail;
  if (d1 > d2 && d2 > 0.0)
    brute_tail = 3.0 * d2 * d2 / (d1 - d2);
  else
    brute_tail = 4.0 * d2;  // non-contracting increments: crude cap
  const double prod_tail = std::abs(zfac) * h.tail_estimate;
  const double resid = std::abs(brute - factored) / std::abs(factored);
  return {brute, factored, resid, brute_tail, prod_tail};
}

namespace {

// Bracket of the Z_3 local factor:
// 1/p + (1-1/p) B_p(u+s;0) + (1-p^{-2s}) p^{-(1/2-s)} B_p(u+s;1) - p^{-(2-2s)}.
cplx z3_bracket(long long p, const std::array<cplx, 4>& u, cplx s) {
  std::vector<cplx> us(4);
  for (int i = 0; i < 4; ++i) us[i] = u[i] + s;
  const cplx b0 = b_closed(p, us);
  cplx full_inv = 1.0;
  for (int i = 0; i < 4; ++i) full_inv *= 1.0 - pw(p, us[i]);
  const cplx b1 = 1.0 / full_inv - b0;
  const double ip = 1.0 / double(p);
  return ip + (1.0 - ip) * b0 + (1.0 - pw(p, 2.0 * s)) * pw(p, 0.5 - s) * b1 -
         pw(p, 2.0 - 2.0 * s);
}

}  // namespace

cplx z2_local(const LocalPoint& pt) {
  const long long p = pt.p;
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("z2_local: odd p");
  const std::array<cplx, 4>& u = pt.u;
  const cplx s = pt.s;
  const double chi = double(arith::kronecker(arith::m_of_k1(pt.k1), p));
  auto guard = [&](cplx f, const char* what) {
    if (std::abs(f) < 1e-13)
      throw std::runtime_error(std::string("z2_local: zeta-factor pole in ") +
                               what);
    return f;
  };
  if (pt.a % p == 0) {
    cplx out = 1.0;
    for (int i = 0; i < 4; ++i) {
      out *= 1.0 - chi * pw(p, 0.5 + u[i]);
      out /= guard(1.0 - chi * pw(p, 0.5 + u[i] + 2.0 * s), "L(1/2+u+2s)");
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        out *= 1.0 - pw(p, u[i] + u[j] + 2.0 * s);
        out /= guard(1.0 - pw(p, u[i] + u[j] + 1.0), "zeta(1+u_i+u_j)");
      }
    return out;
  }
  std::array<cplx, 4> us;
  for (int i = 0; i < 4; ++i) us[i] = u[i] + s;
  cplx denom = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      denom *= guard(1.0 - pw(p, u[i] + u[j] + 1.0), "zeta(1+u_i+u_j)");
  if (pt.k1 % p == 0) {
    // p^{1-2s} full2s + (1 - p^{1-2s}) C_p, with the large p^{1-2s} factor
    // distributed into the subset terms so nothing blows up for Re s > 1/2.
    std::array<cplx, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = pw(p, us[i]);
    cplx cross = 1.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) cross *= 1.0 - x[i] * x[j];
    cplx spread = 0.0;
    for (unsigned mask = 1; mask < 16; ++mask) {
      cplx e = 1.0 - 2.0 * s;  // exponent of the q = p^{-(1-2s)} prefactor
      for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) e += 2.0 * us[i];
      const int bits = __builtin_popcount(mask);
      spread += (bits % 2 ? -1.0 : 1.0) * pw(p, e);
      if (bits % 2 == 0) {
        cplx ea = 1.0 - 2.0 * s;
        for (int i = 0; i < 4; ++i)
          if (mask & (1u << i)) ea += us[i];
        spread -= pw(p, ea);
      }
    }
    return (c_p(p, us) + cross * spread) / denom;
  }
  cplx pref = 1.0;
  for (int i = 0; i < 4; ++i) {
    pref *= 1.0 - chi * pw(p, 0.5 + u[i]);
    pref /= guard(1.0 - chi * pw(p, 0.5 + u[i] + 2.0 * s), "L(1/2+u+2s)");
  }
  cplx full2s = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) full2s *= 1.0 - pw(p, u[i] + u[j] + 2.0 * s);
  // bracket = 1/p + (1-1/p) B_0(u+s) + (p^{s-1/2} - p^{-s-1/2}) B_1(u+s).
  const double ip = 1.0 / double(p);
  std::vector<cplx> usv(us.begin(), us.end());
  const cplx b0 = b_closed(p, usv);
  cplx s1;
  if (std::abs(s.real()) <= 2.0) {
    cplx minus = 1.0, plus = 1.0;
    for (int i = 0; i < 4; ++i) {
      minus *= 1.0 - pw(p, us[i]);
      plus *= 1.0 + pw(p, us[i]);
    }
    const cplx b1 = 0.5 * (1.0 / minus - 1.0 / plus);
    s1 = (pw(p, 0.5 - s) - pw(p, 0.5 + s)) * b1;
  } else {
    // Extreme |Re s|: fold the p^{s-1/2} weight into each odd tuple so the
    // exponents stay bounded.
    cplx total = 0.0;
    const int emax = 60;
    std::function<void(int, int, cplx)> rec = [&](int dim, int used, cplx sn) {
      if (dim == 4) {
        if (used % 2 == 1)
          total += pw(p, sn + 0.5 + (double(used) - 1.0) * s) -
                   pw(p, sn + 0.5 + (double(used) + 1.0) * s);
        return;
      }
      for (int n = 0; n <= emax; ++n) {
        const cplx e = sn + double(n) * u[dim];
        if (e.real() > 45.0) break;
        rec(dim + 1, used + n, e);
      }
    };
    rec(0, 0, cplx(0.0));
    s1 = total;
  }
  const cplx bracket = ip + (1.0 - ip) * b0 + chi * s1;
  return pref * full2s * bracket / denom;
}

cplx z_local_factor(const LocalPoint& pt) {
  const long long p = pt.p;
  const cplx s = pt.s;
  const cplx zeta2s = 1.0 / (1.0 - pw(p, 2.0 * s));
  if (pt.a % p == 0) return zeta2s;  // only the n = (0,...,0) column survives
  const double chi = double(arith::kronecker(arith::m_of_k1(pt.k1), p));
  cplx out = zeta2s * z2_local(pt);
  for (int i = 0; i < 4; ++i) {
    out /= 1.0 - chi * pw(p, 0.5 + pt.u[i]);
    out *= 1.0 - chi * pw(p, 0.5 + pt.u[i] + 2.0 * s);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      out /= 1.0 - pw(p, pt.u[i] + pt.u[j] + 2.0 * s);
      out *= 1.0 - pw(p, pt.u[i] + pt.u[j] + 1.0);
    }
  return out;
}

namespace {

// G_k(p^beta)/p^beta with k given by its p-valuation alpha and the
// Legendre symbol of its p-free part (avoids forming huge k).
double gauss_ratio(int alpha, int chi_kprime, long long p, int beta) {
  if (beta == 0) return 1.0;
  if (beta <= alpha) {
    if (beta % 2 == 1) return 0.0;
    return 1.0 - 1.0 / double(p);
  }
  if (beta == alpha + 1) {
    const double pa_over_pb = std::pow(double(p), double(alpha - beta));
    if (beta % 2 == 0) return -pa_over_pb;
    return chi_kprime * pa_over_pb * std::sqrt(double(p));
  }
  return 0.0;
}

}  // namespace

BSum f_p_brute(const LocalPoint& pt, int emax, const arith::ArithTables& t) {
  (void)t;
  const long long p = pt.p;
  if (pt.a % p == 0)
    throw std::invalid_argument("f_p_brute: requires p coprime to a");
  if (pt.s.real() < 0.55 || min_re(pt.u) < 0.25)
    throw std::invalid_argument("f_p_brute: outside convergent region");
  const int bmax = 4 * emax;
  std::vector<cplx> tbeta(bmax + 1, 0.0);
  std::array<std::vector<cplx>, 4> pows;
  for (int i = 0; i < 4; ++i) {
    pows[i].resize(emax + 1);
    pows[i][0] = 1.0;
    const cplx r = pw(p, pt.u[i]);
    for (int n = 1; n <= emax; ++n) pows[i][n] = pows[i][n - 1] * r;
  }
  const double cut = 1e-19;
  for (int n1 = 0; n1 <= emax; ++n1) {
    const cplx w1 = pows[0][n1];
    if (std::abs(w1) < cut) break;
    for (int n2 = 0; n2 <= emax; ++n2) {
      const cplx w2 = w1 * pows[1][n2];
      if (std::abs(w2) < cut) break;
      for (int n3 = 0; n3 <= emax; ++n3) {
        const cplx w3 = w2 * pows[2][n3];
        if (std::abs(w3) < cut) break;
        const int b3 = n1 + n2 + n3;
        for (int n4 = 0; n4 <= emax; ++n4) {
          const cplx w4 = w3 * pows[3][n4];
          if (std::abs(w4) < cut) break;
          tbeta[b3 + n4] += w4;
        }
      }
    }
  }
  const int vk1 = (pt.k1 % p == 0) ? 1 : 0;  // k1 squarefree
  long long kprime = pt.k1;
  while (kprime % p == 0) kprime /= p;
  const int chi_kprime = arith::kronecker(kprime, p);
  cplx total = 0.0;
  for (int k2 = 0; k2 <= emax; ++k2) {
    const int alpha = vk1 + 2 * k2;
    cplx inner = 0.0;
    for (int beta = 0; beta <= std::min(bmax, alpha + 1); ++beta)
      inner += tbeta[beta] * gauss_ratio(alpha, chi_kprime, p, beta);
    total += pw(p, 2.0 * double(k2) * pt.s) * inner;
  }
  const double qs = std::pow(double(p), -2.0 * pt.s.real());
  const double qu = std::pow(double(p), -min_re(pt.u));
  const double tail = std::pow(qs, emax + 1) / (1.0 - qs) +
                      4.0 * std::pow(qu, emax + 1) / (1.0 - qu);
  return {total, tail};
}

TruncatedProduct z_assemble(const std::array<cplx, 4>& u, cplx s, long long k1,
                            long long a, long long P,
                            const arith::ArithTables& t) {
  const double ru = min_re(u), rs = s.real();
  const bool region = (rs >= 0.5 - 0.021 && ru > 0.0) ||
                      (rs >= -0.05 - 1e-12 && ru >= 1.0 / 3 - 1e-12) ||
                      (rs >= 0.6 && ru >= -0.05);
  if (!region) throw std::invalid_argument("z_assemble: outside lemma region");
  if (std::abs(2.0 * s - 1.0) < 1e-12)
    throw std::invalid_argument("z_assemble: zeta(2s) pole at s = 1/2");
  const long long m = arith::m_of_k1(k1);
  const double chi2 = double(arith::kronecker(m, 2));

  auto l2 = [&](cplx sp) -> cplx {
    return lfun::l_hurwitz(sp, m) * (1.0 - chi2 * std::pow(cplx(2.0), -sp));
  };
  cplx out = special::zeta(2.0 * s);
  for (int i = 0; i < 4; ++i) out *= l2(0.5 + u[i]);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      out *= special::zeta2(u[i] + u[j] + 2.0 * s) /
             special::zeta2(u[i] + u[j] + 1.0);
  for (int i = 0; i < 4; ++i) out /= l2(0.5 + u[i] + 2.0 * s);

  cplx z2prod = 1.0;
  std::vector<double> devs;
  std::vector<long long> ps;
  for (long long p : t.primes) {
    if (p == 2) continue;
    if (p > P) break;
    const cplx loc = z2_local({p, u, s, k1, a});
    z2prod *= loc;
    if (p > P / 2) {
      devs.push_back(std::abs(loc - 1.0));
      ps.push_back(p);
    }
  }
  const double theta = std::min(rs, 0.5);
  const double eta = std::min(ru, 0.5);
  const double kappa =
      std::min(3.0 * eta + 2.0 * theta + 0.5, 4.0 * eta + 4.0 * theta);
  return {out * z2prod, P, std::abs(out) * product_tail(devs, ps, kappa, P)};
}

RelationCheck zstar_relation_check(const std::array<cplx, 4>& u, cplx s,
                                   long long k1, long long a, long long P,
                                   const arith::ArithTables& t) {
  if (min_re(u) < 2.0 || s.real() < 1.5)
    throw std::invalid_argument(
        "zstar_relation_check: absolutely convergent regime only");
  const long long Pv = std::min<long long>(P, 2000);
  const int k2max = 60;
  cplx zstar = 0.0;
  for (int k2 = 1; k2 <= k2max; ++k2) {
    cplx term = std::exp(-2.0 * s * std::log(double(k2)));
    if (k2 % 2 == 1) term = -term;
    cplx prod = 1.0;
    for (long long p : t.primes) {
      if (p == 2) continue;
      if (p > Pv) break;
      if (a % p == 0) continue;
      int alpha = 0;
      long long kk = k1;
      while (kk % p == 0) {
        kk /= p;
        ++alpha;
      }
      long long q2 = k2;
      while (q2 % p == 0) {
        q2 /= p;
        alpha += 2;
      }
      const long long kmod = (kk % p) * ((q2 % p) * (q2 % p) % p) % p;
      const int chi_kprime = arith::kronecker(kmod, p);
      const int bcap = alpha + 1;
      std::vector<cplx> tb(bcap + 1, 0.0);
      std::function<void(int, int, cplx)> rec = [&](int dim, int used,
                                                    cplx w) {
        if (dim == 4) {
          tb[used] += w;
          return;
        }
        cplx wn = w;
        for (int n = 0; used + n <= bcap; ++n) {
          rec(dim + 1, used + n, wn);
          wn *= pw(p, u[dim]);
        }
      };
      rec(0, 0, cplx(1.0));
      cplx loc = 0.0;
      for (int beta = 0; beta <= bcap; ++beta)
        loc += tb[beta] * gauss_ratio(alpha, chi_kprime, p, beta);
      prod *= loc;
    }
    zstar += term * prod;
  }
  auto z = z_assemble(u, s, k1, a, P, t);
  const cplx rhs = (std::pow(cplx(2.0), 1.0 - 2.0 * s) - 1.0) * z.value;
  return {zstar, rhs, std::abs(zstar - rhs)};
}

cplx residue_numeric(const std::function<cplx(cplx)>& f, cplx center,
                     double radius, int npoints) {
  cplx sum = 0.0;
  for (int j = 0; j < npoints; ++j) {
    const double th = 2.0 * kPi * j / npoints;
    const cplx w = radius * std::exp(cplx(0.0, th));
    sum += f(center + w) * w;
  }
  return sum / double(npoints);
}

TruncatedProduct z4(const std::array<cplx, 4>& u, cplx s, long long P,
                    const arith::ArithTables& t) {
  const double ru = min_re(u), rs = s.real();
  if (ru < 1.0 / 3 - 1e-12 || rs < -0.05 - 1e-12 || rs > 1.0 / 3 + 1e-12)
    throw std::invalid_argument("z4: outside the Z_3 region");
  // Pure Euler product: the zeta ratios of Z_3 cancel against
  // prod zeta_2(1+u_i+u_j)^{-1} and the L-ratio locals, leaving
  //   prod_p [ prod_{i<=j}(1-p^{-u_i-u_j-2s})
  //            prod_i (1-p^{-1/2-u_i})/(1-p^{-1/2-u_i-2s}) * bracket(p) ].
  cplx prod = 1.0;
  std::vector<double> devs;
  std::vector<long long> ps;
  for (long long p : t.primes) {
    if (p == 2) continue;
    if (p > P) break;
    cplx loc = z3_bracket(p, u, s);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        loc *= 1.0 - pw(p, u[i] + u[j] + 2.0 * s);
    for (int i = 0; i < 4; ++i)
      loc *= (1.0 - pw(p, 0.5 + u[i])) / (1.0 - pw(p, 0.5 + u[i] + 2.0 * s));
    prod *= loc;
    if (p > P / 2) {
      devs.push_back(std::abs(loc - 1.0));
      ps.push_back(p);
    }
  }
  return {prod, P, product_tail(devs, ps, 1.0 + 1.0 / 60, P)};
}

TruncatedProduct z3(const std::array<cplx, 4>& u, cplx s, long long P,
                    const arith::ArithTables& t) {
  auto z4v = z4(u, s, P, t);
  cplx zf = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) zf *= special::zeta2(u[i] + u[j] + 1.0);
  return {zf * z4v.value, P, std::abs(zf) * z4v.tail_estimate};
}

Z3SumCheck z3_sum_check(const std::array<cplx, 4>& u, cplx s, long long amax,
                        long long P, const arith::ArithTables& t) {
  auto closed = z3(u, s, P, t);
  cplx summed = 0.0;
  double zmax = 0.0;
  for (long long a = 1; a <= amax; a += 2) {
    if (t.mobius[a] == 0) continue;
    cplx z2 = 1.0;
    for (long long p : t.primes) {
      if (p == 2) continue;
      if (p > P) break;
      z2 *= z2_local({p, u, s, 1, a});
    }
    zmax = std::max(zmax, std::abs(z2));
    summed += double(t.mobius[a]) *
              std::exp(-(2.0 - 2.0 * s) * std::log(double(a))) * z2;
  }
  // |Z_2(.;1,a)| grows like a divisor function, so keep a log factor in
  // the tail of sum_{a > amax} a^{-sig}.
  const double sig = 2.0 - 2.0 * s.real();
  const double a_tail = zmax * std::pow(double(amax), 1.0 - sig) *
                        (std::log(double(amax)) / (sig - 1.0) +
                         1.0 / ((sig - 1.0) * (sig - 1.0)));
  return {closed.value, summed, std::abs(closed.value - summed), a_tail};
}

double iden_i_check(long long p, const std::array<cplx, 4>& z, int emax) {
  std::vector<cplx> up(4), um(4);
  for (int i = 0; i < 4; ++i) up[i] = 0.5 + z[i];
  um = up;
  um[0] = 0.5 - z[0];
  const double ip = 1.0 / double(p);
  const cplx b0 = b_sum(p, up, 0, emax).value;
  const cplx b1 = b_sum(p, up, 1, emax).value;
  const cplx lhs = ip + (1.0 - ip) * b0 +
                   pw(p, 0.5 - z[0]) * (1.0 - pw(p, 2.0 * z[0])) * b1 -
                   pw(p, 2.0 - 2.0 * z[0]);
  const cplx b0m = b_sum(p, um, 0, emax).value;
  const cplx rhs = (1.0 - pw(p, 1.0 - 2.0 * z[0])) * (ip + b0m);
  return std::abs(lhs - rhs);
}

double iden_ii_check(const std::array<cplx, 4>& z, long long P,
                     const arith::ArithTables& t) {
  const std::array<cplx, 4> u{0.5, 0.5 + z[1] - z[0], 0.5 + z[2] - z[0],
                              0.5 + z[3] - z[0]};
  auto lhs = z4(u, z[0], P, t);
  const std::array<cplx, 4> y{0.5 - z[0], 0.5 + z[1], 0.5 + z[2], 0.5 + z[3]};
  // 8/pi^2 = prod_{p odd} (1 - p^{-2}): keep the truncation matched.
  cplx rhs = 1.0;
  for (long long p : t.primes) {
    if (p == 2) continue;
    if (p > P) break;
    rhs *= (1.0 - 1.0 / double(p * p)) * h_local(2, p, y);
  }
  return std::abs(lhs.value - rhs);
}

LeadingCoefficient q10_leading_coefficient(long long P,
                                           const arith::ArithTables& t) {
  if (P < 1000) throw std::invalid_argument("q10: P >= 1000");
  auto phi = smooth::build_phi();
  const double phi_hat0 = smooth::fourier(phi, 0.0).real();

  const std::array<cplx, 4> half{0.5, 0.5, 0.5, 0.5};
  cplx prod = 1.0;
  double mismatch = 0.0;
  std::vector<double> devs;
  std::vector<long long> ps;
  for (long long p : t.primes) {
    if (p == 2) continue;
    if (p > P) break;
    const double ip = 1.0 / double(p);
    const double rp = 1.0 / std::sqrt(double(p));
    const double loc =
        std::pow(1.0 - ip, 10.0) / (1.0 + ip) *
        ((std::pow(1.0 + rp, -4.0) + std::pow(1.0 - rp, -4.0)) / 2.0 + ip);
    prod *= loc;
    mismatch = std::max(mismatch, std::abs(loc - h_local(2, p, half).real()));
    if (p > P / 2) {
      devs.push_back(std::abs(loc - 1.0));
      ps.push_back(p);
    }
  }
  const double denom = std::pow(2.0, 18.0) * 27.0 * 25.0 * 7.0 * kPi * kPi;
  TruncatedProduct ep{prod, P, product_tail(devs, ps, 1.5, P)};
  return {phi_hat0 / denom * prod.real(), phi_hat0, ep, mismatch};
}

}  // namespace qdlab::euler
