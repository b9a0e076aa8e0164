#include "qdlab/sievelab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <numbers>
#include <stdexcept>

#include "qdlab/euler.hpp"
#include "qdlab/gauss.hpp"
#include "qdlab/parallel.hpp"
#include "qdlab/smooth.hpp"
#include "qdlab/special.hpp"

namespace qdlab::sievelab {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_perfect_square(long long v) {
  if (v < 0) return false;
  long long r = (long long)std::llround(std::sqrt(double(v)));
  for (long long d = std::max<long long>(0, r - 1); d <= r + 1; ++d)
    if (d * d == v) return true;
  return false;
}

// Inner weights n^{-1/2-it} G(n/N) for one (N, t).
struct InnerWeights {
  long long n_lo, n_hi;
  std::vector<cplx> w;
};

InnerWeights inner_weights(double N, double t, const smooth::TestFunction& g) {
  InnerWeights iw;
  iw.n_lo = (long long)std::ceil(0.75 * N);
  iw.n_hi = (long long)std::floor(2.0 * N);
  if (iw.n_lo < 1) iw.n_lo = 1;
  if (iw.n_hi >= iw.n_lo) {
    iw.w.resize(iw.n_hi - iw.n_lo + 1);
    for (long long n = iw.n_lo; n <= iw.n_hi; ++n) {
      const double ln = std::log(double(n));
      iw.w[n - iw.n_lo] =
          std::exp(cplx(-0.5 * ln, -t * ln)) * g(double(n) / N);
    }
  }
  return iw;
}

double fourth_power_mean(long long M, double N, double t,
                         const smooth::TestFunction& g, bool fundamental_only) {
  const InnerWeights iw = inner_weights(N, t, g);
  double total = 0.0;
  for (long long am = M + 1; am <= 2 * M; ++am) {
    for (long long m : {am, -am}) {
      if (fundamental_only) {
        if (!arith::is_fundamental_discriminant(m)) continue;
      } else {
        if (m > 0 && is_perfect_square(m)) continue;
      }
      cplx s = 0.0;
      for (long long n = iw.n_lo; n <= iw.n_hi; ++n) {
        const int chi = arith::kronecker(m, n);
        if (chi) s += double(chi) * iw.w[n - iw.n_lo];
      }
      const double a2 = std::norm(s);
      total += a2 * a2;
    }
  }
  return total;
}

}  // namespace

cplx dirichlet_poly(long long m, double N, double t,
                    const smooth::TestFunction& g) {
  if (m == 0) throw std::invalid_argument("dirichlet_poly: m != 0");
  if (N < 0.5) return 0.0;
  const InnerWeights iw = inner_weights(N, t, g);
  cplx s = 0.0;
  for (long long n = iw.n_lo; n <= iw.n_hi; ++n) {
    const int chi = arith::kronecker(m, n);
    if (chi) s += double(chi) * iw.w[n - iw.n_lo];
  }
  return s;
}

double s_full(long long M, double N, double t, const smooth::TestFunction& g) {
  if (M > (1 << 14) * 4)
    throw std::invalid_argument("s_full: M beyond the cost budget");
  if (N < 0.5) return 0.0;
  return fourth_power_mean(M, N, t, g, false);
}

double s_flat(long long M, double N, double t, const smooth::TestFunction& g) {
  if (M > (1 << 14) * 4)
    throw std::invalid_argument("s_flat: M beyond the cost budget");
  if (N < 0.5) return 0.0;
  return fourth_power_mean(M, N, t, g, true);
}

double envelope(long long M, double N, double t) {
  const double m = double(M), n2 = N * N;
  return (1.0 + std::abs(t)) * (1.0 + std::abs(t)) *
         (m + n2 * std::log(2.0 + n2 / m)) *
         std::pow(std::log(2.0 + m * N), 6.0);
}

std::vector<SieveCell> envelope_report(const std::vector<long long>& ms,
                                       const std::vector<double>& ns,
                                       const std::vector<double>& ts,
                                       int threads) {
  const smooth::TestFunction g = smooth::build_g();
  struct Key {
    long long M;
    double N, t;
  };
  std::vector<Key> keys;
  for (long long M : ms)
    for (double N : ns)
      for (double t : ts) keys.push_back({M, N, t});
  auto cells = par::map_chunks<SieveCell>(
      int(keys.size()), threads, [&](int i) -> SieveCell {
        const Key& k = keys[i];
        SieveCell c;
        c.M = k.M;
        c.N = k.N;
        c.t = k.t;
        c.flat = s_flat(k.M, k.N, k.t, g);
        c.full = s_full(k.M, k.N, k.t, g);
        c.envelope = envelope(k.M, k.N, k.t);
        c.ratio = c.flat / c.envelope;
        return c;
      });
  return cells;
}

namespace {

// sum_{d in Z, (d, q) = 1} F(d/Z) for the Fejer window via the line sum
// and squarefree inclusion-exclusion over q's prime radical.
double fejer_coprime_sum(const smooth::TestFunction& f, double Z, long long q,
                         const arith::ArithTables& tables) {
  std::vector<long long> ps;
  long long m = q;
  while (m > 1) {
    long long p = tables.smallest_prime_factor[m];
    ps.push_back(p);
    while (m % p == 0) m /= p;
  }
  double s = 0.0;
  const int k = int(ps.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    long long delta = 1;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) delta *= ps[i];
    const double sign = (__builtin_popcount(unsigned(mask)) % 2) ? -1.0 : 1.0;
    s += sign * smooth::fejer_line_sum(f, Z / double(delta));
  }
  return s;
}

// Truncated character-twisted sum for the Fejer window at nonsquare odd n:
// partial-sum cancellation of chi keeps the Abel tail quadratically small.
struct FejerChiSum {
  double value;
  double tail;
};

FejerChiSum fejer_chi_sum(const smooth::TestFunction& f, double Z,
                          long long n) {
  const int eps = arith::kronecker(-1, n);
  if (eps == -1) return {0.0, 0.0};  // (d/n) is odd in d: exact zero
  const long long period = n;  // (d/n) has period n in d when (-1/n) = +1
  std::vector<double> chi(period);
  double prefix = 0.0, max_prefix = 0.0;
  for (long long r = 0; r < period; ++r) {
    chi[r] = double(arith::kronecker(r, n));
    prefix += chi[r];
    max_prefix = std::max(max_prefix, std::abs(prefix));
  }
  const double A = f.fejer_A, a = f.fejer_a;
  const long long T = 200000000;
  double sum = 0.0;
  for (long long d = 1; d <= T; ++d) {
    const double c = chi[d % period];
    if (c == 0.0) continue;
    const double u = a * double(d) / Z;
    const double sv = std::sin(kPi * u) / (kPi * u);
    sum += c * A * sv * sv;
  }
  // Abel bound: bounded character prefix sums against the quadratically
  // decaying envelope and its variation.
  const double tail =
      16.0 * max_prefix * A * std::pow(Z / (kPi * a * double(T)), 2.0);
  return {2.0 * sum, tail};  // even extension: d and -d carry equal terms
}

}  // namespace

PoissonCheck poisson_check(const smooth::TestFunction& f, long long n, double Z,
                           PoissonVariant variant,
                           const arith::ArithTables& tables) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("poisson_check: odd n");
  if (n > 1000) throw std::invalid_argument("poisson_check: n <= 1000");
  const bool fejer = (f.label == smooth::TestFunction::Label::F);

  // Cached check-transform samples.
  std::map<double, cplx> fcheck_cache;
  auto fcheck = [&](double y) -> cplx {
    auto it = fcheck_cache.find(y);
    if (it != fcheck_cache.end()) return it->second;
    cplx v = smooth::check_transform(f, y).direct;
    fcheck_cache.emplace(y, v);
    return v;
  };

  PoissonCheck out{};
  // Left side.
  if (!fejer) {
    // Rapid decay: truncate where F < 1e-18.
    const long long D = (long long)std::ceil(3.7 * Z);
    cplx lhs = 0.0;
    if (variant == PoissonVariant::all) {
      for (long long d = -D; d <= D; ++d) {
        const int chi = arith::kronecker(d, n);
        if (chi) lhs += double(chi) * f(double(d) / Z);
      }
    } else {
      for (long long d = -(D | 1); d <= D; d += 2) {
        const int chi = arith::kronecker(d, n);
        if (chi) lhs += double(chi) * f(double(d) / Z);
      }
    }
    out.lhs = lhs;
    out.lhs_tail = 2.0 * Z * f(double(D) / Z);
  } else {
    const bool square = is_perfect_square(n);
    auto all_variant = [&](double z) -> FejerChiSum {
      if (square) return {fejer_coprime_sum(f, z, n, tables), 1e-12};
      return fejer_chi_sum(f, z, n);
    };
    if (variant == PoissonVariant::all) {
      auto r = all_variant(Z);
      out.lhs = r.value;
      out.lhs_tail = r.tail;
    } else {
      // odd d: subtract the even-d part, (2e/n) = (2/n)(e/n) at Z/2.
      auto r1 = all_variant(Z);
      auto r2 = all_variant(Z / 2.0);
      out.lhs = r1.value - double(arith::kronecker(2, n)) * r2.value;
      out.lhs_tail = r1.tail + r2.tail;
    }
  }

  // Right side.
  const double denom = (variant == PoissonVariant::all) ? double(n) : 2.0 * double(n);
  cplx rhs = 0.0;
  double rhs_tail = 0.0;
  if (fejer) {
    // Band-limited: checkF is supported in [-c0/2, c0/2].
    const double ymax = 0.5 * f.c0;
    const long long K = (long long)std::floor(ymax * denom / Z);
    for (long long k = -K; k <= K; ++k) {
      double gk = gauss::gauss_closed(k, n, tables).to_double();
      double sgn = (variant == PoissonVariant::odd && (k & 1)) ? -1.0 : 1.0;
      rhs += sgn * gk * fcheck(double(k) * Z / denom);
    }
  } else {
    // Gaussian-type decay of checkF.
    const long long K = (long long)std::ceil(3.7 * denom / Z) + 1;
    for (long long k = -K; k <= K; ++k) {
      double gk = gauss::gauss_closed(k, n, tables).to_double();
      if (gk == 0.0) continue;
      double sgn = (variant == PoissonVariant::odd && (k & 1)) ? -1.0 : 1.0;
      rhs += sgn * gk * fcheck(double(k) * Z / denom);
    }
    rhs_tail = 2.0 * double(n) * std::abs(fcheck(double(K) * Z / denom));
  }
  rhs *= Z / denom;
  if (variant == PoissonVariant::odd)
    rhs *= double(arith::kronecker(2, n));
  out.rhs = rhs;
  out.rhs_tail = rhs_tail * Z / denom;
  if (out.lhs_tail + out.rhs_tail > 1e-9)
    throw std::runtime_error("poisson_check: truncation tails exceed 1e-9");
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

M0Diagnostic m0_diagnostic(double N, long long P, const arith::ArithTables& t,
                           int threads) {
  if (N > 4096.0) throw std::invalid_argument("m0_diagnostic: N <= 2^12");
  const smooth::TestFunction g = smooth::build_g();
  M0Diagnostic out{0.0, 0.0, 0.0, 0};
  const long long n_lo = std::max<long long>(1, (long long)std::ceil(0.75 * N));
  const long long n_hi = (long long)std::floor(2.0 * N);

  // Enumerate the window pairs, bucket them by the squarefree core of the
  // product; a quadruple contributes iff the two pair cores agree.
  struct Pair {
    int32_t n1, n2;
    double w;     // (n1 n2)^{-1/2} G(n1/N) G(n2/N)
    int64_t core;
  };
  std::vector<Pair> pairs;
  if (n_hi >= n_lo) {
    std::vector<double> gval(n_hi - n_lo + 1);
    std::vector<long long> core1(n_hi - n_lo + 1);
    for (long long v = n_lo; v <= n_hi; ++v) {
      gval[v - n_lo] = (v % 2) ? g(double(v) / N) : 0.0;
      core1[v - n_lo] = (v % 2) ? arith::core_of(v, t) : 0;
    }
    for (long long n1 = n_lo | 1; n1 <= n_hi; n1 += 2) {
      if (gval[n1 - n_lo] == 0.0) continue;
      for (long long n2 = n_lo | 1; n2 <= n_hi; n2 += 2) {
        if (gval[n2 - n_lo] == 0.0) continue;
        const long long c1 = core1[n1 - n_lo], c2 = core1[n2 - n_lo];
        const long long gg = std::gcd(c1, c2);
        Pair pr;
        pr.n1 = int32_t(n1);
        pr.n2 = int32_t(n2);
        pr.w = gval[n1 - n_lo] * gval[n2 - n_lo] /
               std::sqrt(double(n1) * double(n2));
        pr.core = (c1 / gg) * (c2 / gg);
        pairs.push_back(pr);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return a.core < b.core; });

  // Bucket boundaries.
  std::vector<std::pair<size_t, size_t>> buckets;
  for (size_t i = 0; i < pairs.size();) {
    size_t j = i;
    while (j < pairs.size() && pairs[j].core == pairs[i].core) ++j;
    buckets.push_back({i, j});
    i = j;
  }

  auto prime_list = [&](long long v, std::array<int32_t, 8>& ps) -> int {
    int k = 0;
    while (v > 1) {
      const long long p = t.smallest_prime_factor[v];
      ps[k++] = int32_t(p);
      while (v % p == 0) v /= p;
    }
    return k;
  };

  struct Acc {
    double sum;
    long long count;
  };
  auto parts = par::map_chunks<Acc>(
      int(buckets.size()), threads, [&](int bi) -> Acc {
        Acc acc{0.0, 0};
        const auto [lo, hi] = buckets[bi];
        for (size_t i = lo; i < hi; ++i) {
          std::array<int32_t, 8> pi_list;
          std::array<int32_t, 8> pj_list;
          std::array<int32_t, 8> pi2_list;
          std::array<int32_t, 8> pj2_list;
          const int ki1 = prime_list(pairs[i].n1, pi_list);
          const int ki2 = prime_list(pairs[i].n2, pi2_list);
          for (size_t j = lo; j < hi; ++j) {
            const int kj1 = prime_list(pairs[j].n1, pj_list);
            const int kj2 = prime_list(pairs[j].n2, pj2_list);
            // Union of at most 4 short prime lists.
            std::array<int32_t, 32> un;
            int m = 0;
            for (int x = 0; x < ki1; ++x) un[m++] = pi_list[x];
            for (int x = 0; x < ki2; ++x) un[m++] = pi2_list[x];
            for (int x = 0; x < kj1; ++x) un[m++] = pj_list[x];
            for (int x = 0; x < kj2; ++x) un[m++] = pj2_list[x];
            std::sort(un.begin(), un.begin() + m);
            double gw = 1.0;
            for (int x = 0; x < m; ++x) {
              if (x > 0 && un[x] == un[x - 1]) continue;
              gw *= 1.0 - 1.0 / double(un[x]);
            }
            acc.sum += pairs[i].w * pairs[j].w * gw;
            ++acc.count;
          }
        }
        return acc;
      });
  for (const Acc& a : parts) {
    out.brute += a.sum;
    out.tuple_count += a.count;
  }

  const double gtilde0 = smooth::mellin(g, cplx(0.0)).real();
  const auto h1 = euler::h_global(1, {0.5, 0.5, 0.5, 0.5}, P, t);
  out.predicted = std::pow(gtilde0, 4.0) / (1024.0 * 720.0) *
                  h1.value.real() * (1.0 - 12.0 / 32.0) *
                  std::pow(std::log(N), 6.0);
  out.ratio = (out.predicted != 0.0) ? out.brute / out.predicted : 0.0;
  return out;
}

InflationCheck inflation_check(double inflation_c, long long M, double N,
                               double t, double C) {
  const smooth::TestFunction g = smooth::build_g();
  const double lhs = s_flat(M, N, t, g);
  const double root = std::sqrt(inflation_c);
  double psum = 0.0;
  for (long long p = (long long)std::ceil(root);
       p <= (long long)std::floor(std::sqrt(2.0 * inflation_c)); ++p) {
    bool prime = p >= 2;
    for (long long q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    psum += s_flat(M, N / double(p), t, g) / double(p * p);
  }
  const long long mc1 = (long long)std::llround(double(M) * inflation_c);
  const double rhs =
      C * std::log(inflation_c) / root *
      (s_full(mc1, N, t, g) + s_full(2 * mc1, N, t, g) + psum);
  return {lhs, rhs, lhs <= rhs};
}

}  // namespace qdlab::sievelab
