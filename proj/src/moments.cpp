#include "qdlab/moments.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdlab/euler.hpp"
#include "qdlab/parallel.hpp"
#include "qdlab/quadrature.hpp"
#include "qdlab/special.hpp"

namespace qdlab::moments {

namespace {
constexpr double kPi = std::numbers::pi;
}

Shift4 admissible_shifts(double log_x, const std::array<double, 4>& pattern) {
  Shift4 s;
  s.log_x = log_x;
  for (int i = 0; i < 4; ++i) s.alpha[i] = cplx(pattern[i] / log_x);
  bool size_ok = true;
  for (double p : pattern)
    if (p < 0.5 - 1e-12 || p > 1.0 + 1e-12) size_ok = false;
  double margin = 1e300;
  for (int e0 = -1; e0 <= 1; ++e0)
    for (int e1 = -1; e1 <= 1; ++e1)
      for (int e2 = -1; e2 <= 1; ++e2)
        for (int e3 = -1; e3 <= 1; ++e3) {
          if (!e0 && !e1 && !e2 && !e3) continue;
          margin = std::min(margin, std::abs(e0 * pattern[0] + e1 * pattern[1] +
                                             e2 * pattern[2] + e3 * pattern[3]));
        }
  s.margin = margin;
  s.admissible = size_ok && margin >= 1.0 / 50 - 1e-12;
  return s;
}

MomentEngine::MomentEngine(const Shift4& shifts, const lfun::AfeConfig& cfg,
                           long long max_x, int threads)
    : shifts_(shifts), cfg_(cfg), threads_(threads),
      tables_(arith::build_tables(2 * max_x + 16)) {
  for (int i = 0; i < 4; ++i) {
    vplus_.emplace_back(shifts.alpha[i], cfg);
    vminus_.emplace_back(-shifts.alpha[i], cfg);
  }
}

MomentValue MomentEngine::empirical(long long X,
                                    const smooth::TestFunction& phi) const {
  if (2 * X > tables_.limit)
    throw std::invalid_argument("empirical: X beyond the sieve budget");
  const long long d_lo = std::max<long long>(
      1, (long long)std::floor(phi.support_lo * double(X)));
  const long long d_hi = (long long)std::ceil(phi.support_hi * double(X));

  // Per-n power tables n^{-1/2 -+ alpha_i} shared across d.
  const double max8d = 8.0 * double(d_hi);
  const long long ncut_max = (long long)std::ceil(
      cfg_.tail_cutoff_multiplier * std::sqrt(max8d) *
      (2.0 + std::log(2.0 + max8d)));
  std::array<std::vector<cplx>, 4> powp, powm;
  std::vector<double> ln_n(ncut_max + 1, 0.0);
  for (long long n = 1; n <= ncut_max; n += 2) ln_n[n] = std::log(double(n));
  for (int i = 0; i < 4; ++i) {
    powp[i].assign(ncut_max + 1, cplx(0.0));
    powm[i].assign(ncut_max + 1, cplx(0.0));
    for (long long n = 1; n <= ncut_max; n += 2) {
      powp[i][n] = std::exp(-(0.5 + shifts_.alpha[i]) * ln_n[n]);
      powm[i][n] = std::exp(-(0.5 - shifts_.alpha[i]) * ln_n[n]);
    }
  }

  struct Chunk {
    cplx sum;
    double tail;
    long long count;
  };
  const long long chunk_width = 512;
  const int nchunks = int((d_hi - d_lo) / chunk_width + 1);
  auto chunks = par::map_chunks<Chunk>(nchunks, threads_, [&](int ci) -> Chunk {
    Chunk out{cplx(0.0), 0.0, 0};
    const long long lo = d_lo + ci * chunk_width;
    const long long hi = std::min(d_hi, lo + chunk_width - 1);
    for (long long d = lo; d <= hi; ++d) {
      if (!tables_.is_odd_squarefree[d]) continue;
      const double w = phi(double(d) / double(X));
      if (w == 0.0) continue;
      ++out.count;
      const double sq8d = std::sqrt(8.0 * double(d));
      const long long ncut = (long long)std::ceil(
          cfg_.tail_cutoff_multiplier * sq8d *
          (2.0 + std::log(2.0 + 8.0 * double(d))));
      std::array<cplx, 4> sp{}, sm{};
      for (long long n = 1; n <= ncut; n += 2) {
        const int chi = arith::kronecker(8 * d, n);
        if (chi == 0) continue;
        const double c = double(chi);
        const double x = double(n) / sq8d;
        for (int i = 0; i < 4; ++i) {
          sp[i] += c * powp[i][n] * vplus_[i](x);
          sm[i] += c * powm[i][n] * vminus_[i](x);
        }
      }
      cplx prod = 1.0;
      for (int i = 0; i < 4; ++i)
        prod *= sp[i] + lfun::root_factor(shifts_.alpha[i], d) * sm[i];
      out.sum += prod * w;
      const double xcut = double(ncut) / sq8d;
      out.tail = std::max(out.tail, 2.0 * std::pow(xcut, -7.5) * sq8d /
                                        std::sqrt(double(ncut)));
    }
    return out;
  });
  MomentValue mv{cplx(0.0), 0.0, 0};
  for (const Chunk& c : chunks) {
    mv.value += c.sum;
    mv.max_afe_tail = std::max(mv.max_afe_tail, c.tail);
    mv.d_count += c.count;
  }
  return mv;
}

MomentValue MomentEngine::empirical_hurwitz(
    long long X, const smooth::TestFunction& phi) const {
  const long long d_lo = std::max<long long>(
      1, (long long)std::floor(phi.support_lo * double(X)));
  const long long d_hi = (long long)std::ceil(phi.support_hi * double(X));
  MomentValue mv{cplx(0.0), 0.0, 0};
  for (long long d = d_lo; d <= d_hi; ++d) {
    if (!tables_.is_odd_squarefree[d]) continue;
    const double w = phi(double(d) / double(X));
    if (w == 0.0) continue;
    ++mv.d_count;
    cplx prod = 1.0;
    for (int i = 0; i < 4; ++i)
      prod *= lfun::l_hurwitz(0.5 + shifts_.alpha[i], 8 * d);
    mv.value += prod * w;
  }
  return mv;
}

cplx predicted_term(long long X, const Shift4& shifts,
                    const smooth::TestFunction& phi,
                    const std::array<int, 4>& eps, long long P,
                    const arith::ArithTables& t) {
  const auto& a = shifts.alpha;
  cplx exponent = 0.0;
  for (int i = 0; i < 4; ++i) exponent += (1.0 - double(eps[i])) / 2.0 * a[i];
  cplx term = std::exp(-exponent * std::log(8.0 * double(X)));
  for (int i = 0; i < 4; ++i)
    if (eps[i] < 0) term *= lfun::lambda(a[i]);
  // integral of x^{-sum (1-eps_i)/2 alpha_i} phi(x) dx
  auto integrand = [&](double x) -> cplx {
    if (x <= 0.0) return 0.0;
    return phi(x) * std::exp(-exponent * std::log(x));
  };
  term *=
      quad::integrate(integrand, phi.support_lo, phi.support_hi, 1e-13).value;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      term *=
          special::zeta2(1.0 + double(eps[i]) * a[i] + double(eps[j]) * a[j]);
  std::array<cplx, 4> u;
  for (int i = 0; i < 4; ++i) u[i] = 0.5 + double(eps[i]) * a[i];
  term *= euler::h_global(2, u, P, t).value;
  return term;
}

cplx predicted_main_term(long long X, const Shift4& shifts,
                         const smooth::TestFunction& phi, long long P,
                         const arith::ArithTables& t) {
  if (!shifts.admissible)
    throw std::invalid_argument(
        "predicted_main_term: inadmissible shifts (zeta_2 pole)");
  cplx sum = 0.0;
  for (int mask = 0; mask < 16; ++mask) {
    std::array<int, 4> eps;
    for (int i = 0; i < 4; ++i) eps[i] = (mask & (1 << i)) ? -1 : 1;
    sum += predicted_term(X, shifts, phi, eps, P, t);
  }
  return 4.0 * double(X) / (kPi * kPi) * sum;
}

std::vector<MomentReport> moment_sweep(const std::vector<long long>& xs,
                                       const SweepConfig& cfg) {
  std::vector<MomentReport> out;
  if (xs.empty()) return out;
  long long max_x = 0;
  for (long long x : xs) max_x = std::max(max_x, x);
  auto phi = smooth::build_phi();
  // Shifts are tied to the sweep-wide log X so the V tables are shared.
  const double log_max = std::log(double(max_x));
  Shift4 shifts = admissible_shifts(log_max, cfg.pattern);
  MomentEngine engine(shifts, cfg.afe, max_x, cfg.threads);
  for (long long X : xs) {
    MomentReport r;
    r.X = X;
    r.shifts = shifts;
    r.phi_label = "bump[1,2]";
    r.ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto emp = engine.empirical(X, phi);
      r.empirical = emp.value;
      r.d_count = emp.d_count;
      r.max_afe_tail = emp.max_afe_tail;
      r.predicted = predicted_main_term(X, shifts, phi, cfg.prime_cutoff,
                                        engine.tables());
      r.ratio =
          (r.predicted != cplx(0.0)) ? r.empirical / r.predicted : cplx(0.0);
    } catch (const std::exception& e) {
      r.ok = false;
      r.error = e.what();
      r.empirical = r.predicted = r.ratio = 0.0;
      r.d_count = 0;
      r.max_afe_tail = 0.0;
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.runtime_seconds =
        cfg.record_timing ? std::chrono::duration<double>(t1 - t0).count()
                          : 0.0;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qdlab::moments
