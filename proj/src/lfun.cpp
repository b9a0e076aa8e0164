#include "qdlab/lfun.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qdlab/arith.hpp"
#include "qdlab/quadrature.hpp"
#include "qdlab/special.hpp"

namespace qdlab::lfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Trapezoid over the vertical line Re s = c of g_a(s) x^{-s} / s, divided
// by 2 pi (the i of ds = i dt cancels the i of 1/(2 pi i)).
cplx v_contour(cplx alpha, double x, double c, double tmax, double h,
               double* tail) {
  const cplx lg_den = special::log_gamma((0.5 + alpha) / 2.0);
  const double lx = std::log(x);
  const int n = int(tmax / h);
  cplx sum = 0.0;
  double edge = 0.0;
  for (int j = -n; j <= n; ++j) {
    const cplx s(c, j * h);
    const cplx g = std::exp(-s / 2.0 * std::log(kPi) +
                            special::log_gamma((0.5 + alpha + s) / 2.0) -
                            lg_den);
    cplx term = g * std::exp(-s * lx) / s;
    if (j == -n || j == n) {
      term *= 0.5;
      edge += std::abs(term);
    }
    sum += term;
  }
  // Gamma decay makes the discarded tail comparable to the edge terms.
  if (tail) *tail = (edge * h + 1e-18) / (2 * kPi) * 4.0;
  return sum * h / (2 * kPi);
}

}  // namespace

cplx g_alpha(cplx alpha, cplx s) {
  const cplx w = (0.5 + alpha + s) / 2.0;
  // Gamma poles sit at w = 0, -1, -2, ...
  if (std::abs(w.imag()) < 1e-8 && w.real() <= 0.05 &&
      std::abs(w.real() - std::round(w.real())) < 1e-8)
    throw std::invalid_argument("g_alpha: s too close to a Gamma pole");
  return std::exp(-s / 2.0 * std::log(kPi) + special::log_gamma(w) -
                  special::log_gamma((0.5 + alpha) / 2.0));
}

VAlpha v_alpha(cplx alpha, double x, const AfeConfig& cfg) {
  if (!(x > 0)) throw std::invalid_argument("v_alpha: x > 0");
  double tail = 0.0;
  cplx val;
  if (x < 0.5) {
    // Shift left past the poles at s = 0 and s = -(1/2+alpha); remainder
    // on Re s = -2 is O(x^2).
    const cplx s0 = -(0.5 + alpha);
    const cplx residue = -2.0 * std::exp((0.5 + alpha) / 2.0 * std::log(kPi)) *
                         std::exp(-s0 * std::log(x)) /
                         ((0.5 + alpha) * special::gamma((0.5 + alpha) / 2.0));
    val = 1.0 + residue +
          v_contour(alpha, x, -2.0, cfg.im_truncation, 0.125, &tail);
  } else if (x < 6.0) {
    val = v_contour(alpha, x, cfg.contour_abscissa, cfg.im_truncation, 0.125,
                    &tail);
  } else {
    val = v_contour(alpha, x, 8.0, cfg.im_truncation, 0.125, &tail);
  }
  if (tail > 1e-10)
    throw std::runtime_error("v_alpha: quadrature tail bound exceeded");
  return {val, tail};
}

cplx root_factor(cplx alpha, long long d) {
  return std::exp(-alpha * std::log(8.0 * double(d) / kPi) +
                  special::log_gamma((0.5 - alpha) / 2.0) -
                  special::log_gamma((0.5 + alpha) / 2.0));
}

cplx lambda(cplx alpha) {
  return std::exp(alpha * std::log(kPi) +
                  special::log_gamma((0.5 - alpha) / 2.0) -
                  special::log_gamma((0.5 + alpha) / 2.0));
}

VTable::VTable(cplx alpha, const AfeConfig& cfg) : alpha_(alpha), cfg_(cfg) {
  log_x0_ = std::log(cfg.grid_x_min);
  step_ = std::log(10.0) / cfg.grid_per_decade;
  const int n =
      int(std::ceil((std::log(cfg.grid_x_max) - log_x0_) / step_)) + 4;
  values_.resize(n);
  for (int i = 0; i < n; ++i)
    values_[i] = v_alpha(alpha, std::exp(log_x0_ + i * step_), cfg).value;
}

cplx VTable::operator()(double x) const {
  const double u = (std::log(x) - log_x0_) / step_;
  if (u <= 2.0) return v_alpha(alpha_, x, cfg_).value;  // below grid: exact
  if (u >= double(values_.size() - 4)) return 0.0;      // superpolynomial decay
  const int i = int(u);
  const double f = u - i;
  // Quintic Lagrange through values_[i-2 .. i+3].
  const double xm2 = f + 2, xm1 = f + 1, x0 = f, x1 = f - 1, x2 = f - 2,
               x3 = f - 3;
  const double l0 = xm1 * x0 * x1 * x2 * x3 / (-120.0);
  const double l1 = xm2 * x0 * x1 * x2 * x3 / 24.0;
  const double l2 = xm2 * xm1 * x1 * x2 * x3 / (-12.0);
  const double l3 = xm2 * xm1 * x0 * x2 * x3 / 12.0;
  const double l4 = xm2 * xm1 * x0 * x1 * x3 / (-24.0);
  const double l5 = xm2 * xm1 * x0 * x1 * x2 / 120.0;
  return l0 * values_[i - 2] + l1 * values_[i - 1] + l2 * values_[i] +
         l3 * values_[i + 1] + l4 * values_[i + 2] + l5 * values_[i + 3];
}

void VTable::save(const std::string& path) const {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw std::runtime_error("VTable::save: cannot open " + path);
  std::fprintf(fp, "# alpha %.17g %.17g grid %.17g %.17g %zu\n", alpha_.real(),
               alpha_.imag(), log_x0_, step_, values_.size());
  for (size_t i = 0; i < values_.size(); ++i)
    std::fprintf(fp, "%.17g %.17g %.17g\n", std::exp(log_x0_ + i * step_),
                 values_[i].real(), values_[i].imag());
  std::fclose(fp);
}

VTable VTable::load(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "r");
  if (!fp) throw std::runtime_error("VTable::load: cannot open " + path);
  VTable t;
  double ar, ai;
  size_t n;
  if (std::fscanf(fp, "# alpha %lg %lg grid %lg %lg %zu\n", &ar, &ai,
                  &t.log_x0_, &t.step_, &n) != 5) {
    std::fclose(fp);
    throw std::runtime_error("VTable::load: bad header");
  }
  t.alpha_ = cplx(ar, ai);
  t.values_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    double x, re, im;
    if (std::fscanf(fp, "%lg %lg %lg\n", &x, &re, &im) != 3) {
      std::fclose(fp);
      throw std::runtime_error("VTable::load: bad row");
    }
    t.values_[i] = cplx(re, im);
  }
  std::fclose(fp);
  return t;
}

LValue l_afe(cplx alpha, long long d, const VTable& vplus, const VTable& vminus,
             const AfeConfig& cfg) {
  if (d <= 0 || d % 2 == 0 || !arith::is_squarefree(d))
    throw std::invalid_argument("l_afe: d odd squarefree > 0");
  const double sq8d = std::sqrt(8.0 * double(d));
  const long long ncut = (long long)std::ceil(
      cfg.tail_cutoff_multiplier * sq8d *
      (2.0 + std::log(2.0 + 8.0 * double(d))));
  const cplx chi_fac = root_factor(alpha, d);
  cplx s_plus = 0.0, s_minus = 0.0;
  for (long long n = 1; n <= ncut; n += 2) {
    const int chi = arith::kronecker(8 * d, n);
    if (chi == 0) continue;
    const double ln = std::log(double(n));
    const double x = double(n) / sq8d;
    s_plus += double(chi) * std::exp(-(0.5 + alpha) * ln) * vplus(x);
    s_minus += double(chi) * std::exp(-(0.5 - alpha) * ln) * vminus(x);
  }
  // Past the cutoff V decays faster than x^{-7.5}.
  const double xcut = double(ncut) / sq8d;
  const double tail =
      2.0 * std::pow(xcut, -7.5) * sq8d / std::sqrt(double(ncut));
  return {s_plus + chi_fac * s_minus, tail};
}

LValue l_afe(cplx alpha, long long d, const AfeConfig& cfg) {
  VTable vp(alpha, cfg), vm(-alpha, cfg);
  return l_afe(alpha, d, vp, vm, cfg);
}

cplx l_hurwitz(cplx s, long long m) {
  if (!arith::is_fundamental_discriminant(m))
    throw std::invalid_argument("l_hurwitz: m must be fundamental");
  const long long am = std::llabs(m);
  if (am > 10000) throw std::invalid_argument("l_hurwitz: |m| <= 10^4");
  cplx sum = 0.0;
  for (long long a = 1; a <= am; ++a) {
    const int chi = arith::kronecker(m, a);
    if (chi == 0) continue;
    sum += double(chi) * special::hurwitz_zeta(s, double(a) / double(am));
  }
  return std::exp(-s * std::log(double(am))) * sum;
}

cplx completed_lambda(cplx s, long long m) {
  const double a = (m < 0) ? 1.0 : 0.0;
  const double am = double(std::llabs(m));
  return std::exp((s + a) / 2.0 * std::log(am / kPi) +
                  special::log_gamma((s + a) / 2.0)) *
         l_hurwitz(s, m);
}

namespace {

// Cached line table tilde G(-sigma - i t) on a regular t-grid; G real,
// so t < 0 follows by conjugation. Truncated where the values reach the
// noise floor of the quadrature.
struct GMellinLine {
  double sigma = 0;
  double h = 0;
  std::vector<cplx> values;
};

const GMellinLine& g_mellin_line(double sigma) {
  static std::mutex mu;
  static std::map<double, GMellinLine> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(sigma);
  if (it != cache.end()) return it->second;

  static const quad::GaussLegendre gl(4000);
  static const smooth::TestFunction g = smooth::build_g();
  GMellinLine line;
  line.sigma = sigma;
  line.h = 0.25;
  const int nmax = int(1200.0 / line.h);
  line.values.reserve(2048);
  int below = 0;
  for (int j = 0; j <= nmax; ++j) {
    const cplx s(-sigma, -j * line.h);
    cplx v = gl.apply(
        [&](double x) { return g(x) * std::exp((s - 1.0) * std::log(x)); },
        0.75, 2.0);
    line.values.push_back(v);
    below = (std::abs(v) < 1e-15) ? below + 1 : 0;
    if (below >= 16) break;
  }
  return cache.emplace(sigma, std::move(line)).first->second;
}

}  // namespace

GgraveEval::GgraveEval(cplx z, int a_parity) : z_(z), a_(a_parity) {
  const GMellinLine& ml = g_mellin_line(kSigma);
  h_ = ml.h;
  const int n = int(ml.values.size()) - 1;
  w_.resize(2 * n + 1);
  csum_ = 0.0;
  for (int j = -n; j <= n; ++j) {
    const cplx s(kSigma, j * h_);
    const cplx ratio =
        std::exp(special::log_gamma(0.25 - (z_ - s - double(a_)) / 2.0) -
                 special::log_gamma(0.25 + (z_ - s + double(a_)) / 2.0));
    const cplx gm = (j >= 0) ? ml.values[j] : std::conj(ml.values[-j]);
    cplx w = ratio * gm * h_ / (2 * kPi);
    if (j == -n || j == n) w *= 0.5;
    w_[j + n] = w;
    csum_ += std::abs(w);
  }
}

cplx GgraveEval::line(double x) const {
  const int n = (int(w_.size()) - 1) / 2;
  const double lx = std::log(x);
  // x^{-s} = x^{-sigma} e^{-i t lx}, swept by an incremental rotation.
  const cplx rot = std::exp(cplx(0.0, -h_ * lx));
  cplx e = std::exp(cplx(-kSigma * lx, double(n) * h_ * lx));
  cplx sum = 0.0;
  for (const cplx& w : w_) {
    sum += w * e;
    e *= rot;
  }
  return sum;
}

cplx GgraveEval::kernel(double x) const {
  // Equivalent trig-kernel form of the same contour integral (reflection
  // plus duplication collapse the Gamma ratio):
  //   Ggrave_z(x) = (2/sqrt(pi)) x^{1/2-z} int G(v) v^{-1/2-z} trig(2xv) dv,
  // trig = cos for even parity, sin for odd. Finite and well conditioned
  // for large x.
  static const smooth::TestFunction g = smooth::build_g();
  static const quad::GaussLegendre gl(24);
  const int segs = std::max(6, int(std::ceil(2.0 * x * 1.25 / kPi)));
  const double width = 1.25 / segs;
  cplx total = 0.0;
  for (int i = 0; i < segs; ++i) {
    const double v0 = 0.75 + i * width;
    total += gl.apply(
        [&](double v) -> cplx {
          const double ph = 2.0 * x * v;
          const double tr = a_ ? std::sin(ph) : std::cos(ph);
          return g(v) * std::exp((-0.5 - z_) * std::log(v)) * tr;
        },
        v0, v0 + width);
  }
  return 2.0 / std::sqrt(kPi) * std::exp((0.5 - z_) * std::log(x)) * total;
}

cplx GgraveEval::operator()(double x) const {
  return (x <= 40.0) ? line(x) : kernel(x);
}

FePolyResult fe_poly_check(long long m, cplx z, double N) {
  if (std::llabs(m) > 1000 || !arith::is_fundamental_discriminant(m))
    throw std::invalid_argument("fe_poly_check: |m| <= 1000 fundamental");
  if (std::abs(z.real()) > 0.2)
    throw std::invalid_argument("fe_poly_check: |Re z| <= 0.2");
  const long long am = std::llabs(m);
  const smooth::TestFunction g = smooth::build_g();

  cplx lhs = 0.0;
  const long long n_lo = (long long)std::ceil(0.75 * N);
  const long long n_hi = (long long)std::floor(2.0 * N);
  for (long long n = n_lo; n <= n_hi; ++n) {
    const int chi = arith::kronecker(m, n);
    if (chi == 0) continue;
    lhs += double(chi) * std::exp(-(0.5 + z) * std::log(double(n))) *
           g(double(n) / N);
  }

  GgraveEval ggrave(z, (m < 0) ? 1 : 0);
  // Ggrave decays like exp(-c sqrt(x)); beyond x_cut it is below 1e-15
  // (measured), so the dual sum is truncated there.
  const double x_cut = 700.0;
  const double q = kPi * N / double(am);
  cplx rhs_sum = 0.0;
  double last_mag = 0.0;
  for (long long n = 1; q * double(n) <= x_cut; ++n) {
    const int chi = arith::kronecker(m, n);
    if (chi == 0) continue;
    const double x = q * double(n);
    const cplx term = double(chi) *
                      std::exp((-0.5 + z) * std::log(double(n))) * ggrave(x);
    rhs_sum += term;
    if (x > 0.8 * x_cut) last_mag = std::max(last_mag, std::abs(term));
  }
  const double tail = std::max(last_mag * 16.0, 1e-15 * (1.0 + std::abs(rhs_sum)));
  const cplx rhs = std::exp(z * std::log(kPi / double(am))) * rhs_sum;
  return {lhs, rhs, std::abs(lhs - rhs), tail};
}

}  // namespace qdlab::lfun
