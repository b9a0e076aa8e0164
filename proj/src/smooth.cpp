#include "qdlab/smooth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdlab/quadrature.hpp"
#include "qdlab/special.hpp"

namespace qdlab::smooth {

namespace {

constexpr double kPi = std::numbers::pi;

double bump_unit(double u) {
  // exp(-1/u) guarded against underflow near u = 0.
  if (u <= 1e-12) return 0.0;
  return std::exp(-1.0 / u);
}

double eta(double x) {
  if (x <= 0.75 || x >= 2.0) return 0.0;
  return bump_unit((x - 0.75) * (2.0 - x));
}

double eta_dyadic_norm(double x) {
  // sum over j in Z of eta(x / 2^j); at most two nonzero terms.
  double s = 0.0;
  int j0 = int(std::floor(std::log2(x / 2.0))) - 1;
  for (int j = j0; j <= j0 + 4; ++j) s += eta(std::ldexp(x, -j));
  return s;
}

double g_eval(double x) {
  if (x <= 0.75 || x >= 2.0) return 0.0;
  return eta(x) / eta_dyadic_norm(x);
}

double sinc(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - (kPi * u) * (kPi * u) / 6.0;
  return std::sin(kPi * u) / (kPi * u);
}

// integral_0^inf [sum_i coef_i cos(c_i x)] / x^2 dx with sum coef_i = 0,
// computed as a finite quadrature plus cosine-integral tails.
double cos_combo_over_x2(const std::vector<double>& coef,
                         const std::vector<double>& freq) {
  const double T = 4096.0;
  auto f = [&](double x) -> double {
    if (x < 1e-4) {
      // series: sum coef (1 - (cx)^2/2 + (cx)^4/24)/x^2, constant term cancels
      double v = 0.0;
      for (size_t i = 0; i < coef.size(); ++i)
        v += coef[i] * (-freq[i] * freq[i] / 2.0 +
                        x * x * freq[i] * freq[i] * freq[i] * freq[i] / 24.0);
      return v;
    }
    double v = 0.0;
    for (size_t i = 0; i < coef.size(); ++i) v += coef[i] * std::cos(freq[i] * x);
    return v / (x * x);
  };
  // Fixed-order panels: at most ~1.2 oscillations of the fastest frequency
  // per panel, so GL-32 is exact to machine precision.
  static const quad::GaussLegendre gl(32);
  double fmax = 0.0;
  for (double c : freq) fmax = std::max(fmax, c);
  const double panel = std::min(8.0, 6.0 / std::max(fmax, 1e-3));
  double val = 0.0;
  for (double x0 = 0.0; x0 < T; x0 += panel)
    val += gl.apply(f, x0, std::min(x0 + panel, T));
  for (size_t i = 0; i < coef.size(); ++i) {
    if (freq[i] == 0.0)
      val += coef[i] * quad::tail_one_over_x2(T);
    else
      val += coef[i] * quad::tail_cos_over_x2(freq[i], T);
  }
  return val;
}

cplx fejer_hat(const TestFunction& f, double y) {
  // hat F(y) = A/(pi^2 a^2) * I(|y|),
  // I(y) = int_0^inf [cos(2 pi y x) - cos(2 pi (a+y) x)/2 - cos(2 pi |a-y| x)/2] / x^2 dx.
  const double a = f.fejer_a;
  y = std::abs(y);
  std::vector<double> coef{1.0, -0.5, -0.5};
  std::vector<double> freq{2 * kPi * y, 2 * kPi * (a + y), 2 * kPi * std::abs(a - y)};
  double ival = cos_combo_over_x2(coef, freq);
  return f.fejer_A / (kPi * kPi * a * a) * ival;
}

cplx fourier_finite(const TestFunction& f, double y, double lo, double hi) {
  auto g = [&](double x) -> cplx {
    double ang = -2 * kPi * x * y;
    return f.eval(x) * cplx(std::cos(ang), std::sin(ang));
  };
  return quad::integrate(g, lo, hi, 1e-13).value;
}

}  // namespace

TestFunction build_phi() {
  TestFunction t;
  t.label = TestFunction::Label::PHI;
  t.support_lo = 1.0;
  t.support_hi = 2.0;
  t.even = false;
  t.eval = [](double x) {
    if (x <= 1.0 || x >= 2.0) return 0.0;
    double u = 2.0 * x - 3.0;
    return bump_unit(1.0 - u * u);
  };
  return t;
}

TestFunction build_g() {
  TestFunction t;
  t.label = TestFunction::Label::G;
  t.support_lo = 0.75;
  t.support_hi = 2.0;
  t.even = false;
  t.eval = g_eval;
  return t;
}

TestFunction build_v() {
  TestFunction t;
  t.label = TestFunction::Label::V;
  t.support_lo = 0.375;
  t.support_hi = 4.0;
  t.even = false;
  t.eval = [](double x) { return g_eval(2 * x) + g_eval(x) + g_eval(0.5 * x); };
  return t;
}

TestFunction build_gauss_surrogate() {
  TestFunction t;
  t.label = TestFunction::Label::GAUSS;
  t.support_lo = -12.0;
  t.support_hi = 12.0;
  t.even = true;
  t.eval = [](double x) { return std::exp(-kPi * x * x); };
  return t;
}

TestFunction build_f(double c0, double c1, FCertificate* cert) {
  if (c0 <= 0 || c1 <= 0) throw std::invalid_argument("build_f: c0, c1 > 0");
  TestFunction t;
  t.label = TestFunction::Label::F;
  t.support_lo = -1e300;
  t.support_hi = 1e300;
  t.even = true;
  t.c0 = c0;
  t.c1 = c1;
  t.fejer_a = 0.5 * c0;
  const double s = sinc(t.fejer_a * c1);
  t.fejer_A = (1.0 + 1e-9) / (s * s);
  const double A = t.fejer_A, a = t.fejer_a;
  t.eval = [A, a](double x) {
    double v = sinc(a * x);
    return A * v * v;
  };

  FCertificate c;
  c.min_on_window = 1e300;
  for (int i = 0; i <= 4096; ++i) {
    double x = -c1 + 2.0 * c1 * i / 4096.0;
    c.min_on_window = std::min(c.min_on_window, t.eval(x));
  }
  c.fhat0 = fejer_hat(t, 0.0).real();
  c.max_leak_rel = 0.0;
  for (double y : {1.05 * c0, 1.5 * c0, 2.0 * c0, 4.0 * c0, 8.0 * c0}) {
    double leak = std::abs(fejer_hat(t, y)) / c.fhat0;
    c.max_leak_rel = std::max(c.max_leak_rel, leak);
  }
  c.pass = c.min_on_window >= 1.0 && c.max_leak_rel <= 1e-8;
  if (cert) *cert = c;
  if (!c.pass) throw std::runtime_error("build_f: window certificate failed");
  return t;
}

cplx mellin(const TestFunction& f, cplx s, double abs_tol) {
  auto g = [&](double x) -> cplx {
    if (x <= 0.0) return 0.0;
    return f.eval(x) * std::exp((s - 1.0) * std::log(x));
  };
  switch (f.label) {
    case TestFunction::Label::PHI:
    case TestFunction::Label::G:
    case TestFunction::Label::V:
      // Support is bounded away from 0.
      return quad::integrate(g, std::max(f.support_lo, 1e-6), f.support_hi,
                             abs_tol).value;
    case TestFunction::Label::GAUSS: {
      if (s.real() <= 0)
        throw std::invalid_argument("mellin: Re(s) > 0 required for GAUSS");
      // Close the endpoint at 0 with the entire-series expansion of
      // exp(-pi v^2) on [0, 1/2]; quadrature above.
      const double d = 0.5;
      cplx head = 0.0;
      double cj = 1.0;  // (-pi)^j / j!
      for (int j = 0; j <= 40; ++j) {
        head += cj * std::exp((s + 2.0 * j) * std::log(d)) / (s + 2.0 * j);
        cj *= -kPi / (j + 1);
      }
      return head + quad::integrate(g, d, 12.0, abs_tol).value;
    }
    default:
      throw std::invalid_argument("mellin: unsupported decay profile");
  }
}

cplx fourier(const TestFunction& f, double y) {
  if (f.label == TestFunction::Label::F) return fejer_hat(f, y);
  return fourier_finite(f, y, f.support_lo, f.support_hi);
}

CheckTransform check_transform(const TestFunction& f, double y) {
  CheckTransform out;
  // Direct route: integral (cos + sin)(2 pi x y) f(x) dx.
  if (f.label == TestFunction::Label::F) {
    // Even f: the sin part vanishes; cos part is the Fejer transform.
    out.direct = fejer_hat(f, y);
  } else {
    auto g = [&](double x) -> cplx {
      double ang = 2 * kPi * x * y;
      return f.eval(x) * (std::cos(ang) + std::sin(ang));
    };
    out.direct = quad::integrate(g, f.support_lo, f.support_hi, 1e-13).value;
  }
  out.discrepancy = 0.0;
  if (f.even && y != 0.0) {
    // check F(y) = (2 / 2 pi i) int_(1/2) tilde F(1-s) Gamma(s) cos(pi s / 2)
    //              (2 pi |y|)^{-s} ds.
    const double sigma = 0.5;
    const double h = 0.05, T = 60.0;
    const double ln2piy = std::log(2 * kPi * std::abs(y));
    cplx sum = 0.0;
    const int J = int(T / h);
    for (int j = -J; j <= J; ++j) {
      double t = j * h;
      cplx s(sigma, t);
      cplx term = mellin(f, 1.0 - s, 1e-13) *
                  std::exp(special::log_gamma(s)) * std::cos(kPi * s / 2.0) *
                  std::exp(-s * ln2piy);
      sum += (j == -J || j == J) ? 0.5 * term : term;
    }
    out.mellin_route = 2.0 * sum * h / (2 * kPi);
    out.discrepancy = std::abs(out.direct - *out.mellin_route);
  }
  return out;
}

double fejer_line_sum(const TestFunction& f, double Z) {
  if (f.label != TestFunction::Label::F)
    throw std::invalid_argument("fejer_line_sum: Fejer window expected");
  const double A = f.fejer_A, a = f.fejer_a;
  const long long T = 1 << 21;
  double s = f.eval(0.0);
  double partial = 0.0;
  for (long long d = T; d >= 1; --d) partial += f.eval(double(d) / Z);
  s += 2.0 * partial;
  // Tail: sum_{d>T} F(d/Z) = A Z^2/(2 pi^2 a^2) [ sum 1/d^2 - sum cos(c d)/d^2 ],
  // c = 2 pi a / Z. Midpoint Euler-Maclaurin closes both pieces.
  const double c = 2 * kPi * a / Z;
  const double Tm = double(T) + 0.5;
  double tail_sq = 1.0 / Tm - 1.0 / (12.0 * Tm * Tm * Tm);  // sum_{d>T} d^{-2}
  double tail_cos = quad::tail_cos_over_x2(c, Tm) +
                    (1.0 / 24.0) * (-c * std::sin(c * Tm) / (Tm * Tm) -
                                    2.0 * std::cos(c * Tm) / (Tm * Tm * Tm));
  s += 2.0 * A * Z * Z / (2 * kPi * kPi * a * a) * (tail_sq - tail_cos);
  return s;
}

}  // namespace qdlab::smooth
