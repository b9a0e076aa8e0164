#include "qdlab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdlab::quad {

namespace {

struct SimpsonState {
  const std::function<cplx(double)>* f;
  double abs_tol;
  int max_depth;
  double err_accum;
};

cplx simpson_rec(SimpsonState& st, double a, double m, double b, cplx fa,
                 cplx fm, cplx fb, cplx whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const cplx flm = (*st.f)(lm), frm = (*st.f)(rm);
  const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const cplx delta = left + right - whole;
  if (depth >= st.max_depth || std::abs(delta) <= 15.0 * tol) {
    st.err_accum += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return simpson_rec(st, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_rec(st, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

Result integrate(const std::function<cplx(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
  if (!(a < b)) return {cplx(0.0), 0.0};
  SimpsonState st{&f, abs_tol, max_depth, 0.0};
  // Seed with a few panels so narrow features are not missed.
  const int panels = 8;
  cplx total = 0.0;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
    const cplx f0 = f(x0), fm = f(xm), f1 = f(x1);
    const cplx whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += simpson_rec(st, x0, xm, x1, f0, fm, f1, whole,
                         abs_tol / panels, 0);
  }
  return {total, st.err_accum};
}

GaussLegendre::GaussLegendre(int n) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev estimate.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p0, p1;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

double tail_cos_over_x2(double c, double T) {
  if (c <= 0 || c * T < 30.0)
    throw std::invalid_argument("tail_cos_over_x2: need c*T >= 30");
  // int_T^inf cos(cx)/x^2 dx = cos(cT)/T - c*(pi/2 - Si(cT)), with
  // pi/2 - Si(z) = cos(z)/z * P(1/z^2) + sin(z)/z^2 * Q(1/z^2).
  const double z = c * T, z2 = z * z;
  double P = 1.0, t = 1.0;
  // P = 1 - 2!/z^2 + 4!/z^4 - 6!/z^6 + ...
  const double f2[] = {2, 24, 720, 40320, 3628800};
  const double f3[] = {6, 120, 5040, 362880, 39916800};
  double sgn = -1.0;
  double zp = z2;
  for (int k = 0; k < 5; ++k) {
    P += sgn * f2[k] / zp;
    zp *= z2;
    sgn = -sgn;
  }
  // Q = 1 - 3!/z^2 + 5!/z^4 - ...
  double Q = 1.0;
  sgn = -1.0;
  zp = z2;
  for (int k = 0; k < 5; ++k) {
    Q += sgn * f3[k] / zp;
    zp *= z2;
    sgn = -sgn;
  }
  (void)t;
  const double half_pi_minus_si = std::cos(z) / z * P + std::sin(z) / z2 * Q;
  return std::cos(z) / T - c * half_pi_minus_si;
}

}  // namespace qdlab::quad
