#pragma once

#include <complex>
#include <functional>
#include <optional>

// Test functions and their transforms:
//   PHI  - bump supported on [1,2] weighting the moment sum
//   G    - dyadic partition-of-unity piece supported on [3/4,2]
//   V    - G(2x)+G(x)+G(x/2), identically 1 on [3/4,2]
//   F    - band-limited Fejer window (Fourier transform is a triangle)
//   GAUSS- exp(-pi x^2) surrogate for Poisson-summation checks

namespace qdlab::smooth {

using cplx = std::complex<double>;

struct TestFunction {
  enum class Label { PHI, G, V, F, GAUSS };
  Label label;
  double support_lo;  // effective support; +-inf encoded by huge values
  double support_hi;
  bool even;
  std::function<double(double)> eval;
  // Fejer parameters, set when label == F:  F(x) = A * sinc(a x)^2.
  double fejer_A = 0.0;
  double fejer_a = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;

  double operator()(double x) const { return eval(x); }
};

TestFunction build_phi();
TestFunction build_g();
TestFunction build_v();
TestFunction build_gauss_surrogate();

struct FCertificate {
  double min_on_window;    // sampled min of F over [-c1, c1]
  double fhat0;            // hat F(0)
  double max_leak_rel;     // max |hat F(y)| / hat F(0) sampled outside band
  bool pass;
};

// Fejer-type window: smooth, even, nonnegative, >= 1 on [-c1, c1], with
// Fourier transform supported in [-c0/2, c0/2] (a triangle). Throws if
// the numerical certificate fails.
TestFunction build_f(double c0, double c1, FCertificate* cert = nullptr);

// Mellin transform integral_0^inf f(t) t^{s-1} dt by adaptive quadrature.
cplx mellin(const TestFunction& f, cplx s, double abs_tol = 1e-12);

// Fourier transform integral f(x) e(-xy) dx. For the Fejer window the
// slowly decaying tails are closed with cosine-integral asymptotics.
cplx fourier(const TestFunction& f, double y);

struct CheckTransform {
  cplx direct;                  // integral (cos(2 pi x y) + sin(2 pi x y)) f(x) dx
  std::optional<cplx> mellin_route;  // vertical-line formula, even f only
  double discrepancy;           // |direct - mellin_route| when both present
};

CheckTransform check_transform(const TestFunction& f, double y);

// Full-line sum of the Fejer window, sum_{d in Z} F(d/Z), with the
// quadratic tails closed analytically. Used by Poisson-summation checks.
double fejer_line_sum(const TestFunction& f, double Z);

}  // namespace qdlab::smooth
