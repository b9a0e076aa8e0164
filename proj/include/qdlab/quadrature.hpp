#pragma once

#include <complex>
#include <functional>
#include <vector>

// Quadrature kit: adaptive Simpson for smooth real-line integrands,
// fixed Gauss-Legendre rules for bulk evaluation, and asymptotic tails
// for cos(cx)/x^2 integrals (used to close slowly decaying transforms).

namespace qdlab::quad {

using cplx = std::complex<double>;

struct Result {
  cplx value;
  double err_estimate;
};

// Adaptive Simpson on [a, b] with absolute tolerance.
Result integrate(const std::function<cplx(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 48);

// Fixed Gauss-Legendre rule; nodes/weights on [-1, 1].
struct GaussLegendre {
  explicit GaussLegendre(int n);
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  auto apply(F&& f, double a, double b) const {
    using R = decltype(f(0.0));
    R s{};
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (size_t i = 0; i < nodes.size(); ++i)
      s += weights[i] * f(mid + half * nodes[i]);
    return s * half;
  }
};

// integral_T^infty cos(c x)/x^2 dx, c > 0, cT >= 30: asymptotic form of
// the cosine-integral remainder, abs error < 1e-13.
double tail_cos_over_x2(double c, double T);

// integral_T^infty 1/x^2 dx = 1/T (paired with the above for (1-cos)/x^2).
inline double tail_one_over_x2(double T) { return 1.0 / T; }

}  // namespace qdlab::quad
