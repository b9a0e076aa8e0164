#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qdlab/smooth.hpp"

// Central values of L(s, chi_8d): shifted approximate-functional-equation
// evaluation backed by tabulated smoothing weights, an independent
// Hurwitz-zeta oracle for L(s, chi_m), and the smoothed Dirichlet
// polynomial functional-equation check.

namespace qdlab::lfun {

using cplx = std::complex<double>;

struct AfeConfig {
  double contour_abscissa = 1.5;   // main vertical line for the V integral
  double im_truncation = 60.0;     // |Im s| cut on the line
  double grid_per_decade = 384;    // geometric x-grid density
  double grid_x_min = 1e-4;
  double grid_x_max = 80.0;
  double tail_cutoff_multiplier = 3.0;  // sum length 3*sqrt(8d)*(2+log(2+8d))
};

// g_a(s) = pi^{-s/2} Gamma((1/2+a+s)/2) / Gamma((1/2+a)/2).
cplx g_alpha(cplx alpha, cplx s);

// Smoothing weight V_a(x) = (1/2 pi i) int_(c) g_a(s) x^{-s} ds / s by
// vertical-line quadrature; the contour is chosen per x so the integrand
// never dwarfs the value. err is a quadrature-truncation estimate.
struct VAlpha {
  cplx value;
  double err;
};
VAlpha v_alpha(cplx alpha, double x, const AfeConfig& cfg = {});

// Root factor X_a = (8d/pi)^{-a} Gamma((1/2-a)/2)/Gamma((1/2+a)/2) and the
// d-independent lambda(a) = X_a (8d)^a.
cplx root_factor(cplx alpha, long long d);
cplx lambda(cplx alpha);

// Tabulated V_a on a geometric grid with cubic interpolation.
class VTable {
 public:
  VTable(cplx alpha, const AfeConfig& cfg);
  cplx operator()(double x) const;   // interpolated; exact 1/0 off-grid ends
  cplx fresh(double x) const { return v_alpha(alpha_, x, cfg_).value; }
  cplx alpha() const { return alpha_; }

  void save(const std::string& path) const;
  static VTable load(const std::string& path);

 private:
  VTable() = default;
  cplx alpha_;
  AfeConfig cfg_;
  double log_x0_ = 0, step_ = 0;
  std::vector<cplx> values_;
};

struct LValue {
  cplx value;
  double tail_estimate;
};

// L(1/2 + a, chi_8d) via the shifted approximate functional equation,
// d odd squarefree. The two-table overload reuses precomputed weights.
LValue l_afe(cplx alpha, long long d, const VTable& vplus, const VTable& vminus,
             const AfeConfig& cfg = {});
LValue l_afe(cplx alpha, long long d, const AfeConfig& cfg = {});

// Independent oracle: L(s, chi_m) = |m|^{-s} sum_a chi_m(a) zeta(s, a/|m|),
// m fundamental, |m| <= 10^4.
cplx l_hurwitz(cplx s, long long m);

// Completed function Lambda(s, chi_m) = (|m|/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi_m).
cplx completed_lambda(cplx s, long long m);

// Ggrave_z(x) = (1/2 pi i) int_(sigma) [Gamma(1/4-(z-s-a)/2)/Gamma(1/4+(z-s+a)/2)]
//               x^{-s} tilde G(-s) ds, the dual-side weight of the smoothed
// functional equation. Evaluated by vertical-line quadrature against a cached
// tilde G line table; for large x an equivalent trig-kernel form of the same
// integral is used (the fixed-precision line sum loses accuracy once the
// Gamma ratio amplifies the table's noise floor).
class GgraveEval {
 public:
  GgraveEval(cplx z, int a_parity);
  cplx operator()(double x) const;
  cplx line(double x) const;
  cplx kernel(double x) const;
  double weight_sum() const { return csum_; }

 private:
  static constexpr double kSigma = 2.0;
  cplx z_;
  int a_;
  double h_ = 0.25;
  std::vector<cplx> w_;  // trapezoid weights: Gamma ratio times tilde G
  double csum_ = 0.0;
};

// Both sides of the smoothed Dirichlet-polynomial functional equation:
// sum_n chi_m(n) n^{-1/2-z} G(n/N)
//   = (pi/|m|)^z sum_n chi_m(n) n^{-1/2+z} Ggrave_z(pi n N / |m|).
struct FePolyResult {
  cplx lhs;
  cplx rhs;
  double residual;
  double tail_estimate;
};
FePolyResult fe_poly_check(long long m, cplx z, double N);

}  // namespace qdlab::lfun
