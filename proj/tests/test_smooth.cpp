#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qdlab/quadrature.hpp"
#include "qdlab/smooth.hpp"

using namespace qdlab;
using smooth::cplx;

TEST_CASE("phi bump") {
  auto phi = smooth::build_phi();
  CHECK(phi(1.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(phi(0.5) == 0.0);
  CHECK(phi(2.0) == 0.0);
  auto integral = quad::integrate([&](double x) { return cplx(phi(x)); }, 1.0,
                                  2.0, 1e-13);
  CHECK(integral.value.real() > 0.1);
  // Two-resolution agreement.
  auto coarse = quad::integrate([&](double x) { return cplx(phi(x)); }, 1.0, 2.0,
                                1e-8);
  CHECK(std::abs(integral.value - coarse.value) < 1e-7);
}

TEST_CASE("G dyadic partition of unity") {
  auto g = smooth::build_g();
  CHECK(g(0.5) == 0.0);
  CHECK(g(2.0) == 0.0);
  CHECK(g(0.75) == 0.0);
  for (int J : {0, 3, 5, 6}) {
    double hi = 3.0 * std::pow(2.0, J - 1);
    for (int i = 0; i <= 1000; ++i) {
      double x = 1.0 + (hi - 1.0) * i / 1000.0;
      double s = 0.0;
      for (int j = 0; j <= J; ++j) s += g(x / std::pow(2.0, j));
      CHECK(std::abs(s - 1.0) < 1e-12);
    }
  }
  double s7 = 0.0;
  for (int j = 0; j <= 5; ++j) s7 += g(7.0 / std::pow(2.0, j));
  CHECK(std::abs(s7 - 1.0) < 1e-12);
  double s1 = 0.0;
  for (int j = 0; j <= 5; ++j) s1 += g(1.0 / std::pow(2.0, j));
  CHECK(std::abs(s1 - 1.0) < 1e-12);
}

TEST_CASE("V equals one on [3/4, 2]") {
  auto v = smooth::build_v();
  for (int i = 0; i <= 1000; ++i) {
    double x = 0.75 + (2.0 - 0.75) * i / 1000.0;
    CHECK(std::abs(v(x) - 1.0) < 1e-12);
  }
  CHECK(v(0.3) == 0.0);
  CHECK(v(4.5) == 0.0);
}

TEST_CASE("F window certificate at (1/64, 4)") {
  smooth::FCertificate cert;
  auto f = smooth::build_f(1.0 / 64, 4.0, &cert);
  CHECK(cert.pass);
  CHECK(cert.min_on_window >= 1.0);
  CHECK(cert.max_leak_rel <= 1e-8);
  CHECK(f(0.0) >= 1.0);
  // Evenness at random points.
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    double x = (double(rng() % 1000000) / 1000000.0 - 0.5) * 400.0;
    CHECK(f(x) == doctest::Approx(f(-x)).epsilon(1e-14));
  }
  // hat F(0) equals 2A/c0 analytically.
  CHECK(cert.fhat0 ==
        doctest::Approx(2.0 * f.fejer_A / f.c0).epsilon(1e-10));
  // hat F at 2*c0 is numerically zero relative to hat F(0).
  CHECK(std::abs(smooth::fourier(f, 2.0 / 64).real()) <= 1e-8 * cert.fhat0);
}

TEST_CASE("mellin transform basics") {
  auto g = smooth::build_g();
  auto phi = smooth::build_phi();
  // tilde G(0) = int G(t)/t dt > 0, two resolutions agree.
  cplx g0a = smooth::mellin(g, cplx(0.0), 1e-12);
  cplx g0b = smooth::mellin(g, cplx(0.0), 1e-9);
  CHECK(g0a.real() > 0.0);
  CHECK(std::abs(g0a - g0b) < 1e-8);
  // mellin(Phi, 1) = integral of Phi.
  cplx p1 = smooth::mellin(phi, cplx(1.0));
  auto direct = quad::integrate([&](double x) { return cplx(phi(x)); }, 1.0, 2.0,
                                1e-13);
  CHECK(std::abs(p1 - direct.value) < 1e-11);
  // Decay of |tilde G| along a vertical line.
  double m10 = std::abs(smooth::mellin(g, cplx(0.5, 10.0)));
  double m20 = std::abs(smooth::mellin(g, cplx(0.5, 20.0)));
  double m40 = std::abs(smooth::mellin(g, cplx(0.5, 40.0)));
  CHECK(m20 < m10);
  CHECK(m40 < m20);
}

TEST_CASE("check transform: two routes and the hat/check relation") {
  auto gs = smooth::build_gauss_surrogate();
  // Gaussian is self-dual: check F(y) = exp(-pi y^2) for even input.
  auto ct = smooth::check_transform(gs, 0.003);
  CHECK(ct.mellin_route.has_value());
  CHECK(ct.discrepancy <= 1e-8);
  CHECK(std::abs(ct.direct - cplx(std::exp(-std::acos(-1.0) * 9e-6))) < 1e-10);

  auto ct2 = smooth::check_transform(gs, 0.25);
  CHECK(ct2.discrepancy <= 1e-8);

  // check F(y) = (1+i)/2 hat F(y) + (1-i)/2 hat F(-y) at y = 0.01 (PHI is not even).
  auto phi = smooth::build_phi();
  auto c = smooth::check_transform(phi, 0.01);
  cplx want = cplx(0.5, 0.5) * smooth::fourier(phi, 0.01) +
              cplx(0.5, -0.5) * smooth::fourier(phi, -0.01);
  CHECK(std::abs(c.direct - want) < 1e-10);

  // check F(0) = integral F = hat F(0).
  auto c0 = smooth::check_transform(phi, 0.0);
  CHECK(std::abs(c0.direct - smooth::fourier(phi, 0.0)) < 1e-11);
}

TEST_CASE("fejer line sum matches brute force at moderate Z") {
  smooth::FCertificate cert;
  auto f = smooth::build_f(1.0 / 64, 4.0, &cert);
  const double Z = 2.0, T = 4e7;
  double fast = smooth::fejer_line_sum(f, Z);
  double brute = f(0.0);
  for (long long d = (long long)T; d >= 1; --d) brute += 2.0 * f(double(d) / Z);
  // The truncated brute sum undershoots by at most the envelope tail
  // A Z^2/(pi^2 a^2 T) (and at least a fraction of it).
  double tail_cap = f.fejer_A * Z * Z /
                    (std::numbers::pi * std::numbers::pi * f.fejer_a * f.fejer_a * T);
  CHECK(fast - brute > 0.0);
  CHECK(fast - brute < 1.01 * tail_cap);
}
