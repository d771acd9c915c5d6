#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/core.hpp"
#include "phasekit/fourier.hpp"

using namespace pk;

TEST_CASE("grid alignment") {
  GridSpec g(64, 8.0, 0.7, 1);
  CHECK(g.dx() == doctest::Approx(0.25));
  CHECK(g.x(0) == -8.0);
  CHECK(g.x(g.n / 2) == 0.0);
  // full dual grid: dx * dxi * n = 2 pi hbar (involution alignment)
  CHECK(g.dx() * g.dual_dxi() * g.n == doctest::Approx(2 * PI * g.hbar));
  // half dual grid: dx * dXi * n = pi hbar (the hbar/2 alignment)
  CHECK(g.dx() * g.half_dual_dxi() * g.n == doctest::Approx(PI * g.hbar));
  CHECK(g.xi(g.n / 2) == 0.0);
  CHECK(g.truncation_ok());
  CHECK_FALSE(GridSpec(64, 2.0, 1.0, 1).truncation_ok());
  CHECK_THROWS(GridSpec(63, 8.0, 1.0, 1));
  CHECK_THROWS(GridSpec(64, 8.0, 1.0, 3));
}

TEST_CASE("plus/minus rotation") {
  auto r = rotate_pm(std::array<double, 2>{3.0, 1.0});
  CHECK(r[0] == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(r[1] == doctest::Approx(std::sqrt(2.0)));
  auto back = rotate_pm(r, RotDir::inverse);
  CHECK(back[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(back[1] == doctest::Approx(1.0).epsilon(1e-15));
  // norm preservation
  CHECK(r[0] * r[0] + r[1] * r[1] == doctest::Approx(10.0));
  auto c = rotate_pm(std::vector<cplx>{cplx(1, 2), cplx(3, -1)});
  CHECK(std::abs(c[0] - cplx(4, 1) * std::sqrt(0.5)) < 1e-15);
}

TEST_CASE("quadrature") {
  GridSpec g(256, 10.0, 1.0, 1);
  std::vector<cplx> f(g.n);
  for (int k = 0; k < g.n; ++k) f[k] = std::exp(-g.x(k) * g.x(k));
  CHECK(std::abs(integrate(f, g.dx()) - std::sqrt(PI)) < 1e-12);
}

TEST_CASE("kahan summation") {
  Ksum s;
  for (int k = 0; k < 1000000; ++k) s.add(cplx(0.1, -0.1));
  CHECK(std::abs(s.get() - cplx(100000.0, -100000.0)) < 1e-9);
}

TEST_CASE("symplectic fourier involution and oracles") {
  GridSpec g(64, 8.0, 1.0, 1);
  Field2D f(position_axis(g), dual_axis(g));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      double x = f.ax0.at(i), xi = f.ax1.at(j);
      f.at(i, j) = std::exp(-(x * x + xi * xi) / 2.0) * (1.0 + 0.5 * x - cplx(0, 0.25) * xi);
    }
  Field2D ff = symplectic_fourier(symplectic_fourier(f, g.hbar), g.hbar);
  double err = 0;
  for (size_t k = 0; k < f.v.size(); ++k) err = std::max(err, std::abs(ff.v[k] - f.v[k]));
  CHECK(err / f.max_abs() < 1e-10);

  // e^{-r^2/2 hbar} is a fixed point
  Field2D sd(position_axis(g), dual_axis(g));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      double r2 = std::pow(sd.ax0.at(i), 2) + std::pow(sd.ax1.at(j), 2);
      sd.at(i, j) = std::exp(-r2 / (2.0 * g.hbar));
    }
  Field2D tsd = symplectic_fourier(sd, g.hbar);
  double e1 = 0;
  for (size_t k = 0; k < sd.v.size(); ++k) e1 = std::max(e1, std::abs(tsd.v[k] - sd.v[k]));
  CHECK(e1 < 1e-10);

  // e^{-r^2/hbar} -> (1/2) e^{-r^2/4 hbar} (needs the wide box: the image is broad)
  GridSpec gw(128, 12.0, 1.0, 1);
  Field2D nf(position_axis(gw), dual_axis(gw));
  for (int i = 0; i < gw.n; ++i)
    for (int j = 0; j < gw.n; ++j) {
      double r2 = std::pow(nf.ax0.at(i), 2) + std::pow(nf.ax1.at(j), 2);
      nf.at(i, j) = std::exp(-r2 / gw.hbar);
    }
  Field2D tn = symplectic_fourier(nf, gw.hbar);
  double e2 = 0;
  for (int i = 0; i < gw.n; ++i)
    for (int j = 0; j < gw.n; ++j) {
      double r2 = std::pow(nf.ax0.at(i), 2) + std::pow(nf.ax1.at(j), 2);
      e2 = std::max(e2, std::abs(tn.at(i, j) - 0.5 * std::exp(-r2 / 4.0)));
    }
  CHECK(e2 < 1e-10);
}

TEST_CASE("symplectic fourier serial matches parallel") {
  GridSpec g(64, 8.0, 0.5, 1);
  Field2D f(position_axis(g), dual_axis(g));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      double x = f.ax0.at(i), xi = f.ax1.at(j);
      f.at(i, j) = std::exp(-(x * x + xi * xi)) * cplx(x, xi);
    }
  Field2D a = symplectic_fourier_serial(f, g.hbar);
  Field2D b = symplectic_fourier(f, g.hbar);
  double d = 0;
  for (size_t k = 0; k < a.v.size(); ++k) d = std::max(d, std::abs(a.v[k] - b.v[k]));
  CHECK(d < 1e-13);
}

TEST_CASE("symplectic fourier linearity") {
  GridSpec g(32, 6.0, 1.0, 1);
  Field2D f(position_axis(g), dual_axis(g)), h(position_axis(g), dual_axis(g));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      double x = f.ax0.at(i), xi = f.ax1.at(j);
      f.at(i, j) = std::exp(-(x * x + xi * xi) / 2.0);
      h.at(i, j) = x * std::exp(-(x * x + xi * xi));
    }
  Field2D sum(position_axis(g), dual_axis(g));
  for (size_t k = 0; k < f.v.size(); ++k) sum.v[k] = 2.0 * f.v[k] + cplx(0, 3) * h.v[k];
  Field2D t = symplectic_fourier(sum, g.hbar);
  Field2D tf = symplectic_fourier(f, g.hbar), th = symplectic_fourier(h, g.hbar);
  double d = 0;
  for (size_t k = 0; k < t.v.size(); ++k)
    d = std::max(d, std::abs(t.v[k] - 2.0 * tf.v[k] - cplx(0, 3) * th.v[k]));
  CHECK(d < 1e-12);
}
