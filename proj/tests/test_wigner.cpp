#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/corpus.hpp"
#include "phasekit/wigner.hpp"

using namespace pk;

TEST_CASE("wigner of a 1D coherent state matches the closed form") {
  GridSpec g(64, 8.0, 0.7, 1);
  cplx Z0(0.4, 0.3);
  DensityMatrix rho = coherent_projector(PhasePoint(Z0), g);
  WignerField W = wigner(rho);
  double h = g.hbar, maxerr = 0;
  for (int j = 0; j < g.n; ++j)
    for (int m = 0; m < g.n; ++m) {
      double x = g.x(j), xi = g.xi_half(m);
      double ref =
          std::exp(-(std::pow(x - Z0.real(), 2) + std::pow(xi - Z0.imag(), 2)) / h) / (PI * h);
      maxerr = std::max(maxerr, std::abs(W.at1(j, m) - ref));
    }
  CHECK(maxerr * PI * h < 1e-7);
  CHECK(std::abs(wigner_integral(W) - 1.0) < 1e-10);
  CHECK(wigner_max_imag_ratio(W) < 1e-12);
}

TEST_CASE("wigner integral equals trace for mixtures, N=1 and N=2") {
  GridSpec g1(64, 8.0, 1.0, 1);
  DensityMatrix rho1;
  rho1.grid = g1;
  Wavefunction a = coherent_state(PhasePoint(cplx(0.5, -0.2)), g1);
  Wavefunction b = coherent_state(PhasePoint(cplx(-0.4, 0.6)), g1);
  rho1.terms.push_back({cplx(0.6), a, a});
  rho1.terms.push_back({cplx(0.4, 0.1), a, b});  // non-Hermitian piece: complex trace
  WignerField W1 = wigner(rho1);
  CHECK(std::abs(wigner_integral(W1) - trace(rho1)) < 1e-10);

  GridSpec g2(32, 6.0, 1.0, 2);
  auto states = corpus_states(g2);
  WignerField W2 = wigner(states[2].rho);
  CHECK(std::abs(wigner_integral(W2) - trace(states[2].rho)) < 1e-8);
  CHECK(wigner_max_imag_ratio(W2) < 1e-10);
}

TEST_CASE("cross wigner quadrature matches the closed form") {
  GridSpec g(64, 8.0, 0.9, 1);
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    cplx zk(rng.uniform(-1, 1), rng.uniform(-1, 1)), zb(rng.uniform(-1, 1), rng.uniform(-1, 1));
    double x = rng.uniform(-2, 2), xi = rng.uniform(-2, 2);
    cplx q = cross_wigner_point(zk, zb, x, xi, g);
    cplx c = cross_wigner_closed(zk, zb, x, xi, g.hbar);
    CHECK(std::abs(q - c) < 1e-8 / (PI * g.hbar));
  }
}

TEST_CASE("trace product equals the phase-space pairing") {
  // trace(rho rho') = (2 pi hbar) Int W W' for N = 1
  GridSpec g(64, 8.0, 1.0, 1);
  PhasePoint Za(cplx(0.4, 0.2)), Zb(cplx(-0.3, 0.5));
  DensityMatrix ra = coherent_projector(Za, g), rb = coherent_projector(Zb, g);
  WignerField Wa = wigner(ra), Wb = wigner(rb);
  Ksum s;
  for (size_t k = 0; k < Wa.v.size(); ++k) s.add(Wa.v[k] * Wb.v[k]);
  cplx pair = s.get() * g.dx() * g.half_dual_dxi() * (2.0 * PI * g.hbar);
  CHECK(std::abs(pair - trace_product(ra, rb)) < 1e-8);
}

TEST_CASE("minus block: serial equals parallel") {
  GridSpec g(64, 8.0, 1.0, 2);
  auto states = corpus_states(g);
  Field2D a = minus_block_field(states[1].rho, 0.1, -0.2, ExchangeKind::U, false);
  Field2D b = minus_block_field(states[1].rho, 0.1, -0.2, ExchangeKind::U, true);
  double d = 0;
  for (size_t k = 0; k < a.v.size(); ++k) d = std::max(d, std::abs(a.v[k] - b.v[k]));
  CHECK(d < 1e-13);
}

TEST_CASE("exchange lemma and composition on coherent corpus states") {
  GridSpec g(64, 8.0, 1.0, 2);
  for (auto& st : corpus_states(g)) {
    if (!st.coherent_terms) continue;
    CHECK(verify_wigner_exchange(st.rho, true, 17, 1e-5).pass);
    CHECK(verify_wigner_exchange(st.rho, false, 17, 1e-5).pass);
    CHECK(verify_wigner_composition(st.rho, 20, 17, 1e-10).pass);
  }
}

TEST_CASE("wminus quadrature against a gaussian closed form") {
  // F(u,v) = e^{-(u^2+v^2)/2h} gives
  // Wm(a,b;x,xi) = e^{-(a^2+b^2)/h} (pi/4h) e^{-(x^2+xi^2)/16h}.
  const double h = 1.0;
  MinusEvaluator F = [h](double u, double v) -> cplx {
    return std::exp(-(u * u + v * v) / (2.0 * h));
  };
  Rng rng(23);
  for (int k = 0; k < 8; ++k) {
    double a = rng.uniform(-0.6, 0.6), b = rng.uniform(-0.6, 0.6);
    double x = rng.uniform(-2, 2), xi = rng.uniform(-2, 2);
    cplx got = wminus_point(F, a, b, x, xi, h);
    double ref = std::exp(-(a * a + b * b) / h) * (PI / (4.0 * h)) *
                 std::exp(-(x * x + xi * xi) / (16.0 * h));
    CHECK(std::abs(got - ref) / ref < 1e-6);
  }
  // zero field -> zero
  MinusEvaluator Z = [](double, double) -> cplx { return 0.0; };
  CHECK(std::abs(wminus_point(Z, 0.1, 0.2, 0.3, 0.4, h)) == 0.0);
}

TEST_CASE("wminus identity on the corpus") {
  GridSpec g(64, 8.0, 1.0, 2);
  auto states = corpus_states(g);
  Report r = verify_wminus_exchange(states[1].rho, 10, 31, 1e-4);
  CHECK(r.pass);
}
