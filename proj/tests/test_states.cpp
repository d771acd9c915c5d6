#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/rng.hpp"
#include "phasekit/states.hpp"

using namespace pk;

TEST_CASE("coherent state values and norm") {
  double h = 0.8;
  // peak modulus at x = q is (pi hbar)^{-1/4}
  CHECK(std::abs(coherent_value(cplx(1.2, -0.7), 1.2, h)) ==
        doctest::Approx(std::pow(PI * h, -0.25)));
  GridSpec g(128, 10.0, h, 1);
  Wavefunction w = coherent_state(PhasePoint(cplx(0.9, 1.4)), g);
  CHECK(std::abs(inner(w, w) - 1.0) < 1e-12);
  CHECK(w.coherentZ.size() == 1);

  bool trunc = false;
  coherent_state(PhasePoint(cplx(9.5, 0.0)), g, &trunc);
  CHECK(trunc);
  coherent_state(PhasePoint(cplx(0.5, 0.0)), g, &trunc);
  CHECK_FALSE(trunc);
}

TEST_CASE("overlap oracle") {
  double h = 1.0;
  // |<phi_a|phi_b>| = e^{-|za-zb|^2/4h}: distance 2 gives e^{-1}
  cplx ov = overlap_closed_form(PhasePoint(cplx(0, 0)), PhasePoint(cplx(2, 0)), h);
  CHECK(std::abs(ov) == doctest::Approx(std::exp(-1.0)));
  CHECK(std::abs(overlap_closed_form(PhasePoint(cplx(0.3, -1)), PhasePoint(cplx(0.3, -1)), h) -
                 1.0) < 1e-15);

  // closed form vs grid quadrature, N = 2
  GridSpec g(64, 8.0, 0.6, 2);
  Rng rng(7);
  for (int k = 0; k < 25; ++k) {
    PhasePoint Za = rng.phase_point(2, 1.5, 1.5), Zb = rng.phase_point(2, 1.5, 1.5);
    Wavefunction a = coherent_state(Za, g), b = coherent_state(Zb, g);
    CHECK(std::abs(inner(a, b) - overlap_closed_form(Za, Zb, g.hbar)) < 1e-10);
  }
}

TEST_CASE("exchange maps are involutions and commute") {
  GridSpec g(32, 8.0, 1.0, 2);
  DensityMatrix rho;
  rho.grid = g;
  Wavefunction k1 = coherent_state(PhasePoint(cplx(0.4, 0.1), cplx(-0.3, 0.6)), g);
  Wavefunction b1 = coherent_state(PhasePoint(cplx(-0.1, 0.2), cplx(0.5, -0.4)), g);
  rho.terms.push_back({cplx(0.7, 0.1), k1, b1});

  DensityMatrix uu = exchange_U(exchange_U(rho));
  DensityMatrix vv = exchange_V(exchange_V(rho));
  DensityMatrix uv = exchange_U(exchange_V(rho));
  DensityMatrix vu = exchange_V(exchange_U(rho));
  for (size_t i = 0; i < rho.terms[0].ket.v.size(); ++i) {
    CHECK(uu.terms[0].bra.v[i] == rho.terms[0].bra.v[i]);
    CHECK(vv.terms[0].ket.v[i] == rho.terms[0].ket.v[i]);
    CHECK(uv.terms[0].ket.v[i] == vu.terms[0].ket.v[i]);
    CHECK(uv.terms[0].bra.v[i] == vu.terms[0].bra.v[i]);
  }
  // U acts on the bra slot only: kernel(x1,x2;y1,y2) -> kernel(x1,x2;y2,y1)
  DensityMatrix u = exchange_U(rho);
  CHECK(kernel_at(u, 3, 7, 11, 20) == kernel_at(rho, 3, 7, 20, 11));
  DensityMatrix v = exchange_V(rho);
  CHECK(kernel_at(v, 3, 7, 11, 20) == kernel_at(rho, 7, 3, 11, 20));
  // exchanged coherent labels follow the slot swap
  CHECK(u.terms[0].bra.coherentZ[0] == rho.terms[0].bra.coherentZ[1]);
}

TEST_CASE("traces") {
  GridSpec g(64, 8.0, 1.0, 2);
  PhasePoint Za(cplx(0.4, 0.3), cplx(-0.2, 0.5)), Zb(cplx(-0.5, 0.1), cplx(0.3, -0.3));
  DensityMatrix a = coherent_projector(Za, g), b = coherent_projector(Zb, g);
  CHECK(std::abs(trace(a) - 1.0) < 1e-12);
  CHECK(std::abs(trace_product(a, a) - 1.0) < 1e-12);
  // trace(P_a P_b) = |<phi_a|phi_b>|^2
  cplx ov = overlap_closed_form(Za, Zb, g.hbar);
  CHECK(std::abs(trace_product(a, b) - std::norm(ov)) < 1e-12);
}

TEST_CASE("state json round trip") {
  GridSpec g(64, 8.0, 0.9, 2);
  DensityMatrix rho;
  rho.grid = g;
  Wavefunction k1 = coherent_state(PhasePoint(cplx(0.4, 0.1), cplx(-0.3, 0.6)), g);
  rho.terms.push_back({cplx(1.0), k1, k1});
  std::string text = save_state_json(rho);
  DensityMatrix back = load_state_json(text);
  CHECK(back.grid.n == 64);
  CHECK(back.grid.hbar == doctest::Approx(0.9));
  CHECK(back.grid.particles == 2);
  REQUIRE(back.terms.size() == 1);
  CHECK(back.terms[0].ket.coherentZ == rho.terms[0].ket.coherentZ);
  CHECK(back.hermitian);
  CHECK(back.normalized);
  CHECK_THROWS(load_state_json("{\"hbar\":1.0}"));
  CHECK_THROWS(load_state_json("{\"hbar\":1.0,\"grid\":{\"n\":64,\"L\":8.0},\"terms\":[]}"));
}
