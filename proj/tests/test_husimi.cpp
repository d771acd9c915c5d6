#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/corpus.hpp"
#include "phasekit/husimi.hpp"

using namespace pk;

TEST_CASE("husimi of a coherent projector is a gaussian bump") {
  GridSpec g(64, 8.0, 0.8, 2);
  PhasePoint Z0(cplx(0.5, -0.2), cplx(-0.3, 0.4));
  DensityMatrix rho = coherent_projector(Z0, g);
  const double tph = 2.0 * PI * g.hbar;
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    PhasePoint Z = rng.phase_point(2, 1.5, 1.5);
    double d2 = std::norm(Z.z[0] - Z0.z[0]) + std::norm(Z.z[1] - Z0.z[1]);
    double ref = std::exp(-d2 / (2.0 * g.hbar)) / (tph * tph);
    cplx got = husimi(rho, Z);
    CHECK(std::abs(got - ref) < 1e-10 * ref + 1e-16);
    CHECK(got.real() >= 0.0);
  }
}

TEST_CASE("two-point continuation is consistent on the diagonal") {
  GridSpec g(64, 8.0, 1.0, 2);
  auto states = corpus_states(g);
  Rng rng(3);
  for (auto& st : states) {
    for (int k = 0; k < 10; ++k) {
      PhasePoint Z = rng.phase_point(2, 1.2, 1.2);
      cplx a = husimi(st.rho, Z), b = husimi_two_point(st.rho, Z, Z);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(std::abs(a), 1e-12));
    }
  }
}

TEST_CASE("two-point continuation is holomorphic in the ket argument") {
  // The vacuum-normalized ratio must satisfy Cauchy-Riemann in za1:
  // central differences of d/d(conj za1) stay at discretization-error level.
  GridSpec g(64, 8.0, 1.0, 2);
  auto states = corpus_states(g);
  const DensityMatrix& rho = states[1].rho;
  PhasePoint Zb(cplx(0.2, -0.4), cplx(-0.1, 0.3));
  // The weight e^{+|Za|^2/4h} cancels the |z|^2 Bargmann decay of
  // <phi_Zb|rho|phi_Za>; the remaining anti-holomorphic content is the pure
  // Gaussian e^{-conj(za)^2/8h}, so dividing it out must leave an entire function.
  auto R = [&](cplx za1) {
    PhasePoint Za(za1, cplx(0.5, 0.1));
    cplx zb1 = std::conj(za1);
    return std::exp(zb1 * zb1 / (8.0 * g.hbar)) * husimi_two_point(rho, Za, Zb);
  };
  const double e = 1e-4;
  cplx z0(0.3, 0.2);
  cplx dx = (R(z0 + e) - R(z0 - e)) / (2.0 * e);
  cplx dy = (R(z0 + cplx(0, e)) - R(z0 - cplx(0, e))) / (2.0 * e);
  // d/d(conj z) = (dx + i dy)/2 should vanish for a holomorphic function
  cplx cr = 0.5 * (dx + cplx(0, 1) * dy);
  CHECK(std::abs(cr) / std::max(std::abs(dx), 1e-12) < 1e-6);
}

TEST_CASE("box integral: serial equals parallel, integral equals one") {
  GridSpec g(64, 12.0, 1.0, 2);
  auto states = corpus_states(g);
  const DensityMatrix& rho = states[2].rho;  // rank3-mixture
  double a = husimi_box_integral(rho, 12, 6.0, 6.0);
  double b = husimi_box_integral_serial(rho, 12, 6.0, 6.0);
  CHECK(std::abs(a - b) < 1e-12);
  double full = husimi_box_integral(rho, 32, 6.0, 6.0);
  CHECK(std::abs(full - 1.0) < 1e-5);
}

TEST_CASE("exchange lemma and composition") {
  GridSpec g(64, 8.0, 1.0, 2);
  auto states = corpus_states(g);
  auto samples = sample_box(g, 30, 42);
  for (auto& st : states) {
    CHECK(verify_husimi_exchange(st.rho, Which::U, samples, 42, 1e-6).pass);
    CHECK(verify_husimi_exchange(st.rho, Which::V, samples, 42, 1e-6).pass);
    CHECK(verify_husimi_composition(st.rho, samples, 42, 1e-6).pass);
  }
}

TEST_CASE("bosonic corollaries distinguish statistics") {
  GridSpec g(64, 8.0, 1.0, 2);
  auto states = corpus_states(g);
  auto samples = sample_box(g, 30, 99);
  for (auto& st : states) {
    if (st.bosonic) {
      CHECK(bosonic_check_husimi(st.rho, samples, 99, 1e-6).pass);
      CHECK(bosonic_factorization_check(st.rho, samples, 99, 1e-6).pass);
    }
    if (st.fermionic) {
      Report b = bosonic_check_husimi(st.rho, samples, 99, 1e-6);
      CHECK_FALSE(b.pass);
      CHECK(b.max_rel_err > 0.5);  // sign flip, not a tolerance problem
      Report f = bosonic_factorization_check(st.rho, samples, 99, 1e-6);
      CHECK_FALSE(f.pass);
      CHECK(f.max_rel_err > 0.5);
    }
  }
}
