// Acceptance harness: one pass/fail line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "phasekit/corpus.hpp"
#include "phasekit/fourier.hpp"
#include "phasekit/husimi.hpp"
#include "phasekit/statistics.hpp"
#include "phasekit/symplectic.hpp"
#include "phasekit/toeplitz.hpp"
#include "phasekit/wigner.hpp"

using namespace pk;

namespace {

int failures = 0;

void line(int id, const char* what, bool ok, double worst, double tol) {
  if (!ok) ++failures;
  std::printf("%s criterion-%d: %-58s worst=%.3e tol=%.3e\n", ok ? "PASS" : "FAIL", id, what,
              worst, tol);
}

double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

int main() {
  const uint64_t seed = 20260823ULL;
  GridSpec g(64, 8.0, 1.0, 2);
  auto states = corpus_states(g);
  auto symbols = corpus_symbols(g.hbar);
  auto samples100 = sample_box(g, 100, seed);

  // 1. Husimi exchange lemma, both forms, every corpus state, 100 samples, <= 10 s/state.
  {
    double worst = 0, worst_t = 0;
    bool ok = true;
    for (auto& st : states) {
      double t0 = now_s();
      Report u = verify_husimi_exchange(st.rho, Which::U, samples100, seed, 1e-6);
      Report v = verify_husimi_exchange(st.rho, Which::V, samples100, seed, 1e-6);
      double dt = now_s() - t0;
      worst = std::max({worst, u.max_rel_err, v.max_rel_err});
      worst_t = std::max(worst_t, dt);
      ok = ok && u.pass && v.pass && dt <= 10.0;
    }
    std::printf("     (slowest state: %.2f s)\n", worst_t);
    line(1, "husimi exchange U+V, 100 samples, all corpus states", ok, worst, 1e-6);
  }

  // 2. Corollaries: bosonic states pass at 1e-6 (including the evenness test);
  //    fermionic states violate with an O(1) residual.
  {
    double worst = 0;
    bool ok = true;
    for (auto& st : states) {
      if (!st.bosonic && !st.fermionic) continue;
      Report b = bosonic_check_husimi(st.rho, samples100, seed, 1e-6);
      Report f = bosonic_factorization_check(st.rho, samples100, seed, 1e-6);
      if (st.bosonic) {
        ok = ok && b.pass && f.pass;
        worst = std::max({worst, b.max_rel_err, f.max_rel_err});
      } else {
        ok = ok && !b.pass && b.max_rel_err >= 0.5 && !f.pass && f.max_rel_err >= 0.5;
      }
    }
    line(2, "corollaries: bosonic pass, fermionic O(1) violation", ok, worst, 1e-6);
  }

  // 3. Wigner exchange on coherent corpus states + W-minus identity, <= 60 s total.
  {
    double t0 = now_s(), worst = 0;
    bool ok = true;
    for (auto& st : states) {
      if (!st.coherent_terms) continue;
      Report u = verify_wigner_exchange(st.rho, true, seed, 1e-5);
      Report v = verify_wigner_exchange(st.rho, false, seed, 1e-5);
      worst = std::max({worst, u.max_rel_err, v.max_rel_err});
      ok = ok && u.pass && v.pass;
    }
    Report wm = verify_wminus_exchange(states[1].rho, 20, seed, 1e-4);
    ok = ok && wm.pass && (now_s() - t0) <= 60.0;
    std::printf("     (wigner block: %.2f s, wminus err %.3e)\n", now_s() - t0, wm.max_rel_err);
    line(3, "wigner exchange 1e-5 + W-minus identity 1e-4", ok, worst, 1e-5);
  }

  // 4. Normalizations: Int husimi = 1 (1e-5), Int wigner = 1 (1e-6),
  //    trace Toeplitz rule (1e-6), husimi/Toeplitz coupling (1e-5).
  {
    bool ok = true;
    double worst = 0;
    GridSpec gw(64, 12.0, 1.0, 2);
    auto wide = corpus_states(gw);
    double hus = std::abs(husimi_box_integral(wide[2].rho, 32, 6.0, 6.0) - 1.0);
    ok = ok && hus <= 1e-5;
    worst = std::max(worst, hus);

    GridSpec g2(32, 6.0, 1.0, 2);
    auto small = corpus_states(g2);
    WignerField W = wigner(small[2].rho);
    double wig = std::abs(wigner_integral(W) - 1.0);
    ok = ok && wig <= 1e-6;
    worst = std::max(worst, wig);

    for (auto& cs : symbols) {
      Report t = verify_trace_rule(cs.h, 1e-6);
      ok = ok && t.pass;
      worst = std::max(worst, t.max_rel_err);
    }
    GaussianSymbol hp = corpus_symbol_n2(g.hbar);
    for (auto& st : states) {
      if (!st.coherent_terms) continue;
      Report c = coupling_check(st.rho, hp, 1e-5);
      ok = ok && c.pass;
      worst = std::max(worst, c.max_rel_err);
    }
    line(4, "normalizations: husimi, wigner, trace rule, coupling", ok, worst, 1e-5);
  }

  // 5. Toeplitz exchange at 50 kernel pairs per symbol (1e-5); UV reduces to the
  //    point-reflected symbol (1e-6).
  {
    bool ok = true;
    double worst = 0;
    for (auto& cs : symbols) {
      Report u = verify_toeplitz_exchange(cs.h, SymbolExchange::U, 50, seed, 1e-5);
      Report v = verify_toeplitz_exchange(cs.h, SymbolExchange::V, 50, seed, 1e-5);
      Report uv = verify_toeplitz_exchange(cs.h, SymbolExchange::UV, 50, seed, 1e-6);
      ok = ok && u.pass && v.pass && uv.pass;
      worst = std::max({worst, u.max_rel_err, v.max_rel_err, uv.max_rel_err});
    }
    line(5, "toeplitz exchange U/V 1e-5, UV point reflection 1e-6", ok, worst, 1e-5);
  }

  // 6. Off-diagonal lemma cross-check (1e-5), Bargmann identity (1e-10),
  //    U^2 = V^2 = identity bit-exact.
  {
    bool ok = true;
    double worst = 0;
    for (auto& cs : symbols) {
      Report o = verify_offdiag_lemma(cs.h, 50, seed, 1e-6);
      Report x = verify_diag_offdiag_crosscheck(cs.h, 50, seed, 1e-5);
      ok = ok && o.pass && x.pass;
      worst = std::max({worst, o.max_rel_err, x.max_rel_err});
    }
    Report b = verify_bargmann(g.hbar, 200, seed, 1e-10);
    ok = ok && b.pass;
    worst = std::max(worst, b.max_rel_err);

    const DensityMatrix& rho = states[1].rho;
    DensityMatrix uu = exchange_U(exchange_U(rho));
    DensityMatrix vv = exchange_V(exchange_V(rho));
    bool exact = true;
    for (size_t t = 0; t < rho.terms.size(); ++t) {
      exact = exact && std::memcmp(uu.terms[t].bra.v.data(), rho.terms[t].bra.v.data(),
                                   rho.terms[t].bra.v.size() * sizeof(cplx)) == 0;
      exact = exact && std::memcmp(vv.terms[t].ket.v.data(), rho.terms[t].ket.v.data(),
                                   rho.terms[t].ket.v.size() * sizeof(cplx)) == 0;
    }
    ok = ok && exact;
    line(6, "off-diagonal lemma, bargmann, U^2=V^2=1 bit-exact", ok, worst, 1e-5);
  }

  // 7. Symmetrizers: positivity floor, symmetry residuals <= 1e-12, trace sum rule 1e-8.
  {
    bool ok = true;
    double worst = 0;
    for (auto& cs : symbols) {
      Report r = verify_symmetrizers(cs.h, seed, 1e-9, 1e-12, 1e-8);
      ok = ok && r.pass;
      worst = std::max(worst, r.max_rel_err);
    }
    line(7, "symmetrizers positive, residuals 1e-12, trace rule 1e-8", ok, worst, 1e-8);
  }

  // 8. Matrix facts, exact arithmetic.
  {
    struct E {
      const char* l;
      SympClass c;
      long long d;
    };
    const E tab[] = {{"S_c_H", SympClass::anticanonical, -1},
                     {"S_c_W", SympClass::canonical, 1},
                     {"R_quarter", SympClass::canonical, 1},
                     {"S_doubled", SympClass::canonical, 1},
                     {"U_complex", SympClass::anticanonical, -1},
                     {"V_complex", SympClass::anticanonical, -1}};
    bool ok = true;
    for (auto& e : tab) {
      LinearPhaseMap S = builtin(e.l);
      ok = ok && classify(S) == e.c && det(S) == exc_int(e.d);
    }
    line(8, "matrix classification and determinants, exact", ok, ok ? 0.0 : 1.0, 0.0);
  }

  // 9. SF involution on Gaussian-enveloped fields (1e-8); quadrature vs closed-form
  //    Toeplitz kernel gate (1e-6).
  {
    GridSpec g1(64, 8.0, 1.0, 1);
    Field2D f(position_axis(g1), dual_axis(g1));
    for (int i = 0; i < g1.n; ++i)
      for (int j = 0; j < g1.n; ++j) {
        double x = f.ax0.at(i), xi = f.ax1.at(j);
        f.at(i, j) = std::exp(-(x * x + xi * xi) / 2.0) * (1.0 + 0.3 * x + cplx(0, 0.2) * x * xi);
      }
    Field2D ff = symplectic_fourier(symplectic_fourier(f, g1.hbar), g1.hbar);
    double err = 0;
    for (size_t k = 0; k < f.v.size(); ++k) err = std::max(err, std::abs(ff.v[k] - f.v[k]));
    err /= f.max_abs();
    bool ok = err <= 1e-8;
    double worst = err;
    for (auto& cs : symbols) {
      Report r = verify_quantize_gate(cs.h, 50, seed, 1e-6);
      ok = ok && r.pass;
      worst = std::max(worst, r.max_rel_err);
    }
    line(9, "SF involution 1e-8, quantization gate 1e-6", ok, worst, 1e-6);
  }

  std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "OK", failures);
  return failures ? 1 : 0;
}
