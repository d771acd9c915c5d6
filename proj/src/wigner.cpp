#include "phasekit/wigner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pk {

namespace {

// E[l+n/2][m] = e^{-i 2 pi l m / n} e^{i pi l}, the offset-DFT kernel on the
// half-step dual grid.
std::vector<cplx> offset_dft_matrix(int n) {
  std::vector<cplx> E((size_t)n * n);
  for (int li = 0; li < n; ++li) {
    int l = li - n / 2;
    for (int m = 0; m < n; ++m) {
      double ph = -2.0 * PI * l * m / n + PI * l;
      E[(size_t)li * n + m] = cplx(std::cos(ph), std::sin(ph));
    }
  }
  return E;
}

}  // namespace

WignerField wigner(const DensityMatrix& rho, bool parallel) {
  const GridSpec& g = rho.grid;
  const int n = g.n;
  const double scale1 = g.dx() / (PI * g.hbar);
  WignerField W;
  W.grid = g;
  auto E = offset_dft_matrix(n);

  if (g.particles == 1) {
    W.v.assign((size_t)n * n, cplx(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int j = 0; j < n; ++j) {
      int lmax = std::min(j, n - 1 - j);
      for (int m = 0; m < n; ++m) {
        Ksum s;
        for (int l = -lmax; l <= lmax; ++l) {
          cplx acc = 0;
          for (auto& t : rho.terms)
            acc += t.c * t.ket.v[j + l] * std::conj(t.bra.v[j - l]);
          s.add(acc * E[(size_t)(l + n / 2) * n + m]);
        }
        W.v[(size_t)j * n + m] = s.get() * scale1;
      }
    }
    return W;
  }

  require(n <= 32, "wigner: N = 2 full field limited to n <= 32 (memory)");
  W.v.assign((size_t)n * n * n * n, cplx(0));
  const double scale2 = scale1 * scale1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int jj = 0; jj < n * n; ++jj) {
    int j1 = jj / n, j2 = jj % n;
    int l1max = std::min(j1, n - 1 - j1), l2max = std::min(j2, n - 1 - j2);
    // f[l1][l2] = rho kernel at shifted points; then two offset-DFT stages.
    std::vector<cplx> f((size_t)n * n, cplx(0));
    for (int l1 = -l1max; l1 <= l1max; ++l1)
      for (int l2 = -l2max; l2 <= l2max; ++l2) {
        cplx acc = 0;
        for (auto& t : rho.terms)
          acc += t.c * t.ket.v[(size_t)(j1 + l1) * n + (j2 + l2)] *
                 std::conj(t.bra.v[(size_t)(j1 - l1) * n + (j2 - l2)]);
        f[(size_t)(l1 + n / 2) * n + (l2 + n / 2)] = acc;
      }
    std::vector<cplx> tmp((size_t)n * n, cplx(0));
    for (int li = 0; li < n; ++li)
      for (int m2 = 0; m2 < n; ++m2) {
        Ksum s;
        for (int l2 = 0; l2 < n; ++l2) s.add(f[(size_t)li * n + l2] * E[(size_t)l2 * n + m2]);
        tmp[(size_t)li * n + m2] = s.get();
      }
    for (int m1 = 0; m1 < n; ++m1)
      for (int m2 = 0; m2 < n; ++m2) {
        Ksum s;
        for (int li = 0; li < n; ++li) s.add(tmp[(size_t)li * n + m2] * E[(size_t)li * n + m1]);
        W.v[((((size_t)j1 * n + j2) * n + m1) * n + m2)] = s.get() * scale2;
      }
  }
  return W;
}

cplx wigner_integral(const WignerField& W) {
  const GridSpec& g = W.grid;
  double cell = g.dx() * g.half_dual_dxi();
  if (g.particles == 2) cell *= cell;
  return integrate(W.v, cell);
}

double wigner_max_imag_ratio(const WignerField& W) {
  double mi = 0, ma = 0;
  for (auto& c : W.v) {
    mi = std::max(mi, std::abs(c.imag()));
    ma = std::max(ma, std::abs(c));
  }
  return ma > 0 ? mi / ma : 0.0;
}

cplx cross_wigner_point(cplx zket, cplx zbra, double x, double xi, const GridSpec& g) {
  const int n = g.n;
  const double dx = g.dx(), h = g.hbar;
  Ksum s;
  for (int l = -n / 2; l < n / 2; ++l) {
    double y = l * dx;
    double ph = -2.0 * y * xi / h;
    s.add(coherent_value(zket, x + y, h) * std::conj(coherent_value(zbra, x - y, h)) *
          cplx(std::cos(ph), std::sin(ph)));
  }
  return s.get() * dx / (PI * h);
}

cplx cross_wigner_closed(cplx zket, cplx zbra, double x, double xi, double hbar) {
  double aq = zket.real(), ap = zket.imag(), bq = zbra.real(), bp = zbra.imag();
  cplx c(aq - bq, ap + bp - 2.0 * xi);
  cplx E = c * c / 4.0 - ((x - aq) * (x - aq) + (x - bq) * (x - bq)) / 2.0 +
           cplx(0, 1) * (ap - bp) * x;
  return std::exp(E / hbar) / (PI * hbar);
}

namespace {

struct RotTerm {
  cplx c;
  cplx kp, km, bp, bm;  // rotated ket/bra plus & minus coherent parameters
};

std::vector<RotTerm> rotated_terms(const DensityMatrix& rho, ExchangeKind kind) {
  require(rho.grid.particles == 2, "rotated terms: N = 2 required");
  const double s = std::sqrt(0.5);
  std::vector<RotTerm> out;
  for (auto& t : rho.terms) {
    require(t.ket.coherentZ.size() == 2 && t.bra.coherentZ.size() == 2,
            "rotated Wigner path requires coherent-product terms");
    RotTerm r;
    r.c = t.c;
    r.kp = (t.ket.coherentZ[0] + t.ket.coherentZ[1]) * s;
    r.km = (t.ket.coherentZ[0] - t.ket.coherentZ[1]) * s;
    r.bp = (t.bra.coherentZ[0] + t.bra.coherentZ[1]) * s;
    r.bm = (t.bra.coherentZ[0] - t.bra.coherentZ[1]) * s;
    if (kind == ExchangeKind::U) r.bm = -r.bm;  // bra swap negates the minus center
    if (kind == ExchangeKind::V) r.km = -r.km;
    out.push_back(r);
  }
  return out;
}

}  // namespace

Field2D minus_block_field(const DensityMatrix& rho, double qplus, double pplus, ExchangeKind kind,
                          bool parallel) {
  const GridSpec& g = rho.grid;
  auto terms = rotated_terms(rho, kind);
  std::vector<cplx> plus_factor(terms.size());
  for (size_t k = 0; k < terms.size(); ++k)
    plus_factor[k] = terms[k].c * cross_wigner_point(terms[k].kp, terms[k].bp, qplus, pplus, g);

  Field2D F(position_axis(g), half_dual_axis(g));
  const int n = g.n;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) {
      Ksum s;
      for (size_t k = 0; k < terms.size(); ++k)
        s.add(plus_factor[k] *
              cross_wigner_point(terms[k].km, terms[k].bm, g.x(i), g.xi_half(m), g));
      F.at(i, m) = s.get();
    }
  return F;
}

Report verify_wigner_exchange(const DensityMatrix& rho, bool u_form, uint64_t seed,
                              double tolerance) {
  const GridSpec& g = rho.grid;
  auto base = rotated_terms(rho, ExchangeKind::none);
  Rng rng(seed);
  // Plus slices: the rotated term centers plus one random point.
  std::vector<std::pair<double, double>> slices;
  for (auto& t : base) slices.emplace_back(t.kp.real(), t.kp.imag());
  if (slices.size() > 3) slices.resize(3);
  slices.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));

  const int n = g.n;
  double maxerr = 0;
  for (auto& [qp, pp] : slices) {
    Field2D A = minus_block_field(rho, qp, pp, u_form ? ExchangeKind::U : ExchangeKind::V);
    Field2D G = minus_block_field(rho, qp, pp, ExchangeKind::none);
    Field2D B = symplectic_fourier(G, g.hbar / 2.0);
    double amax = A.max_abs();
    if (amax == 0) continue;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        cplx lhs = A.at(i, j);
        if (std::abs(lhs) < 1e-8 * amax) continue;
        cplx rhs = u_form ? B.at(i, j) : B.at(n - i, n - j);
        maxerr = std::max(maxerr, std::abs(lhs - rhs) / std::abs(lhs));
      }
  }
  Report r;
  r.lemma = "wigner_exchange";
  r.which = u_form ? "U" : "V";
  r.samples = (int)slices.size();
  r.seed = seed;
  r.max_rel_err = maxerr;
  r.tolerance = tolerance;
  r.pass = maxerr <= tolerance;
  return r;
}

Report verify_wigner_composition(const DensityMatrix& rho, int nsamples, uint64_t seed,
                                 double tolerance) {
  const GridSpec& g = rho.grid;
  DensityMatrix vu = exchange_V(exchange_U(rho));
  Rng rng(seed);
  auto point_eval = [&](const DensityMatrix& r, double x1, double xi1, double x2, double xi2) {
    Ksum s;
    for (auto& t : r.terms) {
      require(t.ket.coherentZ.size() == 2, "composition check needs coherent terms");
      s.add(t.c * cross_wigner_point(t.ket.coherentZ[0], t.bra.coherentZ[0], x1, xi1, g) *
            cross_wigner_point(t.ket.coherentZ[1], t.bra.coherentZ[1], x2, xi2, g));
    }
    return s.get();
  };
  double maxerr = 0;
  for (int k = 0; k < nsamples; ++k) {
    double x1 = rng.uniform(-2, 2), xi1 = rng.uniform(-2, 2);
    double x2 = rng.uniform(-2, 2), xi2 = rng.uniform(-2, 2);
    cplx lhs = point_eval(vu, x1, xi1, x2, xi2);
    cplx rhs = point_eval(rho, x2, xi2, x1, xi1);
    double den = std::max({std::abs(lhs), std::abs(rhs), 1e-12});
    maxerr = std::max(maxerr, std::abs(lhs - rhs) / den);
  }
  Report r;
  r.lemma = "wigner_uv_composition";
  r.samples = nsamples;
  r.seed = seed;
  r.max_rel_err = maxerr;
  r.tolerance = tolerance;
  r.pass = maxerr <= tolerance;
  return r;
}

cplx wminus_point(const MinusEvaluator& F, double a, double b, double x, double xi, double hbar,
                  const WminusParams& params, double* trunc_est) {
  const int nd = params.nodes;
  const double R = params.range_factor / std::sqrt(hbar);
  const double dd = 2.0 * R / (nd - 1);
  double boundary = 0, interior = 0;
  Ksum s;
  for (int i = 0; i < nd; ++i) {
    double d1 = -R + i * dd;
    for (int j = 0; j < nd; ++j) {
      double d2 = -R + j * dd;
      cplx fp = F(a + 2 * d1 * hbar, b + 2 * d2 * hbar);
      cplx fm = F(a - 2 * d1 * hbar, b - 2 * d2 * hbar);
      double ph = x * d1 - xi * d2;
      s.add(std::conj(fp) * fm * cplx(std::cos(ph), std::sin(ph)));
      double mag = std::max(std::abs(fp), std::abs(fm));
      interior = std::max(interior, mag);
      if (i == 0 || j == 0 || i == nd - 1 || j == nd - 1) boundary = std::max(boundary, mag);
    }
  }
  if (trunc_est) *trunc_est = interior > 0 ? boundary / interior : 0.0;
  return s.get() * dd * dd;
}

Report verify_wminus_exchange(const DensityMatrix& rho, int npoints, uint64_t seed,
                              double tolerance) {
  const GridSpec& g = rho.grid;
  auto base = rotated_terms(rho, ExchangeKind::none);
  // Fix one plus slice; the identity is per-slice.
  const double qp = base[0].kp.real(), pp = base[0].kp.imag();

  auto make_eval = [&](ExchangeKind kind) -> MinusEvaluator {
    auto terms = rotated_terms(rho, kind);
    std::vector<cplx> pf(terms.size());
    for (size_t k = 0; k < terms.size(); ++k)
      pf[k] = terms[k].c * cross_wigner_point(terms[k].kp, terms[k].bp, qp, pp, g);
    return [terms, pf, &g](double u, double v) {
      cplx s = 0;
      for (size_t k = 0; k < terms.size(); ++k)
        s += pf[k] * cross_wigner_closed(terms[k].km, terms[k].bm, u, v, g.hbar);
      return s;
    };
  };
  MinusEvaluator FU = make_eval(ExchangeKind::U);
  MinusEvaluator G = make_eval(ExchangeKind::none);

  Rng rng(seed);
  double maxerr = 0;
#ifdef _OPENMP
  // points are sampled up front so parallel evaluation stays deterministic
#endif
  std::vector<std::array<double, 4>> pts;
  for (int k = 0; k < npoints; ++k)
    pts.push_back({rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7), rng.uniform(-2, 2),
                   rng.uniform(-2, 2)});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : maxerr)
#endif
  for (size_t k = 0; k < pts.size(); ++k) {
    auto [a, b, x, xi] = pts[k];
    cplx lhs = wminus_point(FU, a, b, x, xi, g.hbar);
    cplx rhs = wminus_point(G, xi / 8.0, x / 8.0, 8.0 * b, 8.0 * a, g.hbar);
    double den = std::max({std::abs(lhs), std::abs(rhs), 1e-14});
    maxerr = std::max(maxerr, std::abs(lhs - rhs) / den);
  }
  Report r;
  r.lemma = "wminus_exchange";
  r.samples = npoints;
  r.seed = seed;
  r.max_rel_err = maxerr;
  r.tolerance = tolerance;
  r.pass = maxerr <= tolerance;
  return r;
}

}  // namespace pk
