#include "phasekit/statistics.hpp"

#include <Eigen/Dense>

namespace pk {

CoherentKernel apply_U(const CoherentKernel& K) {
  // psi_z(-y) = psi_{-z}(y), so the bra-side parity flip negates zbra.
  CoherentKernel r = K;
  for (auto& t : r.terms) t.zbra = -t.zbra;
  return r;
}

CoherentKernel apply_V(const CoherentKernel& K) {
  CoherentKernel r = K;
  for (auto& t : r.terms) t.zket = -t.zket;
  return r;
}

CoherentKernel symmetrize(const CoherentKernel& H, Statistics kind) {
  const double s = (kind == Statistics::bosonic) ? 1.0 : -1.0;
  CoherentKernel r;
  r.hbar = H.hbar;
  r.terms.reserve(4 * H.terms.size());
  for (auto& t : H.terms) {
    r.terms.push_back({0.25 * t.c, t.zket, t.zbra});
    r.terms.push_back({0.25 * s * t.c, -t.zket, t.zbra});   // VH
    r.terms.push_back({0.25 * s * t.c, t.zket, -t.zbra});   // UH
    r.terms.push_back({0.25 * t.c, -t.zket, -t.zbra});      // UVH
  }
  return r;
}

namespace {

double kernel_box(const CoherentKernel& K) {
  double c = 0;
  for (auto& t : K.terms) c = std::max({c, std::abs(t.zket), std::abs(t.zbra)});
  return c + 5.0 * std::sqrt(K.hbar);
}

}  // namespace

StateCheck check_state(const CoherentKernel& rho, Statistics kind) {
  const double sgn = (kind == Statistics::bosonic) ? 1.0 : -1.0;
  const int m = 64;
  const double Lg = kernel_box(rho);
  const double d = 2.0 * Lg / m;
  StateCheck out;

  Eigen::MatrixXcd M(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M(i, j) = rho.eval(-Lg + (i + 0.5) * d, -Lg + (j + 0.5) * d);
  double kmax = M.cwiseAbs().maxCoeff();
  double herm_res = (M - M.adjoint()).cwiseAbs().maxCoeff() / std::max(kmax, 1e-300);
  out.hermitian = herm_res <= 1e-10;
  require(out.hermitian, "check_state: non-Hermitian kernel");

  CoherentKernel uk = apply_U(rho), vk = apply_V(rho);
  double ru = 0, rv = 0;
  for (int i = 0; i < m; i += 7)
    for (int j = 0; j < m; j += 7) {
      double x = -Lg + (i + 0.5) * d, y = -Lg + (j + 0.5) * d;
      ru = std::max(ru, std::abs(uk.eval(x, y) - sgn * rho.eval(x, y)));
      rv = std::max(rv, std::abs(vk.eval(x, y) - sgn * rho.eval(x, y)));
    }
  out.sym_residual_U = ru / std::max(kmax, 1e-300);
  out.sym_residual_V = rv / std::max(kmax, 1e-300);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (M + M.adjoint()) * d);
  out.min_eig = es.eigenvalues().minCoeff();
  out.max_eig = es.eigenvalues().maxCoeff();
  out.positive = out.min_eig >= -1e-9 * std::max(out.max_eig, 1e-300);
  out.trace_raw = rho.trace().real();
  out.trace_normalized = out.trace_raw != 0 ? 1.0 : 0.0;
  return out;
}

Report verify_symmetrizers(const GaussianSymbol& h, uint64_t seed, double eig_floor,
                           double sym_tol, double trace_tol) {
  CoherentKernel H = toeplitz_quantize_quad(h);
  CoherentKernel HB = symmetrize(H, Statistics::bosonic);
  CoherentKernel HF = symmetrize(H, Statistics::fermionic);

  double maxerr = 0;
  bool pass = true;

  StateCheck cb = check_state(HB, Statistics::bosonic);
  StateCheck cf = check_state(HF, Statistics::fermionic);
  maxerr = std::max({maxerr, cb.sym_residual_U, cb.sym_residual_V, cf.sym_residual_U,
                     cf.sym_residual_V});
  pass = pass && cb.positive && cf.positive;
  pass = pass && cb.sym_residual_U <= sym_tol && cb.sym_residual_V <= sym_tol &&
         cf.sym_residual_U <= sym_tol && cf.sym_residual_V <= sym_tol;
  (void)eig_floor;

  // Trace sum rule: tr H^B + tr H^F = (tr H + tr UVH)/2, closed-form traces.
  CoherentKernel uvh = apply_U(apply_V(H));
  cplx lhs = HB.trace() + HF.trace();
  cplx rhs = 0.5 * (H.trace() + uvh.trace());
  double terr = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
  maxerr = std::max(maxerr, terr);
  pass = pass && terr <= trace_tol;

  // Projector algebra on sampled kernel values.
  CoherentKernel HBB = symmetrize(HB, Statistics::bosonic);
  CoherentKernel HBF = symmetrize(HB, Statistics::fermionic);
  Rng rng(seed);
  double box = kernel_box(H);
  double scale = 0;
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < 25; ++k) pts.emplace_back(rng.uniform(-box, box), rng.uniform(-box, box));
  for (auto& [x, y] : pts) scale = std::max(scale, std::abs(HB.eval(x, y)));
  for (auto& [x, y] : pts) {
    double e1 = std::abs(HBB.eval(x, y) - HB.eval(x, y)) / std::max(scale, 1e-300);
    double e2 = std::abs(HBF.eval(x, y)) / std::max(scale, 1e-300);
    maxerr = std::max({maxerr, e1, e2});
    pass = pass && e1 <= sym_tol && e2 <= sym_tol;
  }

  Report r;
  r.lemma = "symmetrizers";
  r.samples = (int)pts.size();
  r.seed = seed;
  r.max_rel_err = maxerr;
  r.tolerance = std::max(sym_tol, trace_tol);
  r.pass = pass;
  return r;
}

}  // namespace pk
