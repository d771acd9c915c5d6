#pragma once
// Wigner transform, pi/2-rotated minus-block machinery, exchange lemma via the
// hbar/2 symplectic Fourier transform, and the pointwise W-minus quadrature.
#include <functional>

#include "phasekit/fourier.hpp"
#include "phasekit/report.hpp"
#include "phasekit/rng.hpp"
#include "phasekit/states.hpp"

namespace pk {

// Convention: W[rho](X,Xi) = (2 pi hbar)^{-N} Int rho(X+y/2, X-y/2) e^{-i y.Xi/hbar} dy.
// Xi lives on the half-step dual grid Xi_m = (m - n/2) * pi*hbar/(2L), so offsets
// y = 2 l dx land on grid points exactly (no interpolation).
struct WignerField {
  GridSpec grid;
  std::vector<cplx> v;  // N=1: n^2 over (x, Xi); N=2: n^4 over (x1, x2, Xi1, Xi2)
  cplx at1(int j, int m) const { return v[(size_t)j * grid.n + m]; }
  cplx at2(int j1, int j2, int m1, int m2) const {
    size_t n = grid.n;
    return v[((((size_t)j1 * n + j2) * n + m1) * n + m2)];
  }
};

WignerField wigner(const DensityMatrix& rho, bool parallel = true);

// Riemann integral over the full (X, Xi) grid; equals trace for faithful states.
cplx wigner_integral(const WignerField& W);
double wigner_max_imag_ratio(const WignerField& W);

// 1D cross-Wigner of coherent pair |psi_zket><psi_zbra| at an arbitrary point,
// by offset quadrature with analytic wavefunction evaluation.
cplx cross_wigner_point(cplx zket, cplx zbra, double x, double xi, const GridSpec& g);
// Closed-form oracle for the same quantity.
cplx cross_wigner_closed(cplx zket, cplx zbra, double x, double xi, double hbar);

// Minus-block of the rotated Wigner function at a fixed plus slice, sampled on
// (position axis, half-dual axis). Requires coherent-product terms.
enum class ExchangeKind { none, U, V };
Field2D minus_block_field(const DensityMatrix& rho, double qplus, double pplus, ExchangeKind kind,
                          bool parallel = true);

Report verify_wigner_exchange(const DensityMatrix& rho, bool u_form, uint64_t seed,
                              double tolerance = 1e-5);
Report verify_wigner_composition(const DensityMatrix& rho, int nsamples, uint64_t seed,
                                 double tolerance = 1e-10);

using MinusEvaluator = std::function<cplx(double, double)>;

struct WminusParams {
  int nodes = 160;          // quadrature nodes per delta axis
  double range_factor = 4;  // delta range = range_factor / sqrt(hbar)
};

// W-minus at one output point:
//   Int conj(F(a + 2 d1 hbar, b + 2 d2 hbar)) F(a - 2 d1 hbar, b - 2 d2 hbar)
//       e^{i (x d1 - xi d2)} dd1 dd2.
// trunc_est (optional) receives max |F| sampled on the shift-box boundary over max |F|.
cplx wminus_point(const MinusEvaluator& F, double a, double b, double x, double xi, double hbar,
                  const WminusParams& params = {}, double* trunc_est = nullptr);

Report verify_wminus_exchange(const DensityMatrix& rho, int npoints, uint64_t seed,
                              double tolerance = 1e-4);

}  // namespace pk
