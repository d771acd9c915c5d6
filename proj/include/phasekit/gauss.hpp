#pragma once
// Complex quadratic exponentials in two real variables and their (continued)
// Gaussian integrals. Backbone of the closed-form Toeplitz kernels.
#include "phasekit/core.hpp"

namespace pk {

// f(w) = pref * exp(-1/2 w^T A w + b^T w + c0), w = (q,p) in R^2, A symmetric.
struct QuadExp {
  std::array<cplx, 4> A{};  // row-major 2x2
  std::array<cplx, 2> b{};
  cplx c0{0.0};
  cplx pref{1.0};

  cplx eval(double q, double p) const {
    cplx e = -0.5 * (A[0] * q * q + (A[1] + A[2]) * q * p + A[3] * p * p) + b[0] * q + b[1] * p + c0;
    return pref * std::exp(e);
  }

  // Int_{R^2} f dw = pref * 2*pi/sqrt(det A) * exp(1/2 b^T A^{-1} b + c0),
  // by analytic continuation (principal sqrt) when A is complex.
  cplx integral() const {
    cplx det = A[0] * A[3] - A[1] * A[2];
    require(std::abs(det) > 0, "QuadExp::integral: singular quadratic form");
    cplx q = 0.5 * (b[0] * (A[3] * b[0] - A[1] * b[1]) + b[1] * (A[0] * b[1] - A[2] * b[0])) / det;
    return pref * 2.0 * PI / std::sqrt(det) * std::exp(q + c0);
  }
};

enum class KernelKind { diag, off_u, off_v };

// Kernel of the (formal) Toeplitz quantization of a QuadExp symbol, d = 1:
//   diag : (2*pi*hbar)^-1 Int h(q,p) psi_z(x) conj(psi_z(y))   dq dp
//   off_u: (2*pi*hbar)^-1 Int h(q,p) psi_z(x) conj(psi_{-z}(y)) dq dp
//   off_v: (2*pi*hbar)^-1 Int h(q,p) psi_{-z}(x) conj(psi_z(y)) dq dp
// with psi_z(x) = (pi*hbar)^{-1/4} e^{-(x-q)^2/(2 hbar)} e^{i p x/hbar}.
// Valid by analytic continuation even when the symbol grows on the real plane.
inline cplx formal_kernel(const QuadExp& h, double x, double y, double hbar,
                          KernelKind kind = KernelKind::diag) {
  QuadExp t = h;
  t.A[0] += 2.0 / hbar;
  switch (kind) {
    case KernelKind::diag:
      t.b[0] += (x + y) / hbar;
      t.b[1] += cplx(0, 1) * (x - y) / hbar;
      break;
    case KernelKind::off_u:
      t.b[0] += (x - y) / hbar;
      t.b[1] += cplx(0, 1) * (x + y) / hbar;
      break;
    case KernelKind::off_v:
      t.b[0] += (y - x) / hbar;
      t.b[1] += cplx(0, -1) * (x + y) / hbar;
      break;
  }
  double pref = std::exp(-(x * x + y * y) / (2.0 * hbar)) / (2.0 * PI * hbar) / std::sqrt(PI * hbar);
  return t.integral() * pref;
}

}  // namespace pk
