#include "phasekit/fourier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pk {

namespace {

Field2D sf_impl(const Field2D& f, double hbar, bool parallel) {
  require(f.ax0.n == (int)(f.v.size() / f.ax1.n) && f.ax0.n == f.ax1.n,
          "symplectic_fourier: square field required");
  const int n = f.ax0.n;
  Field2D g(f.ax0, f.ax1);
  const double scale = f.ax0.dx * f.ax1.dx / (2.0 * PI * hbar);

  // A[m][j] = sum_a f(a,m) e^{-i p_j x_a / hbar}
  std::vector<cplx> A((size_t)n * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < n; ++j) {
      const double pj = f.ax1.at(j);
      Ksum s;
      for (int a = 0; a < n; ++a) {
        const double ph = -pj * f.ax0.at(a) / hbar;
        s.add(f.at(a, m) * cplx(std::cos(ph), std::sin(ph)));
      }
      A[(size_t)m * n + j] = s.get();
    }
  }
  // g(i,j) = scale * sum_m e^{i q_i xi_m / hbar} A[m][j]
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < n; ++i) {
    const double qi = f.ax0.at(i);
    for (int j = 0; j < n; ++j) {
      Ksum s;
      for (int m = 0; m < n; ++m) {
        const double ph = qi * f.ax1.at(m) / hbar;
        s.add(A[(size_t)m * n + j] * cplx(std::cos(ph), std::sin(ph)));
      }
      g.at(i, j) = s.get() * scale;
    }
  }
  return g;
}

}  // namespace

Field2D symplectic_fourier(const Field2D& f, double hbar, bool parallel) {
  return sf_impl(f, hbar, parallel);
}

Field2D symplectic_fourier_serial(const Field2D& f, double hbar) { return sf_impl(f, hbar, false); }

}  // namespace pk
