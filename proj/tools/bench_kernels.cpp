// Timing harness: OpenMP kernels vs their serial reference implementations.
#include <chrono>
#include <cstdio>
#include <functional>

#include "phasekit/corpus.hpp"
#include "phasekit/fourier.hpp"
#include "phasekit/husimi.hpp"
#include "phasekit/wigner.hpp"

using namespace pk;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
  f();  // warm-up
  auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < reps; ++k) f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms, double maxdiff) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   maxdiff %.3e\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, maxdiff);
}

}  // namespace

int main() {
  {
    GridSpec g(256, 8.0, 1.0, 1);
    Field2D f(position_axis(g), dual_axis(g));
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        double x = f.ax0.at(i), xi = f.ax1.at(j);
        f.at(i, j) = std::exp(-(x * x + xi * xi) / 2.0) * cplx(1.0, 0.2 * x * xi);
      }
    Field2D a, b;
    double ts = time_ms([&] { a = symplectic_fourier_serial(f, g.hbar); }, 3);
    double tp = time_ms([&] { b = symplectic_fourier(f, g.hbar); }, 3);
    double d = 0;
    for (size_t k = 0; k < a.v.size(); ++k) d = std::max(d, std::abs(a.v[k] - b.v[k]));
    row("symplectic_fourier n=256", ts, tp, d);
  }

  {
    GridSpec g(64, 12.0, 1.0, 2);
    auto states = corpus_states(g);
    const DensityMatrix& rho = states[2].rho;  // rank3-mixture
    double ia = 0, ib = 0;
    double ts = time_ms([&] { ia = husimi_box_integral_serial(rho, 16, 6.0, 6.0); }, 2);
    double tp = time_ms([&] { ib = husimi_box_integral(rho, 16, 6.0, 6.0); }, 2);
    row("husimi_box_integral m=16", ts, tp, std::abs(ia - ib));
  }

  {
    GridSpec g(64, 8.0, 1.0, 2);
    auto states = corpus_states(g);
    const DensityMatrix& rho = states[1].rho;  // coherent-generic
    Field2D a, b;
    double ts = time_ms([&] { a = minus_block_field(rho, 0.2, -0.1, ExchangeKind::U, false); }, 3);
    double tp = time_ms([&] { b = minus_block_field(rho, 0.2, -0.1, ExchangeKind::U, true); }, 3);
    double d = 0;
    for (size_t k = 0; k < a.v.size(); ++k) d = std::max(d, std::abs(a.v[k] - b.v[k]));
    row("minus_block_field n=64", ts, tp, d);
  }
  return 0;
}
