#pragma once
// Grids, quadrature, +/- rotations, small numeric helpers.
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pk {

using cplx = std::complex<double>;
inline constexpr double PI = 3.14159265358979323846;

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// One-axis position grid x_k = -L + k*dx, dx = 2L/n, tensorized for N particles.
struct GridSpec {
  int n = 64;
  double L = 8.0;
  double hbar = 1.0;
  int particles = 1;

  GridSpec() = default;
  GridSpec(int n_, double L_, double hbar_, int N) : n(n_), L(L_), hbar(hbar_), particles(N) {
    require(is_pow2(n), "GridSpec: n must be a power of two");
    require(L > 0 && hbar > 0, "GridSpec: L and hbar must be positive");
    require(N == 1 || N == 2, "GridSpec: particles must be 1 or 2");
  }

  double dx() const { return 2.0 * L / n; }
  double x(int k) const { return -L + k * dx(); }
  // Dual momentum grid aligned with the e^{-i x xi / hbar} kernel.
  double dual_dxi() const { return PI * hbar / L; }
  double xi(int m) const { return (m - n / 2) * dual_dxi(); }
  // Half-step dual grid used by the Wigner transform (offsets y = 2*l*dx).
  double half_dual_dxi() const { return PI * hbar / (2.0 * L); }
  double xi_half(int m) const { return (m - n / 2) * half_dual_dxi(); }
  bool truncation_ok() const { return L * L / hbar >= 16.0; }
};

// Phase-space point Z in C^{dN}, z_k = q_k + i p_k.
struct PhasePoint {
  std::vector<cplx> z;
  PhasePoint() = default;
  explicit PhasePoint(std::vector<cplx> zz) : z(std::move(zz)) {}
  PhasePoint(cplx z1) : z{z1} {}
  PhasePoint(cplx z1, cplx z2) : z{z1, z2} {}
  static PhasePoint from_qp(const std::vector<double>& q, const std::vector<double>& p) {
    require(q.size() == p.size(), "PhasePoint: q/p length mismatch");
    PhasePoint Z;
    Z.z.reserve(q.size());
    for (size_t k = 0; k < q.size(); ++k) Z.z.emplace_back(q[k], p[k]);
    return Z;
  }
  size_t size() const { return z.size(); }
  double q(size_t k) const { return z[k].real(); }
  double p(size_t k) const { return z[k].imag(); }
  PhasePoint swapped() const {
    require(z.size() == 2, "PhasePoint::swapped needs two components");
    return PhasePoint(z[1], z[0]);
  }
  double norm2() const {
    double s = 0;
    for (auto& c : z) s += std::norm(c);
    return s;
  }
};

struct Axis {
  int n = 0;
  double x0 = 0;
  double dx = 0;
  double at(int k) const { return x0 + k * dx; }
};

// Dense complex field on a 2-axis grid, row-major over (ax0, ax1).
struct Field2D {
  Axis ax0, ax1;
  std::vector<cplx> v;
  Field2D() = default;
  Field2D(Axis a0, Axis a1) : ax0(a0), ax1(a1), v((size_t)a0.n * a1.n, cplx(0)) {}
  cplx& at(int i, int j) { return v[(size_t)i * ax1.n + j]; }
  cplx at(int i, int j) const { return v[(size_t)i * ax1.n + j]; }
  double max_abs() const {
    double m = 0;
    for (auto& c : v) m = std::max(m, std::abs(c));
    return m;
  }
};

inline Axis position_axis(const GridSpec& g) { return Axis{g.n, -g.L, g.dx()}; }
inline Axis dual_axis(const GridSpec& g) { return Axis{g.n, -g.n / 2 * g.dual_dxi(), g.dual_dxi()}; }
inline Axis half_dual_axis(const GridSpec& g) {
  return Axis{g.n, -g.n / 2 * g.half_dual_dxi(), g.half_dual_dxi()};
}

// Kahan-compensated complex accumulator; keeps long quadrature sums near 1 ulp.
struct Ksum {
  cplx s{0.0, 0.0}, c{0.0, 0.0};
  void add(cplx x) {
    cplx y = x - c;
    cplx t = s + y;
    c = (t - s) - y;
    s = t;
  }
  cplx get() const { return s; }
};

// (a_i, a_j) -> (a_+, a_-) = ((a_i+a_j)/sqrt2, (a_i-a_j)/sqrt2); inverse undoes it exactly.
enum class RotDir { forward, inverse };

template <typename T>
std::array<T, 2> rotate_pm(const std::array<T, 2>& a, RotDir dir = RotDir::forward) {
  const double s = std::sqrt(0.5);
  if (dir == RotDir::forward) return {(a[0] + a[1]) * s, (a[0] - a[1]) * s};
  return {(a[0] + a[1]) * s, (a[0] - a[1]) * s};  // the map is its own inverse
}

template <typename T>
std::vector<T> rotate_pm(const std::vector<T>& a, RotDir dir = RotDir::forward) {
  require(a.size() == 2, "rotate_pm: length-2 input required");
  auto r = rotate_pm(std::array<T, 2>{a[0], a[1]}, dir);
  return {r[0], r[1]};
}

// Riemann sum with uniform cell volume.
inline cplx integrate(const std::vector<cplx>& f, double cellvol) {
  require(!f.empty(), "integrate: empty field");
  Ksum s;
  for (auto& c : f) s.add(c);
  return s.get() * cellvol;
}

inline cplx integrate(const Field2D& f) {
  require(!f.v.empty(), "integrate: empty field");
  return integrate(f.v, f.ax0.dx * f.ax1.dx);
}

}  // namespace pk
