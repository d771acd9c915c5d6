#include "phasekit/husimi.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pk {

namespace {

double two_pi_h_pow(const GridSpec& g) {
  double f = 1;
  for (int k = 0; k < g.particles; ++k) f *= 2.0 * PI * g.hbar;
  return f;
}

// Relative error with a floor avoiding 0/0 at incidental zeros.
double rel_err(cplx a, cplx b, double floor_scale) {
  double den = std::max({std::abs(a), std::abs(b), floor_scale});
  return std::abs(a - b) / den;
}

}  // namespace

cplx husimi(const DensityMatrix& rho, const PhasePoint& Z) {
  require((int)Z.size() == rho.grid.particles, "husimi: Z length must equal N");
  Wavefunction probe = coherent_state(Z, rho.grid);
  Ksum s;
  for (auto& t : rho.terms) s.add(t.c * inner(probe, t.ket) * inner(t.bra, probe));
  return s.get() / two_pi_h_pow(rho.grid);
}

cplx husimi_two_point(const DensityMatrix& rho, const PhasePoint& Za, const PhasePoint& Zb) {
  require(Za.size() == Zb.size(), "husimi_two_point: length mismatch");
  const double h = rho.grid.hbar;
  Wavefunction pa = coherent_state(Za, rho.grid);
  Wavefunction pb = coherent_state(Zb, rho.grid);
  Ksum s;
  for (auto& t : rho.terms) s.add(t.c * inner(pb, t.ket) * inner(t.bra, pa));
  cplx dot = 0;
  for (size_t k = 0; k < Za.size(); ++k) dot += std::conj(Zb.z[k]) * Za.z[k];
  cplx w = std::exp((Za.norm2() + Zb.norm2()) / (4.0 * h) - dot / (2.0 * h));
  return s.get() / two_pi_h_pow(rho.grid) * w;
}

namespace {

double box_integral_impl(const DensityMatrix& rho, int m, double qmax, double pmax,
                         bool parallel) {
  require(rho.grid.particles == 2, "husimi_box_integral: N = 2 required");
  const int n = rho.grid.n;
  const double h = rho.grid.hbar;
  const double dq = 2.0 * qmax / m, dp = 2.0 * pmax / m;
  const double dxv = rho.grid.dx();
  const int M = m * m;

  // Phase nodes (cell midpoints) and per-node coherent samples.
  std::vector<cplx> zs(M);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      zs[(size_t)a * m + b] = cplx(-qmax + (a + 0.5) * dq, -pmax + (b + 0.5) * dp);
  std::vector<cplx> phi((size_t)M * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int s = 0; s < M; ++s)
    for (int k = 0; k < n; ++k) phi[(size_t)s * n + k] = coherent_value(zs[s], rho.grid.x(k), h);

  // For each term and first-particle node s: A[j] = sum_i conj(phi_s(x_i)) ket[i,j] dx
  // (and the mirrored contraction for the bra). Then husimi at (s1,s2) needs only O(n).
  double total = 0;
  for (auto& t : rho.terms) {
    std::vector<cplx> Ak((size_t)M * n), Ab((size_t)M * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int s = 0; s < M; ++s) {
      for (int j = 0; j < n; ++j) {
        Ksum ak, ab;
        for (int i = 0; i < n; ++i) {
          cplx cp = std::conj(phi[(size_t)s * n + i]);
          ak.add(cp * t.ket.v[(size_t)i * n + j]);
          ab.add(std::conj(cp) * std::conj(t.bra.v[(size_t)i * n + j]));
        }
        Ak[(size_t)s * n + j] = ak.get() * dxv;
        Ab[(size_t)s * n + j] = ab.get() * dxv;
      }
    }
    double tsum = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : tsum) if (parallel)
#endif
    for (int s1 = 0; s1 < M; ++s1) {
      Ksum row;
      for (int s2 = 0; s2 < M; ++s2) {
        Ksum ik, ib;
        for (int j = 0; j < n; ++j) {
          ik.add(std::conj(phi[(size_t)s2 * n + j]) * Ak[(size_t)s1 * n + j]);
          ib.add(phi[(size_t)s2 * n + j] * Ab[(size_t)s1 * n + j]);
        }
        row.add(t.c * ik.get() * dxv * ib.get() * dxv);
      }
      tsum += row.get().real();
    }
    total += tsum;
  }
  return total * dq * dp * dq * dp / two_pi_h_pow(rho.grid);
}

}  // namespace

double husimi_box_integral(const DensityMatrix& rho, int m, double qmax, double pmax,
                           bool parallel) {
  return box_integral_impl(rho, m, qmax, pmax, parallel);
}

double husimi_box_integral_serial(const DensityMatrix& rho, int m, double qmax, double pmax) {
  return box_integral_impl(rho, m, qmax, pmax, false);
}

std::vector<PhasePoint> sample_box(const GridSpec& g, int count, uint64_t seed) {
  Rng rng(seed);
  std::vector<PhasePoint> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k)
    out.push_back(rng.phase_point(g.particles, sample_qmax(g), sample_pmax(g)));
  return out;
}

Report verify_husimi_exchange(const DensityMatrix& rho, Which which,
                              const std::vector<PhasePoint>& samples, uint64_t seed,
                              double tolerance) {
  require(rho.grid.particles == 2, "verify_husimi_exchange: N = 2 required");
  require(!samples.empty(), "verify_husimi_exchange: empty samples");
  const double h = rho.grid.hbar;
  DensityMatrix ex = (which == Which::U) ? exchange_U(rho) : exchange_V(rho);
  const double floor_scale = 1e-12 / (2.0 * PI * h) / (2.0 * PI * h);
  double maxerr = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : maxerr)
#endif
  for (size_t k = 0; k < samples.size(); ++k) {
    const PhasePoint& Z = samples[k];
    cplx u = Z.z[0] - Z.z[1];
    cplx w = std::exp(-std::conj(u) * u / (2.0 * h));  // real for real samples
    cplx lhs = husimi(ex, Z);
    cplx rhs = (which == Which::U) ? w * husimi_two_point(rho, Z.swapped(), Z)
                                   : w * husimi_two_point(rho, Z, Z.swapped());
    maxerr = std::max(maxerr, rel_err(lhs, rhs, floor_scale));
  }
  Report r;
  r.lemma = "husimi_exchange";
  r.which = (which == Which::U) ? "U" : "V";
  r.samples = (int)samples.size();
  r.seed = seed;
  r.max_rel_err = maxerr;
  r.tolerance = tolerance;
  r.pass = maxerr <= tolerance;
  return r;
}

Report verify_husimi_composition(const DensityMatrix& rho, const std::vector<PhasePoint>& samples,
                                 uint64_t seed, double tolerance) {
  DensityMatrix vu = exchange_V(exchange_U(rho));
  const double h = rho.grid.hbar;
  const double floor_scale = 1e-12 / (2.0 * PI * h) / (2.0 * PI * h);
  double maxerr = 0;
  for (auto& Z : samples)
    maxerr = std::max(maxerr, rel_err(husimi(vu, Z), husimi(rho, Z.swapped()), floor_scale));
  Report r;
  r.lemma = "husimi_uv_composition";
  r.samples = (int)samples.size();
  r.seed = seed;
  r.max_rel_err = maxerr;
  r.tolerance = tolerance;
  r.pass = maxerr <= tolerance;
  return r;
}

Report bosonic_check_husimi(const DensityMatrix& rho, const std::vector<PhasePoint>& samples,
                            uint64_t seed, double tolerance) {
  require(rho.hermitian, "bosonic_check_husimi: Hermitian input required");
  const double h = rho.grid.hbar;
  const double floor_scale = 1e-12 / (2.0 * PI * h) / (2.0 * PI * h);
  double maxerr = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : maxerr)
#endif
  for (size_t k = 0; k < samples.size(); ++k) {
    const PhasePoint& Z = samples[k];
    cplx u = Z.z[0] - Z.z[1];
    cplx w = std::exp(-std::conj(u) * u / (2.0 * h));
    cplx base = husimi(rho, Z);
    double e1 = rel_err(base, w * husimi_two_point(rho, Z.swapped(), Z), floor_scale);
    double e2 = rel_err(base, w * husimi_two_point(rho, Z, Z.swapped()), floor_scale);
    maxerr = std::max({maxerr, e1, e2});
  }
  Report r;
  r.lemma = "husimi_bosonic";
  r.samples = (int)samples.size();
  r.seed = seed;
  r.max_rel_err = maxerr;
  r.tolerance = tolerance;
  r.pass = maxerr <= tolerance;
  return r;
}

Report bosonic_factorization_check(const DensityMatrix& rho,
                                   const std::vector<PhasePoint>& samples, uint64_t seed,
                                   double tolerance) {
  require(rho.hermitian, "bosonic_factorization_check: Hermitian input required");
  const double h = rho.grid.hbar;
  const double floor_scale = 1e-12 / (2.0 * PI * h) / (2.0 * PI * h);
  // H(Za, Zb) = exp(+conj(u_b) u_a / 4 hbar) * two-point(rho, Za, Zb); evenness of H
  // separately under u_a -> -u_a (ket swap) and conj(u_b) -> -conj(u_b) (bra swap).
  auto H = [&](const PhasePoint& Za, const PhasePoint& Zb) {
    cplx ua = Za.z[0] - Za.z[1];
    cplx wb = std::conj(Zb.z[0] - Zb.z[1]);
    return std::exp(wb * ua / (4.0 * h)) * husimi_two_point(rho, Za, Zb);
  };
  double maxerr = 0;
  const long npairs = (long)samples.size() / 2;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : maxerr)
#endif
  for (long k = 0; k < npairs; ++k) {
    const PhasePoint &Za = samples[2 * k], &Zb = samples[2 * k + 1];
    cplx base = H(Za, Zb);
    double e1 = rel_err(base, H(Za.swapped(), Zb), floor_scale);
    double e2 = rel_err(base, H(Za, Zb.swapped()), floor_scale);
    maxerr = std::max({maxerr, e1, e2});
  }
  Report r;
  r.lemma = "husimi_factorization_evenness";
  r.samples = (int)samples.size();
  r.seed = seed;
  r.max_rel_err = maxerr;
  r.tolerance = tolerance;
  r.pass = maxerr <= tolerance;
  return r;
}

}  // namespace pk
