#pragma once
// Husimi transform, two-point continuation, exchange lemma and corollaries.
#include "phasekit/report.hpp"
#include "phasekit/rng.hpp"
#include "phasekit/states.hpp"

namespace pk {

// (2*pi*hbar)^{-N} <phi_Z| rho |phi_Z> by quadrature.
cplx husimi(const DensityMatrix& rho, const PhasePoint& Z);

// (2*pi*hbar)^{-N} <phi_{Zb}| rho |phi_{Za}>
//   * exp[(|Za|^2+|Zb|^2)/(4 hbar) - (conj(Zb).Za)/(2 hbar)]
// -- the analytic continuation of husimi to independent (Z, Zbar) arguments.
cplx husimi_two_point(const DensityMatrix& rho, const PhasePoint& Za, const PhasePoint& Zb);

// Riemann sum of husimi over the 4D box [-qmax,qmax]^2 x [-pmax,pmax]^2 (N=2)
// with m points per axis. Factorizes the coherent probe for speed.
double husimi_box_integral(const DensityMatrix& rho, int m, double qmax, double pmax,
                           bool parallel = true);
double husimi_box_integral_serial(const DensityMatrix& rho, int m, double qmax, double pmax);

enum class Which { U, V };

Report verify_husimi_exchange(const DensityMatrix& rho, Which which,
                              const std::vector<PhasePoint>& samples, uint64_t seed,
                              double tolerance = 1e-6);
Report verify_husimi_composition(const DensityMatrix& rho, const std::vector<PhasePoint>& samples,
                                 uint64_t seed, double tolerance = 1e-6);

Report bosonic_check_husimi(const DensityMatrix& rho, const std::vector<PhasePoint>& samples,
                            uint64_t seed, double tolerance = 1e-6);

// Corollary-2 style factorization: H := e^{+conj(u_bra) u_ket/(4 hbar)} * two-point
// continuation; tests evenness under ket-difference flip and bra-difference flip.
Report bosonic_factorization_check(const DensityMatrix& rho, const std::vector<PhasePoint>& samples,
                                   uint64_t seed, double tolerance = 1e-6);

std::vector<PhasePoint> sample_box(const GridSpec& g, int count, uint64_t seed);

}  // namespace pk
