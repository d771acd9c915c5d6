#pragma once
// Bosonic/fermionic symmetrizers of d=1 relative-coordinate kernels,
// positivity and symmetry verification.
#include "phasekit/report.hpp"
#include "phasekit/toeplitz.hpp"

namespace pk {

enum class Statistics { bosonic, fermionic };

// Parity exchange maps on d=1 kernels: U: K(x,y) -> K(x,-y), V: K(x,y) -> K(-x,y).
CoherentKernel apply_U(const CoherentKernel& K);
CoherentKernel apply_V(const CoherentKernel& K);

// bosonic: (H + VH + UH + UVH)/4; fermionic: (H - VH - UH + UVH)/4.
CoherentKernel symmetrize(const CoherentKernel& H, Statistics kind);

struct StateCheck {
  double sym_residual_U = 0;  // ||U K -/+ K|| / ||K|| on sampled points
  double sym_residual_V = 0;
  double min_eig = 0, max_eig = 0;  // 64-pt Galerkin spectrum bounds
  double trace_raw = 0;
  double trace_normalized = 1.0;  // raw / raw (reported for symmetry with the flag)
  bool hermitian = true;
  bool positive = false;
};

// Hermitian kernel expected; throws on non-Hermitian input.
StateCheck check_state(const CoherentKernel& rho, Statistics kind);

Report verify_symmetrizers(const GaussianSymbol& h, uint64_t seed, double eig_floor = 1e-9,
                           double sym_tol = 1e-12, double trace_tol = 1e-8);

}  // namespace pk
