#pragma once
// Coherent states, low-rank density matrices, exchange maps U/V, Gaussian overlap oracle.
#include <optional>
#include <string>

#include "phasekit/core.hpp"

namespace pk {

struct Wavefunction {
  GridSpec grid;
  std::vector<cplx> v;  // size n^N, row-major (x1-major for N=2)
  // Set when the function is exactly a coherent product; enables analytic
  // (off-grid) evaluation in the rotated-Wigner paths.
  std::vector<cplx> coherentZ;

  size_t expected_size() const {
    size_t s = 1;
    for (int k = 0; k < grid.particles; ++k) s *= (size_t)grid.n;
    return s;
  }
};

struct DensityTerm {
  cplx c;
  Wavefunction ket, bra;  // kernel contribution c * ket(X) * conj(bra(Y))
};

struct DensityMatrix {
  GridSpec grid;
  std::vector<DensityTerm> terms;
  bool hermitian = false;
  bool normalized = false;
};

struct ExchangePair {
  int i = 0, j = 1;
};

// One coherent factor (pi*hbar)^{-1/4} e^{-(x-q)^2/(2 hbar)} e^{i p x/hbar}.
cplx coherent_value(cplx z, double x, double hbar);

// Tensor coherent state sampled on the grid. Sets *truncated if any |q| > L - 4*sqrt(hbar).
Wavefunction coherent_state(const PhasePoint& Z, const GridSpec& grid, bool* truncated = nullptr);

// Closed-form <phi_{Za} | phi_{Zb}> (Gaussian integral oracle).
cplx overlap_closed_form(const PhasePoint& Za, const PhasePoint& Zb, double hbar);

// Quadrature inner product <f|g> = sum conj(f) g dx^N.
cplx inner(const Wavefunction& f, const Wavefunction& g);

DensityMatrix exchange_U(const DensityMatrix& rho, ExchangePair pair = {});
DensityMatrix exchange_V(const DensityMatrix& rho, ExchangePair pair = {});

cplx trace(const DensityMatrix& rho);
cplx trace_product(const DensityMatrix& rho, const DensityMatrix& rho2);

// Kernel value rho(X;Y) = sum_k c_k ket_k(X) conj(bra_k(Y)) at grid indices.
cplx kernel_at(const DensityMatrix& rho, int ix1, int ix2, int iy1, int iy2);

// Convenience builders.
DensityMatrix pure_state(const Wavefunction& psi);
DensityMatrix coherent_projector(const PhasePoint& Z, const GridSpec& grid);

// State file schema: {"hbar":real,"grid":{"n":int,"L":real},
//                     "terms":[{"c":[re,im],"ket":{"Z":[[re,im],...]},"bra":{...}}]}
DensityMatrix load_state_json(const std::string& text);
std::string save_state_json(const DensityMatrix& rho);

}  // namespace pk
