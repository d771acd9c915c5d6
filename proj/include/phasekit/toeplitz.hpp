#pragma once
// Diagonal and off-diagonal Toeplitz (anti-Wick) quantization of Gaussian
// symbol mixtures, exchange lemmas at operator-kernel level, Husimi coupling.
#include <functional>
#include <string>

#include "phasekit/gauss.hpp"
#include "phasekit/report.hpp"
#include "phasekit/rng.hpp"
#include "phasekit/states.hpp"

namespace pk {

// h(Z) = sum_k c_k e^{-alpha_k |Z - Z0k|^2 / hbar}; carries its entire
// continuation at independent (Z, Zbar) arguments.
struct GaussianSymbol {
  double hbar = 1.0;
  struct Term {
    cplx c;
    std::vector<cplx> Z0;
    double alpha;
  };
  std::vector<Term> terms;

  int dim() const { return terms.empty() ? 0 : (int)terms[0].Z0.size(); }
  cplx value(const PhasePoint& Z) const;
  // Continuation: |Z-Z0|^2 -> (Zbar - conj(Z0)).(Z - Z0) with independent Zbar.
  cplx continued(const std::vector<cplx>& Z, const std::vector<cplx>& Zbar) const;
  cplx integral() const;  // Int h dZ over R^{2 dim}, closed form
};

// Symbol file schema: {"hbar":real,"terms":[{"c":[re,im],"Z0":[[re,im],...],"alpha":real}]}
GaussianSymbol load_symbol_json(const std::string& text);
std::string save_symbol_json(const GaussianSymbol& h);

// d = 1 kernel as a finite coherent dyad sum: K(x,y) = sum c psi_zket(x) conj(psi_zbra(y)).
struct CoherentKernel {
  double hbar = 1.0;
  struct Term {
    cplx c;
    cplx zket, zbra;
  };
  std::vector<Term> terms;
  cplx eval(double x, double y) const;
  cplx trace() const;  // closed form via the overlap oracle
};

cplx psi_value(cplx z, double x, double hbar);          // 1D coherent wavefunction
cplx overlap1(cplx za, cplx zb, double hbar);           // <psi_za | psi_zb>

struct LazyKernel {
  std::function<cplx(double, double)> K;
  std::string provenance;
};

// Phase-space quadrature box/nodes chosen from the symbol's decay (d = 1).
struct QuadNodes {
  std::vector<cplx> z;
  std::vector<double> w;  // cell weights, pruned at 1e-12 of the running max of |h|
};
QuadNodes quadrature_nodes(const GaussianSymbol& h, double sample_extent);

// rho = (2 pi hbar)^{-1} Int h(z) |psi_{s1 z}><psi_{s2 z}| dz with the sign
// pattern of `kind` (diag: (+,+), off_u: (+,-), off_v: (-,+)).
CoherentKernel toeplitz_quantize_quad(const GaussianSymbol& h, KernelKind kind = KernelKind::diag,
                                      double sample_extent = 3.0);
// Closed-form Gaussian kernel for the same operator (the oracle route).
LazyKernel toeplitz_closed_kernel(const GaussianSymbol& h, KernelKind kind = KernelKind::diag);

// Continued, weighted symbol whose (formal) quantization reproduces U/V/UV of
// Toeplitz(h): U -> e^{+(q^2+p^2)/hbar} h(z, -zbar), V -> e^{+(q^2+p^2)/hbar} h(-z, zbar),
// UV -> h(-z, -zbar) (no weight).
enum class SymbolExchange { U, V, UV };
std::vector<QuadExp> symbol_exchange(const GaussianSymbol& h, SymbolExchange which);
LazyKernel formal_quantize(const std::vector<QuadExp>& sym, double hbar,
                           KernelKind kind = KernelKind::diag, const char* provenance = "formal");

// Verifications (all d = 1 relative-coordinate picture).
Report verify_quantize_gate(const GaussianSymbol& h, int npairs, uint64_t seed,
                            double tolerance = 1e-6);
Report verify_trace_rule(const GaussianSymbol& h, double tolerance = 1e-6);
Report verify_toeplitz_exchange(const GaussianSymbol& h, SymbolExchange which, int npairs,
                                uint64_t seed, double tolerance = 1e-5);
Report verify_offdiag_lemma(const GaussianSymbol& h, int npairs, uint64_t seed,
                            double tolerance = 1e-6);
Report verify_bargmann(double hbar, int nsamples, uint64_t seed, double tolerance = 1e-10);
Report verify_diag_offdiag_crosscheck(const GaussianSymbol& h, int npairs, uint64_t seed,
                                      double tolerance = 1e-5);
// Positive symbol -> positive semidefinite sampled kernel (64-pt Galerkin matrix).
Report verify_positivity(const GaussianSymbol& h, double tolerance = 1e-9);

// N = 2: Husimi/Toeplitz coupling Int W~[rho] h' dZ = trace(rho * Toeplitz(h')),
// left by a husimi phase quadrature, right by quadrature quantization nodes
// (different grids, so agreement is informative). Requires coherent-product terms.
Report coupling_check(const DensityMatrix& rho, const GaussianSymbol& hp, double tolerance = 1e-5);

}  // namespace pk
