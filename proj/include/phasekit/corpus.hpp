#pragma once
// Built-in verification corpus: states and symbols used by every suite.
#include "phasekit/states.hpp"
#include "phasekit/toeplitz.hpp"

namespace pk {

struct CorpusState {
  std::string name;
  DensityMatrix rho;
  bool bosonic = false;
  bool fermionic = false;
  bool coherent_terms = false;  // every term a coherent product (rotated paths usable)
};

struct CorpusSymbol {
  std::string name;
  GaussianSymbol h;
};

std::vector<CorpusState> corpus_states(const GridSpec& g);
std::vector<CorpusSymbol> corpus_symbols(double hbar);  // d = 1
GaussianSymbol corpus_symbol_n2(double hbar);
std::string corpus_listing(const GridSpec& g);

}  // namespace pk
