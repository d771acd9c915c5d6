#include "phasekit/corpus.hpp"

#include <json.hpp>

namespace pk {

namespace {

// Centers scale with sqrt(hbar) so the corpus stays inside the trusted box at any hbar.
cplx zc(double q, double p, double hbar) {
  double s = std::sqrt(hbar);
  return cplx(q * s, p * s);
}

DensityMatrix sym_pair(const GridSpec& g, cplx Z1, cplx Z2, double sign) {
  Wavefunction A = coherent_state(PhasePoint(Z1, Z2), g);
  Wavefunction B = coherent_state(PhasePoint(Z2, Z1), g);
  Wavefunction s = A;
  for (size_t k = 0; k < s.v.size(); ++k) s.v[k] = A.v[k] + sign * B.v[k];
  s.coherentZ.clear();  // a sum of products is not a coherent product
  double nrm = std::sqrt(inner(s, s).real());
  for (auto& c : s.v) c /= nrm;
  DensityMatrix rho = pure_state(s);
  rho.normalized = true;
  return rho;
}

}  // namespace

std::vector<CorpusState> corpus_states(const GridSpec& g) {
  const double h = g.hbar;
  cplx Z1 = zc(0.6, 0.4, h), Z2 = zc(-0.5, 0.7, h);
  std::vector<CorpusState> out;

  {
    CorpusState s;
    s.name = "coherent-ground";
    s.rho = coherent_projector(PhasePoint(cplx(0), cplx(0)), g);
    s.rho.normalized = true;
    s.bosonic = true;  // symmetric product
    s.coherent_terms = true;
    out.push_back(std::move(s));
  }
  {
    CorpusState s;
    s.name = "coherent-generic";
    s.rho = coherent_projector(PhasePoint(Z1, Z2), g);
    s.rho.normalized = true;
    s.coherent_terms = true;
    out.push_back(std::move(s));
  }
  {
    CorpusState s;
    s.name = "rank3-mixture";
    DensityMatrix rho;
    rho.grid = g;
    struct P {
      double w;
      cplx a, b;
    };
    std::vector<P> parts = {{0.5, zc(0.3, 0.2, h), zc(-0.1, 0.4, h)},
                            {0.3, zc(-0.4, -0.3, h), zc(0.2, 0.1, h)},
                            {0.2, zc(0.1, 0.5, h), zc(0.3, -0.2, h)}};
    for (auto& p : parts) {
      Wavefunction w = coherent_state(PhasePoint(p.a, p.b), g);
      rho.terms.push_back({cplx(p.w), w, w});
    }
    rho.hermitian = true;
    rho.normalized = true;
    s.rho = std::move(rho);
    s.coherent_terms = true;
    out.push_back(std::move(s));
  }
  {
    CorpusState s;
    s.name = "symmetrized-pair";
    s.rho = sym_pair(g, Z1, Z2, +1.0);
    s.bosonic = true;
    out.push_back(std::move(s));
  }
  {
    CorpusState s;
    s.name = "antisymmetrized-pair";
    s.rho = sym_pair(g, Z1, Z2, -1.0);
    s.fermionic = true;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CorpusSymbol> corpus_symbols(double hbar) {
  const double s = std::sqrt(hbar);
  std::vector<CorpusSymbol> out;
  out.push_back({"unit-gaussian", {hbar, {{cplx(1.0), {cplx(0)}, 1.0}}}});
  out.push_back({"offset-gaussian", {hbar, {{cplx(1.0), {cplx(0.5 * s, -0.4 * s)}, 0.7}}}});
  out.push_back({"two-term-mixture",
                 {hbar,
                  {{cplx(1.0), {cplx(0)}, 1.0}, {cplx(0.5), {cplx(0.6 * s, 0.2 * s)}, 1.5}}}});
  return out;
}

GaussianSymbol corpus_symbol_n2(double hbar) {
  const double s = std::sqrt(hbar);
  return {hbar, {{cplx(1.0), {cplx(0.2 * s, 0.1 * s), cplx(-0.1 * s, 0.2 * s)}, 1.0}}};
}

std::string corpus_listing(const GridSpec& g) {
  nlohmann::json j;
  j["states"] = nlohmann::json::array();
  for (auto& s : corpus_states(g)) {
    nlohmann::json e;
    e["name"] = s.name;
    e["terms"] = (int)s.rho.terms.size();
    e["bosonic"] = s.bosonic;
    e["fermionic"] = s.fermionic;
    e["trace"] = trace(s.rho).real();
    j["states"].push_back(e);
  }
  j["symbols"] = nlohmann::json::array();
  for (auto& s : corpus_symbols(g.hbar)) {
    nlohmann::json e;
    e["name"] = s.name;
    e["terms"] = (int)s.h.terms.size();
    j["symbols"].push_back(e);
  }
  j["symbols"].push_back({{"name", "pair-gaussian-n2"}, {"terms", 1}});
  return j.dump(2);
}

}  // namespace pk
