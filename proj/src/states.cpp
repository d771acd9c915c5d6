#include "phasekit/states.hpp"

#include <json.hpp>

namespace pk {

cplx coherent_value(cplx z, double x, double hbar) {
  const double q = z.real(), p = z.imag();
  const double g = -(x - q) * (x - q) / (2.0 * hbar);
  const double ph = p * x / hbar;
  return std::pow(PI * hbar, -0.25) * std::exp(g) * cplx(std::cos(ph), std::sin(ph));
}

Wavefunction coherent_state(const PhasePoint& Z, const GridSpec& grid, bool* truncated) {
  require((int)Z.size() == grid.particles, "coherent_state: Z length must equal N");
  bool trunc = false;
  for (size_t k = 0; k < Z.size(); ++k)
    if (std::abs(Z.q(k)) > grid.L - 4.0 * std::sqrt(grid.hbar)) trunc = true;
  if (truncated) *truncated = trunc;

  Wavefunction w;
  w.grid = grid;
  w.coherentZ = Z.z;
  const int n = grid.n;
  if (grid.particles == 1) {
    w.v.resize(n);
    for (int k = 0; k < n; ++k) w.v[k] = coherent_value(Z.z[0], grid.x(k), grid.hbar);
  } else {
    std::vector<cplx> a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a[k] = coherent_value(Z.z[0], grid.x(k), grid.hbar);
      b[k] = coherent_value(Z.z[1], grid.x(k), grid.hbar);
    }
    w.v.resize((size_t)n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w.v[(size_t)i * n + j] = a[i] * b[j];
  }
  return w;
}

cplx overlap_closed_form(const PhasePoint& Za, const PhasePoint& Zb, double hbar) {
  require(Za.size() == Zb.size(), "overlap: length mismatch");
  cplx e = 0;
  for (size_t k = 0; k < Za.size(); ++k) {
    const double aq = Za.q(k), ap = Za.p(k), bq = Zb.q(k), bp = Zb.p(k);
    cplx beta((aq + bq), (bp - ap));
    e += (beta * beta / 4.0 - (aq * aq + bq * bq) / 2.0) / hbar;
  }
  return std::exp(e);
}

cplx inner(const Wavefunction& f, const Wavefunction& g) {
  require(f.v.size() == g.v.size(), "inner: size mismatch");
  Ksum s;
  for (size_t k = 0; k < f.v.size(); ++k) s.add(std::conj(f.v[k]) * g.v[k]);
  double cell = 1;
  for (int k = 0; k < f.grid.particles; ++k) cell *= f.grid.dx();
  return s.get() * cell;
}

namespace {

Wavefunction transpose_axes(const Wavefunction& w) {
  const int n = w.grid.n;
  Wavefunction t = w;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.v[(size_t)i * n + j] = w.v[(size_t)j * n + i];
  if (t.coherentZ.size() == 2) std::swap(t.coherentZ[0], t.coherentZ[1]);
  return t;
}

}  // namespace

DensityMatrix exchange_U(const DensityMatrix& rho, ExchangePair) {
  require(rho.grid.particles == 2, "exchange_U: N = 2 required");
  DensityMatrix r = rho;
  for (auto& t : r.terms) t.bra = transpose_axes(t.bra);
  r.hermitian = false;
  return r;
}

DensityMatrix exchange_V(const DensityMatrix& rho, ExchangePair) {
  require(rho.grid.particles == 2, "exchange_V: N = 2 required");
  DensityMatrix r = rho;
  for (auto& t : r.terms) t.ket = transpose_axes(t.ket);
  r.hermitian = false;
  return r;
}

cplx trace(const DensityMatrix& rho) {
  Ksum s;
  for (auto& t : rho.terms) s.add(t.c * inner(t.bra, t.ket));
  return s.get();
}

cplx trace_product(const DensityMatrix& rho, const DensityMatrix& rho2) {
  require(rho.grid.n == rho2.grid.n && rho.grid.particles == rho2.grid.particles &&
              rho.grid.L == rho2.grid.L,
          "trace_product: grid mismatch");
  Ksum s;
  for (auto& a : rho.terms)
    for (auto& b : rho2.terms) s.add(a.c * b.c * inner(a.bra, b.ket) * inner(b.bra, a.ket));
  return s.get();
}

cplx kernel_at(const DensityMatrix& rho, int ix1, int ix2, int iy1, int iy2) {
  const int n = rho.grid.n;
  Ksum s;
  if (rho.grid.particles == 1) {
    for (auto& t : rho.terms) s.add(t.c * t.ket.v[ix1] * std::conj(t.bra.v[iy1]));
  } else {
    for (auto& t : rho.terms)
      s.add(t.c * t.ket.v[(size_t)ix1 * n + ix2] * std::conj(t.bra.v[(size_t)iy1 * n + iy2]));
  }
  return s.get();
}

DensityMatrix pure_state(const Wavefunction& psi) {
  DensityMatrix r;
  r.grid = psi.grid;
  r.terms.push_back({cplx(1.0), psi, psi});
  r.hermitian = true;
  return r;
}

DensityMatrix coherent_projector(const PhasePoint& Z, const GridSpec& grid) {
  return pure_state(coherent_state(Z, grid));
}

using nlohmann::json;

DensityMatrix load_state_json(const std::string& text) {
  json j = json::parse(text);
  require(j.contains("hbar") && j.contains("grid") && j.contains("terms"),
          "state schema: hbar, grid, terms required");
  double hbar = j["hbar"].get<double>();
  int n = j["grid"]["n"].get<int>();
  double L = j["grid"]["L"].get<double>();
  require(j["terms"].is_array() && !j["terms"].empty(), "state schema: non-empty terms required");
  int N = (int)j["terms"][0]["ket"]["Z"].size();
  GridSpec g(n, L, hbar, N);
  DensityMatrix rho;
  rho.grid = g;
  auto parseZ = [&](const json& spec) {
    PhasePoint Z;
    for (auto& zz : spec.at("Z")) Z.z.emplace_back(zz.at(0).get<double>(), zz.at(1).get<double>());
    require((int)Z.size() == N, "state schema: inconsistent Z lengths");
    return Z;
  };
  for (auto& t : j["terms"]) {
    cplx c(t.at("c").at(0).get<double>(), t.at("c").at(1).get<double>());
    rho.terms.push_back(
        {c, coherent_state(parseZ(t.at("ket")), g), coherent_state(parseZ(t.at("bra")), g)});
  }
  bool herm = true;
  for (auto& t : rho.terms)
    if (t.ket.coherentZ != t.bra.coherentZ || t.c.imag() != 0 || t.c.real() < 0) herm = false;
  rho.hermitian = herm;
  rho.normalized = std::abs(trace(rho) - 1.0) < 1e-10;
  return rho;
}

std::string save_state_json(const DensityMatrix& rho) {
  json j;
  j["hbar"] = rho.grid.hbar;
  j["grid"] = {{"n", rho.grid.n}, {"L", rho.grid.L}};
  j["terms"] = json::array();
  for (auto& t : rho.terms) {
    require(!t.ket.coherentZ.empty() && !t.bra.coherentZ.empty(),
            "save_state_json: only coherent mixtures are serializable");
    json zk = json::array(), zb = json::array();
    for (auto& z : t.ket.coherentZ) zk.push_back({z.real(), z.imag()});
    for (auto& z : t.bra.coherentZ) zb.push_back({z.real(), z.imag()});
    j["terms"].push_back(
        {{"c", {t.c.real(), t.c.imag()}}, {"ket", {{"Z", zk}}}, {"bra", {{"Z", zb}}}});
  }
  return j.dump(2);
}

}  // namespace pk
