// phasekit: phase-space symbols of few-particle density matrices.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "phasekit/corpus.hpp"
#include "phasekit/husimi.hpp"
#include "phasekit/statistics.hpp"
#include "phasekit/suites.hpp"
#include "phasekit/symplectic.hpp"
#include "phasekit/toeplitz.hpp"
#include "phasekit/wigner.hpp"

namespace {

constexpr int kExitFail = 1, kExitUsage = 2, kExitTruncation = 3;

std::string slurp(const std::string& path, bool* ok) {
  std::ifstream in(path, std::ios::binary);
  *ok = in.good();
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return out.good();
}

int cmd_verify(const std::string& suite, const pk::SuiteConfig& cfg, const std::string& json_path,
               bool list_corpus) {
  if (list_corpus) {
    pk::GridSpec g(cfg.n, cfg.L, cfg.hbar, 2);
    std::cout << pk::corpus_listing(g) << "\n";
    return 0;
  }
  if (cfg.L * cfg.L / cfg.hbar < 16.0) {
    std::cerr << "error: grid truncation unsafe, need L^2/hbar >= 16 (got "
              << cfg.L * cfg.L / cfg.hbar << ")\n";
    return kExitTruncation;
  }
  std::vector<pk::Report> reports;
  try {
    reports = pk::run_suite(suite, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  int failed = 0;
  for (auto& r : reports) {
    if (!r.pass) ++failed;
    std::printf("%-4s %-52s %-3s max_rel_err=%.3e tol=%.3e samples=%d\n",
                r.pass ? "ok" : "FAIL", r.lemma.c_str(), r.which.c_str(), r.max_rel_err,
                r.tolerance, r.samples);
  }
  std::printf("%zu checks, %d failed\n", reports.size(), failed);
  if (!json_path.empty()) {
    std::string text = pk::reports_to_json(reports) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else if (!spill(json_path, text)) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kExitUsage;
    }
  }
  return failed ? kExitFail : 0;
}

void csv_row(std::string& out, const double* cols, int ncols) {
  char buf[64];
  for (int k = 0; k < ncols; ++k) {
    std::snprintf(buf, sizeof(buf), "%.17g", cols[k]);
    out += buf;
    out += (k + 1 < ncols) ? ',' : '\n';
  }
}

int cmd_compute(const std::string& kind, const std::string& state_file,
                const std::string& out_file) {
  bool ok = false;
  std::string text = slurp(state_file, &ok);
  if (!ok) {
    std::cerr << "error: cannot read " << state_file << "\n";
    return kExitUsage;
  }
  pk::DensityMatrix rho;
  try {
    rho = pk::load_state_json(text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const pk::GridSpec& g = rho.grid;
  std::string csv;

  if (kind == "husimi") {
    double qmax = pk::sample_qmax(g), pmax = pk::sample_pmax(g);
    if (g.particles == 1) {
      csv = "q1,p1,w\n";
      const int m = 64;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          double q = -qmax + (i + 0.5) * 2 * qmax / m, p = -pmax + (j + 0.5) * 2 * pmax / m;
          double cols[3] = {q, p, pk::husimi(rho, pk::PhasePoint(pk::cplx(q, p))).real()};
          csv_row(csv, cols, 3);
        }
    } else {
      csv = "q1,p1,q2,p2,w\n";
      const int m = 10;
      auto node = [&](int k, double half) { return -half + (k + 0.5) * 2 * half / m; };
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c)
            for (int d = 0; d < m; ++d) {
              double q1 = node(a, qmax), p1 = node(b, pmax), q2 = node(c, qmax), p2 = node(d, pmax);
              pk::PhasePoint Z(pk::cplx(q1, p1), pk::cplx(q2, p2));
              double cols[5] = {q1, p1, q2, p2, pk::husimi(rho, Z).real()};
              csv_row(csv, cols, 5);
            }
    }
  } else if (kind == "wigner") {
    if (g.particles == 2 && g.n > 32) {
      std::cerr << "error: full N=2 Wigner field needs n <= 32 (got n=" << g.n << ")\n";
      return kExitUsage;
    }
    pk::WignerField W = pk::wigner(rho);
    if (g.particles == 1) {
      csv = "q1,p1,w\n";
      for (int j = 0; j < g.n; ++j)
        for (int m = 0; m < g.n; ++m) {
          double cols[3] = {g.x(j), g.xi_half(m), W.at1(j, m).real()};
          csv_row(csv, cols, 3);
        }
    } else {
      csv = "q1,p1,q2,p2,w\n";
      for (int j1 = 0; j1 < g.n; ++j1)
        for (int m1 = 0; m1 < g.n; ++m1)
          for (int j2 = 0; j2 < g.n; ++j2)
            for (int m2 = 0; m2 < g.n; ++m2) {
              double cols[5] = {g.x(j1), g.xi_half(m1), g.x(j2), g.xi_half(m2),
                                W.at2(j1, j2, m1, m2).real()};
              csv_row(csv, cols, 5);
            }
    }
  } else {
    std::cerr << "error: unknown compute kind '" << kind << "' (husimi|wigner)\n";
    return kExitUsage;
  }

  if (!spill(out_file, csv)) {
    std::cerr << "error: cannot write " << out_file << "\n";
    return kExitUsage;
  }
  return 0;
}

int cmd_symmetrize(const std::string& symbol_file, const std::string& kind,
                   const std::string& out_file) {
  if (kind != "bosonic" && kind != "fermionic") {
    std::cerr << "error: kind must be bosonic or fermionic\n";
    return kExitUsage;
  }
  bool ok = false;
  std::string text = slurp(symbol_file, &ok);
  if (!ok) {
    std::cerr << "error: cannot read " << symbol_file << "\n";
    return kExitUsage;
  }
  try {
    pk::GaussianSymbol h = pk::load_symbol_json(text);
    if (h.dim() != 1) {
      std::cerr << "error: symmetrize needs a 1-mode symbol\n";
      return kExitUsage;
    }
    pk::Statistics st = (kind == "bosonic") ? pk::Statistics::bosonic : pk::Statistics::fermionic;
    pk::CoherentKernel H = pk::toeplitz_quantize_quad(h);
    pk::CoherentKernel S = pk::symmetrize(H, st);
    pk::cplx tr = S.trace();
    if (std::abs(tr) < 1e-12 * std::max(1.0, std::abs(H.trace()))) {
      std::cerr << "error: degenerate trace after " << kind << " symmetrization (|tr| = "
                << std::abs(tr) << ")\n";
      return kExitFail;
    }

    pk::StateCheck chk = pk::check_state(S, st);

    double cmax = 0;
    for (auto& t : S.terms) cmax = std::max({cmax, std::abs(t.zket), std::abs(t.zbra)});
    pk::GridSpec g(64, 8.0 * std::sqrt(h.hbar) + cmax, h.hbar, 1);
    pk::DensityMatrix rho;
    rho.grid = g;
    for (auto& t : S.terms)
      rho.terms.push_back({t.c / tr, pk::coherent_state(pk::PhasePoint(t.zket), g),
                           pk::coherent_state(pk::PhasePoint(t.zbra), g)});
    if (!spill(out_file, pk::save_state_json(rho) + "\n")) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return kExitUsage;
    }

    nlohmann::json j;
    j["kind"] = kind;
    j["terms"] = (int)S.terms.size();
    j["trace_raw"] = {tr.real(), tr.imag()};
    j["trace_normalized"] = 1.0;
    j["hermitian"] = chk.hermitian;
    j["positive"] = chk.positive;
    j["min_eig"] = chk.min_eig;
    j["max_eig"] = chk.max_eig;
    j["sym_residual_U"] = chk.sym_residual_U;
    j["sym_residual_V"] = chk.sym_residual_V;
    std::cout << j.dump(2) << "\n";
    bool pass = chk.hermitian && chk.positive && chk.sym_residual_U <= 1e-10 &&
                chk.sym_residual_V <= 1e-10;
    return pass ? 0 : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int cmd_matrices() {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& label : pk::builtin_labels()) {
    pk::LinearPhaseMap S = pk::builtin(label);
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < S.dim; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < S.dim; ++j) row.push_back(S.at(i, j).str());
      rows.push_back(row);
    }
    arr.push_back({{"label", label},
                   {"dim", S.dim},
                   {"ordering", S.ordering},
                   {"matrix", rows},
                   {"class", pk::classify_name(pk::classify(S))},
                   {"det", pk::det(S).str()}});
  }
  std::cout << arr.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-space symbols of few-particle density matrices"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites over the built-in corpus");
  std::string suite = "all", json_path;
  pk::SuiteConfig cfg;
  bool list_corpus = false;
  verify->add_option("--suite", suite,
                     "all|husimi|wigner|toeplitz|offdiag|statistics|symplectic");
  verify->add_option("--hbar", cfg.hbar, "semiclassical parameter")->check(CLI::PositiveNumber);
  verify->add_option("--grid-n", cfg.n, "grid points per axis (power of two)");
  verify->add_option("--grid-L", cfg.L, "grid half-width")->check(CLI::PositiveNumber);
  verify->add_option("--samples", cfg.samples, "phase-space samples per lemma")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--json", json_path, "write the report array here ('-' for stdout)");
  verify->add_option("--tolerance-scale", cfg.tolerance_scale, "multiply all tolerances")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--list-corpus", list_corpus, "print the corpus and exit");

  // compute
  auto* compute = app.add_subcommand("compute", "sample husimi/wigner of a state file to CSV");
  std::string ckind, state_file, cout_file;
  compute->add_option("kind", ckind, "husimi|wigner")->required();
  compute->add_option("state-file", state_file, "input state JSON")->required();
  compute->add_option("out-file", cout_file, "output CSV")->required();

  // symmetrize
  auto* symm = app.add_subcommand("symmetrize", "quantize a symbol and project onto statistics");
  std::string symbol_file, skind, sout_file;
  symm->add_option("symbol-file", symbol_file, "input symbol JSON")->required();
  symm->add_option("kind", skind, "bosonic|fermionic")->required();
  symm->add_option("out-file", sout_file, "output state JSON")->required();

  // matrices
  auto* matrices = app.add_subcommand("matrices", "print the built-in linear phase maps as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (!pk::is_pow2(cfg.n)) {
        std::cerr << "error: --grid-n must be a power of two\n";
        return kExitUsage;
      }
      return cmd_verify(suite, cfg, json_path, list_corpus);
    }
    if (compute->parsed()) return cmd_compute(ckind, state_file, cout_file);
    if (symm->parsed()) return cmd_symmetrize(symbol_file, skind, sout_file);
    if (matrices->parsed()) return cmd_matrices();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
