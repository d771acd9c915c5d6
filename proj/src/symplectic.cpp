#include "phasekit/symplectic.hpp"

#include <numeric>

namespace pk {

Rat::Rat(long long nn, long long dd) : n(nn), d(dd) {
  require(d != 0, "Rat: zero denominator");
  if (d < 0) { n = -n; d = -d; }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) { n /= g; d /= g; }
}

Rat Rat::operator+(Rat o) const { return Rat(n * o.d + o.n * d, d * o.d); }
Rat Rat::operator-(Rat o) const { return Rat(n * o.d - o.n * d, d * o.d); }
Rat Rat::operator*(Rat o) const { return Rat(n * o.n, d * o.d); }

ExC exc_int(long long v) { return ExC{Ext{Rat(v), Rat(0)}, Ext{}}; }
ExC exc_i(long long v) { return ExC{Ext{}, Ext{Rat(v), Rat(0)}}; }
ExC exc_inv_sqrt2(long long v) { return ExC{Ext{Rat(0), Rat(v, 2)}, Ext{}}; }  // v/sqrt2 = v*sqrt2/2

namespace {

std::string ext_str(const Ext& e) {
  auto rat_str = [](Rat r) {
    std::string s = std::to_string(r.n);
    if (r.d != 1) s += "/" + std::to_string(r.d);
    return s;
  };
  if (e.b == Rat(0)) return rat_str(e.a);
  std::string s;
  if (!(e.a == Rat(0))) s = rat_str(e.a) + (e.b.n > 0 ? "+" : "");
  s += rat_str(e.b) + "*sqrt2";
  return s;
}

}  // namespace

std::string ExC::str() const {
  bool has_re = !(re == Ext{}), has_im = !(im == Ext{});
  if (!has_re && !has_im) return "0";
  std::string s;
  if (has_re) s = ext_str(re);
  if (has_im) {
    if (has_re && im.a.n >= 0 && im.b.n >= 0) s += "+";
    s += ext_str(im) + "*i";
  }
  return s;
}

LinearPhaseMap matmul(const LinearPhaseMap& A, const LinearPhaseMap& B) {
  require(A.dim == B.dim, "matmul: dimension mismatch");
  LinearPhaseMap C;
  C.dim = A.dim;
  C.m.assign((size_t)A.dim * A.dim, ExC{});
  C.ordering = A.ordering;
  C.jpairs = A.jpairs;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      ExC s{};
      for (int k = 0; k < A.dim; ++k) s = s + A.at(i, k) * B.at(k, j);
      C.at(i, j) = s;
    }
  return C;
}

LinearPhaseMap transpose(const LinearPhaseMap& A) {
  LinearPhaseMap T = A;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) T.at(i, j) = A.at(j, i);
  return T;
}

namespace {

ExC det_rec(const std::vector<ExC>& m, int dim) {
  if (dim == 1) return m[0];
  ExC s{};
  for (int c = 0; c < dim; ++c) {
    if (m[c].is_zero()) continue;
    std::vector<ExC> minor;
    minor.reserve((size_t)(dim - 1) * (dim - 1));
    for (int i = 1; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (j != c) minor.push_back(m[(size_t)i * dim + j]);
    ExC t = m[c] * det_rec(minor, dim - 1);
    s = (c % 2 == 0) ? s + t : s - t;
  }
  return s;
}

LinearPhaseMap j_form(const LinearPhaseMap& S) {
  LinearPhaseMap J;
  J.dim = S.dim;
  J.m.assign((size_t)S.dim * S.dim, ExC{});
  require(!S.jpairs.empty(), "classify: coordinate pairing missing");
  for (auto& [a, b] : S.jpairs) {
    J.at(a, b) = exc_int(1);
    J.at(b, a) = exc_int(-1);
  }
  return J;
}

}  // namespace

ExC det(const LinearPhaseMap& A) { return det_rec(A.m, A.dim); }

SympClass classify(const LinearPhaseMap& S) {
  require(S.dim % 2 == 0, "classify: even dimension required");
  LinearPhaseMap J = j_form(S);
  LinearPhaseMap F = matmul(matmul(transpose(S), J), S);
  bool can = true, anti = true;
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j) {
      if (!(F.at(i, j) == J.at(i, j))) can = false;
      if (!(F.at(i, j) == -J.at(i, j))) anti = false;
    }
  if (can) return SympClass::canonical;
  if (anti) return SympClass::anticanonical;
  return SympClass::neither;
}

std::string classify_name(SympClass c) {
  switch (c) {
    case SympClass::canonical: return "canonical";
    case SympClass::anticanonical: return "anticanonical";
    default: return "neither";
  }
}

std::vector<std::string> builtin_labels() {
  return {"S_c_H", "S_c_W", "R_quarter", "S_doubled", "U_complex", "V_complex"};
}

LinearPhaseMap builtin(const std::string& label) {
  LinearPhaseMap S;
  S.label = label;
  auto two_by_two = [&](ExC a, ExC b, ExC c, ExC d) {
    S.dim = 2;
    S.m = {a, b, c, d};
    S.ordering = "(q, p)";
    S.jpairs = {{0, 1}};
  };
  if (label == "S_c_H") {
    two_by_two(exc_int(0), exc_i(-1), exc_i(1), exc_int(0));
  } else if (label == "S_c_W") {
    two_by_two(exc_int(0), exc_i(1), exc_i(1), exc_int(0));
  } else if (label == "U_complex") {
    two_by_two(exc_int(0), exc_i(1), exc_i(-1), exc_int(0));
  } else if (label == "V_complex") {
    two_by_two(exc_int(0), exc_i(-1), exc_i(1), exc_int(0));
  } else if (label == "R_quarter") {
    // The +-45 degree rotation applied identically to each coordinate pair
    // (a_i, a_j) -> ((a_i - a_j)/sqrt2, (a_i + a_j)/sqrt2) for a = q, xi, p, x.
    S.dim = 8;
    S.m.assign(64, ExC{});
    S.ordering = "(q_i, q_j, xi_i, xi_j, p_i, p_j, x_i, x_j)";
    S.jpairs = {{0, 2}, {1, 3}, {4, 6}, {5, 7}};
    for (int blk = 0; blk < 4; ++blk) {
      int o = 2 * blk;
      S.at(o, o) = exc_inv_sqrt2(1);
      S.at(o, o + 1) = exc_inv_sqrt2(-1);
      S.at(o + 1, o) = exc_inv_sqrt2(1);
      S.at(o + 1, o + 1) = exc_inv_sqrt2(1);
    }
  } else if (label == "S_doubled") {
    // Identity on the plus block; on (q_-, xi_-, p_-, x_-) the signed permutation
    // (q_-, xi_-, p_-, x_-) -> (x_-, -p_-, xi_-, -q_-).
    S.dim = 8;
    S.m.assign(64, ExC{});
    S.ordering = "(q_+, xi_+, p_+, x_+, q_-, xi_-, p_-, x_-)";
    S.jpairs = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    for (int i = 0; i < 4; ++i) S.at(i, i) = exc_int(1);
    S.at(4, 7) = exc_int(1);
    S.at(5, 6) = exc_int(-1);
    S.at(6, 5) = exc_int(1);
    S.at(7, 4) = exc_int(-1);
  } else {
    throw std::invalid_argument("builtin: unknown label " + label);
  }
  return S;
}

std::vector<cplx> substitute(const LinearPhaseMap& S, const std::vector<cplx>& v) {
  require((int)v.size() == S.dim, "substitute: dimension mismatch");
  std::vector<cplx> out(S.dim, cplx(0));
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j) out[i] += S.at(i, j).to_cplx() * v[j];
  return out;
}

}  // namespace pk
