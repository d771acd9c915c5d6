#pragma once
// Linear phase maps with exact arithmetic over Q(sqrt2) + i Q(sqrt2):
// classification (canonical / anticanonical / neither), determinants,
// substitution action. Entries are exact; no tolerances involved.
#include <cstdint>
#include <string>
#include <vector>

#include "phasekit/core.hpp"

namespace pk {

// Exact rational with small numerators; enough for +-1, +-1/2, +-1/sqrt2 algebra.
struct Rat {
  long long n = 0, d = 1;
  Rat() = default;
  Rat(long long nn, long long dd = 1);
  Rat operator+(Rat o) const;
  Rat operator-(Rat o) const;
  Rat operator*(Rat o) const;
  Rat operator-() const { return Rat(-n, d); }
  bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
  double to_double() const { return (double)n / (double)d; }
};

// a + b*sqrt2
struct Ext {
  Rat a, b;
  Ext operator+(const Ext& o) const { return {a + o.a, b + o.b}; }
  Ext operator-(const Ext& o) const { return {a - o.a, b - o.b}; }
  Ext operator*(const Ext& o) const {
    return {a * o.a + Rat(2) * (b * o.b), a * o.b + b * o.a};
  }
  Ext operator-() const { return {-a, -b}; }
  bool operator==(const Ext& o) const { return a == o.a && b == o.b; }
  double to_double() const { return a.to_double() + b.to_double() * std::sqrt(2.0); }
};

struct ExC {
  Ext re, im;
  ExC operator+(const ExC& o) const { return {re + o.re, im + o.im}; }
  ExC operator-(const ExC& o) const { return {re - o.re, im - o.im}; }
  ExC operator*(const ExC& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ExC operator-() const { return {-re, -im}; }
  bool operator==(const ExC& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return *this == ExC{}; }
  cplx to_cplx() const { return {re.to_double(), im.to_double()}; }
  std::string str() const;
};

ExC exc_int(long long v);
ExC exc_i(long long v);        // v * i
ExC exc_inv_sqrt2(long long v);  // v / sqrt2

enum class SympClass { canonical, anticanonical, neither };

struct LinearPhaseMap {
  int dim = 0;
  std::vector<ExC> m;  // row-major
  std::string label = "custom";
  std::string ordering;
  std::vector<std::pair<int, int>> jpairs;  // symplectic pairing of coordinates
  ExC& at(int i, int j) { return m[(size_t)i * dim + j]; }
  const ExC& at(int i, int j) const { return m[(size_t)i * dim + j]; }
};

LinearPhaseMap matmul(const LinearPhaseMap& A, const LinearPhaseMap& B);
LinearPhaseMap transpose(const LinearPhaseMap& A);
ExC det(const LinearPhaseMap& A);
SympClass classify(const LinearPhaseMap& S);
std::string classify_name(SympClass c);

// Builtins: S_c_H, S_c_W, R_quarter, S_doubled, U_complex, V_complex.
LinearPhaseMap builtin(const std::string& label);
std::vector<std::string> builtin_labels();

std::vector<cplx> substitute(const LinearPhaseMap& S, const std::vector<cplx>& v);

}  // namespace pk
