#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/symplectic.hpp"

using namespace pk;

TEST_CASE("exact scalar arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK_THROWS(Rat(1, 0));

  // (1 + sqrt2)^2 = 3 + 2 sqrt2
  Ext a{Rat(1), Rat(1)};
  CHECK(a * a == Ext{Rat(3), Rat(2)});
  // (1/sqrt2)^2 = 1/2
  ExC is2 = exc_inv_sqrt2(1);
  CHECK(is2 * is2 == ExC{Ext{Rat(1, 2), Rat(0)}, Ext{}});
  // i * i = -1
  CHECK(exc_i(1) * exc_i(1) == exc_int(-1));
  CHECK(exc_int(5).str() == "5");
  CHECK(exc_i(-1).str() == "-1*i");
}

TEST_CASE("builtin classification and determinants") {
  struct E {
    const char* l;
    SympClass c;
    long long d;
  };
  const E tab[] = {{"S_c_H", SympClass::anticanonical, -1},
                   {"S_c_W", SympClass::canonical, 1},
                   {"R_quarter", SympClass::canonical, 1},
                   {"S_doubled", SympClass::canonical, 1},
                   {"U_complex", SympClass::anticanonical, -1},
                   {"V_complex", SympClass::anticanonical, -1}};
  for (auto& e : tab) {
    LinearPhaseMap S = builtin(e.l);
    CHECK(classify(S) == e.c);
    CHECK(det(S) == exc_int(e.d));
  }
  CHECK_THROWS(builtin("nope"));
}

TEST_CASE("identity is canonical, scaling is neither") {
  LinearPhaseMap I;
  I.dim = 2;
  I.m = {exc_int(1), exc_int(0), exc_int(0), exc_int(1)};
  I.jpairs = {{0, 1}};
  CHECK(classify(I) == SympClass::canonical);

  LinearPhaseMap D = I;
  D.m[0] = exc_int(2);
  CHECK(classify(D) == SympClass::neither);

  LinearPhaseMap no_pairs = I;
  no_pairs.jpairs.clear();
  CHECK_THROWS(classify(no_pairs));
}

TEST_CASE("composition multiplies classes and determinants") {
  auto sgn = [](SympClass c) { return c == SympClass::canonical ? 1 : -1; };
  for (auto a : {"S_c_H", "S_c_W", "U_complex", "V_complex"})
    for (auto b : {"S_c_H", "S_c_W", "U_complex", "V_complex"}) {
      LinearPhaseMap A = builtin(a), B = builtin(b), C = matmul(A, B);
      REQUIRE(classify(C) != SympClass::neither);
      CHECK(sgn(classify(C)) == sgn(classify(A)) * sgn(classify(B)));
      CHECK(det(C) == det(A) * det(B));
    }
  // mixed-dimension products are rejected
  CHECK_THROWS(matmul(builtin("S_c_H"), builtin("R_quarter")));
}

TEST_CASE("transpose and matmul agree with exact algebra") {
  LinearPhaseMap S = builtin("R_quarter");
  // orthogonal blocks: S^T S = identity
  LinearPhaseMap P = matmul(transpose(S), S);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(P.at(i, j) == (i == j ? exc_int(1) : exc_int(0)));
}

TEST_CASE("substitution patterns") {
  auto w = substitute(builtin("S_doubled"), {1, 2, 3, 4, 5, 6, 7, 8});
  std::vector<cplx> expect = {1, 2, 3, 4, 8, -7, 6, -5};
  for (int k = 0; k < 8; ++k) CHECK(std::abs(w[k] - expect[k]) == 0.0);

  auto u = substitute(builtin("S_c_H"), {cplx(2, 0), cplx(0, 1)});
  // [[0,-i],[i,0]] (q,p) -> (-i p, i q)
  CHECK(std::abs(u[0] - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(u[1] - cplx(0, 2)) < 1e-15);
  CHECK_THROWS(substitute(builtin("S_c_H"), {cplx(1, 0)}));
}
