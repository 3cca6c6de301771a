#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modp/errors.hpp"
#include "modp/linalg.hpp"

using namespace modp;

TEST_CASE("rref and rank") {
  FpMatrix a(3, 3);
  a << 1, 2, 3, 2, 4, 1, 3, 1, 4;
  CHECK(rank(a, 5) == 1);  // row2 = 2 row1 and row3 = 3 row1 mod 5
  CHECK(rank(a, 7) == 3);
  FpMatrix b(3, 3);
  b << 1, 2, 3, 0, 0, 1, 1, 2, 4;
  Rref r = rref(b, 5);
  CHECK(r.pivots == std::vector<Index>{0, 2});
}

TEST_CASE("nullspace, inverse, solve on random matrices") {
  std::mt19937_64 rng(7);
  for (i64 p : {5, 7, 13})
    for (int trial = 0; trial < 20; ++trial) {
      Index m = 1 + rng() % 9, n = 1 + rng() % 9;
      FpMatrix a = random_matrix(m, n, p, rng);
      if (trial % 3 == 0 && m > 1) a.row(0) = reduced(a.row(1) * 2, p);
      FpMatrix ns = nullspace(a, p);
      CHECK(ns.cols() + rank(a, p) == n);
      CHECK(mul(a, ns, p).isZero());
      FpMatrix x = random_matrix(n, 2, p, rng);
      FpMatrix b = mul(a, x, p);
      auto y = solve(a, b, p);
      REQUIRE(y);
      CHECK(mul(a, *y, p) == b);
      if (m == n && rank(a, p) == n) CHECK(mul(a, inverse(a, p), p) == identity(n));
    }
  FpMatrix z = FpMatrix::Zero(2, 2);
  CHECK_THROWS_AS(inverse(z, 5), DomainError);
}

TEST_CASE("subspace") {
  std::mt19937_64 rng(11);
  const i64 p = 7;
  FpMatrix gens = random_matrix(12, 5, p, rng);
  for (auto rule : {Subspace::Pivot::First, Subspace::Pivot::Last}) {
    Subspace s(12, p, rule);
    s.insert_columns(gens);
    CHECK(s.dim() == rank(gens, p));
    FpVector v = mul(gens, random_matrix(5, 1, p, rng), p);
    CHECK(s.contains(v));
    CHECK(s.reduce(v).isZero());
    FpVector c = s.coordinates(v);
    CHECK(reduced(s.basis() * c, p) == v);
    for (Index j = 0; j < s.dim(); ++j)
      for (Index k = 0; k < s.dim(); ++k) CHECK(s.rows()(k, s.pivots()[j]) == (j == k));
    FpVector w = FpVector::Zero(12);
    w[rule == Subspace::Pivot::First ? 0 : 11] = 1;
    if (!s.contains(w)) CHECK(s.insert(w));
  }
}

TEST_CASE("intersection") {
  const i64 p = 5;
  FpMatrix a(3, 2), b(3, 2);
  a << 1, 0, 0, 1, 0, 0;
  b << 0, 0, 1, 0, 0, 1;
  FpMatrix i = intersect(a, b, p);
  CHECK(i.cols() == 1);
  CHECK(i(1, 0) != 0);
}
