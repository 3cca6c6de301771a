#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modp/errors.hpp"
#include "modp/field.hpp"

using namespace modp;

// fixpoint oracle: the lift is the unique x = a mod p with x^(p-1) = 1
static i64 teich_oracle(i64 a, i64 p, int N) {
  i64 q = ipow(p, N);
  for (i64 x = a; x < q; x += p)
    if (powmod(x, p - 1, q) == 1) return x;
  return -1;
}

TEST_CASE("teichmuller lifts") {
  CHECK(teichmuller(2, 5, 2).value() == 7);
  CHECK(teichmuller(4, 5, 2).value() == 24);
  CHECK(teichmuller(0, 5, 3).value() == 0);
  for (i64 p : {3, 5, 7, 11})
    for (int N = 1; N <= 4; ++N)
      for (i64 a = 1; a < p; ++a) {
        ResidueInt t = teichmuller(a, p, N);
        CHECK(t.value() == teich_oracle(a, p, N));
        CHECK(t.pow(p).value() == t.value());
      }
}

TEST_CASE("residue arithmetic") {
  ResidueInt a(7, 5, 2), b(24, 5, 2);
  CHECK((a * b).value() == 168 % 25);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(ResidueInt(10, 5, 2).valuation() == 1);
  CHECK(ResidueInt(0, 5, 2).valuation() == 2);
  CHECK_THROWS_AS(ResidueInt(10, 5, 2).inverse(), DomainError);
  CHECK_THROWS_AS(a + ResidueInt(1, 5, 3), LevelError);
  CHECK(a.reduce(1).value() == 2);
  CHECK_THROWS_AS(ResidueInt(1, 7, 40), LevelError);
}

TEST_CASE("prime field") {
  PrimeField f(5);
  CHECK(f.inv(2) == 3);
  CHECK_THROWS_AS(f.inv(0), DomainError);
  CHECK_THROWS_AS(PrimeField(9), DomainError);
  for (i64 a = 1; a < 5; ++a) CHECK(f.pow(f.generator(), f.dlog(a)) == a);
  CHECK(primitive_root_pp(5) == 2);
  CHECK(powmod(primitive_root_pp(7), 6, 49) != 1);
}

TEST_CASE("quadratic extension") {
  for (i64 p : {5, 7, 11}) {
    FieldElem t = FieldElem::gen(p);
    CHECK(!t.in_prime_field());
    // Frobenius has order 2 and every nonzero element has order | p^2 - 1
    CHECK(t.pow(p * p) == t);
    CHECK(!(t.pow(p) == t));
    for (i64 a0 = 0; a0 < p; ++a0)
      for (i64 a1 = 0; a1 < p; ++a1) {
        FieldElem x(a0, a1, p, 2);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == FieldElem(1, p, 2));
        CHECK(x.pow(p * p - 1) == FieldElem(1, p, 2));
      }
    CHECK_THROWS_AS(teichmuller(t, 2), DomainError);
    CHECK(teichmuller(FieldElem(2, p), 2).value() == teich_oracle(2, p, 2));
  }
}
