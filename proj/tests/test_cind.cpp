#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modp/cind.hpp"
#include "modp/errors.hpp"

using namespace modp;

TEST_CASE("compact induction on balls") {
  CInd c(5, 1, 0, 1);
  CHECK(c.dim() == 14);
  CHECK(CInd(5, 1, 0, 2).dim() == 74);
  // [1, x^r] is an Iw1-eigenvector
  const FpVector x = c.bracket(ScaledMat::make(1, 0, 0, 1, 5), c.monomial(1));
  for (const Mat2& g : generators(groups::Iw1(), 5, 2).all()) CHECK(FpVector(mul(c.translate(g), x, 5)) == x);
  // representation property on random K elements
  std::mt19937_64 rng(2);
  CInd c2(5, 2, 1, 2, 3);
  for (int k = 0; k < 10; ++k) {
    Mat2 g = random_element(groups::K(), 5, 3, rng), h = random_element(groups::K(), 5, 3, rng);
    CHECK(mul(c2.translate(g), c2.translate(h), 5) == c2.translate(g * h));
  }
}

TEST_CASE("Hecke operator") {
  for (int r : {1, 2}) {
    HeckeReport h = hecke_check(5, r, 0, 1, 2);
    CHECK(h.k_equivariant);
    CHECK(h.invariant_formula);
    CHECK(h.origin_support);
  }
  HeckeReport h = hecke_check(5, 1, 0, 1, 2);
  CHECK(h.inner_dim == 14);
  CHECK(h.rank == 14);
  CHECK(hecke_check(7, 2, 1, 0, 2).k_equivariant);
}

TEST_CASE("quotients") {
  QuotientReport q = ps_quotient_check(5, 1, 0, 0, 2);
  CHECK(q.dim == 60);
  CHECK(q.expected_dim == 60);
  CHECK(q.relations_injective);
  CHECK(q.stabilization_injective);
  CHECK(q.x_iw1_invariant);
  QuotientReport q1 = ps_quotient_check(5, 1, 0, 2, 2);
  CHECK(q1.dim == 60);
  CHECK(q1.stabilization_injective);
  auto pq = std::make_shared<const PsQuotient>(5, 1, 0, 0, 2);
  KModule m = quotient_module(pq, groups::K());
  m.validate();
  std::mt19937_64 rng(1);
  for (int k = 0; k < 5; ++k) {
    Mat2 g = random_element(groups::K(), 5, 3, rng), h = random_element(groups::K(), 5, 3, rng);
    CHECK(mul(m.action(g), m.action(h), 5) == m.action(g * h));
  }
}

TEST_CASE("supersingular summands") {
  PsQuotient q(5, 1, 0, 0, 2);
  SummandReport s = ss_summands(q);
  CHECK(s.direct);
  CHECK(s.even_dim == 50);
  CHECK(s.odd_dim == 10);
  CHECK(s.v_sigma_even);
  CHECK(s.pi_v_sigma_odd);
  MESSAGE("K1 stable even/odd at N=2: " << s.k1_even_stable << " " << s.k1_odd_stable);
  SummandReport s3 = ss_summands(PsQuotient(5, 1, 0, 0, 3));
  MESSAGE("K1 stable even/odd at N=3: " << s3.k1_even_stable << " " << s3.k1_odd_stable);
  CHECK(s3.k1_odd_stable == 4);
}

TEST_CASE("socle weights") {
  auto q = std::make_shared<const PsQuotient>(5, 1, 0, 0, 2);
  auto w = socle_weights(q);
  for (auto& [k, v] : w) MESSAGE(k.str() << " total " << v.total << " stable " << v.stable);
  CHECK(w[WeightLabel{1, 0}].stable >= 1);
  CHECK(w[WeightLabel{3, 1}].stable >= 1);
}

TEST_CASE("M_sigma") {
  CHECK(e_recursion(5, 1, 1) == 16);
  MReport m0 = m_sigma_n(5, 1, 0);
  CHECK(m0.dim == 1);
  MReport m1 = m_sigma_n(5, 1, 1);
  CHECK(m1.dim == 17);
  CHECK(m1.uniserial);
  CHECK(m1.iw_equals_b);
}

TEST_CASE("containment") {
  ContainmentReport c = ss_containment_check(5, 1, 0);
  MESSAGE("same depth " << c.same_depth << " next " << c.next_depth);
  CHECK(c.next_depth);
}

TEST_CASE("exchange") {
  ExchangeReport e = exchange_check(5, 1, 1, 2, 0);
  CHECK(e.scalars == std::vector<i64>{3});
  MESSAGE("source " << e.source_dim << " hom " << e.hom_dim << " free " << e.solutions);
  CHECK(exchange_check(5, 1, 2, 1, 0).scalars == std::vector<i64>{2});
  CHECK(exchange_check(5, 1, 2, 2, 0).scalars == std::vector<i64>{1});
}

TEST_CASE("intertwining") {
  CHECK(intertwining_check(5, 1, 2, 2));
  CHECK(intertwining_check(5, 2, 1, 2));
}
