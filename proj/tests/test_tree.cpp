#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modp/errors.hpp"
#include "modp/tree.hpp"

using namespace modp;

TEST_CASE("ball sizes") {
  CHECK(TreeBall(5, 1).size() == 7);
  CHECK(TreeBall(5, 2).size() == 37);
  CHECK(TreeBall(7, 2).size() == 65);
  CHECK(TreeBall(5, 3).size() == 187);
  TreeBall b(5, 2);
  CHECK(b.sphere_begin(2) == 7);
  CHECK(b.sphere_begin(3) == 37);
}

TEST_CASE("normal forms") {
  const i64 p = 5;
  TreeBall b(p, 3);
  for (Index i = 0; i < b.size(); ++i) {
    auto l = b.locate(b.rep(i));
    REQUIRE(l);
    CHECK(l->vertex == i);
    CHECK(l->e == 0);
    CHECK(l->k == Mat2::identity(p, 1));
  }
  // scaling and right multiplication by K do not move the vertex
  auto l = b.locate(b.rep(20) * ScaledMat::make(p * 2, p * 3, p * 1, p * 2, p, 1));
  REQUIRE(l);
  CHECK(l->vertex == 20);
  CHECK(l->e == 2);
  CHECK(l->k == Mat2(2, 3, 1, 2, p, 1));
  CHECK(!b.locate(ScaledMat::make(ipow(p, 4), 0, 0, 1, p)));
  // Pi [K] is B_1(0) with cocycle [0 1; 1 0]
  auto pi = b.locate(Pi(p));
  REQUIRE(pi);
  CHECK(pi->vertex == b.index_of(false, 1, 0));
  CHECK(pi->k == Mat2(0, 1, 1, 0, p, 1));
}

TEST_CASE("ball invariants") {
  for (i64 p : {5, 7})
    for (int N = 0; N <= 3; ++N) {
      BallReport r = ball_check(p, N);
      CHECK(r.sizes);
      CHECK(r.parents);
      CHECK(r.k_spheres);
      CHECK(r.pi_involution);
    }
}

TEST_CASE("tree complex") {
  TreeComplexReport r0 = tree_complex_check(5, 0);
  CHECK(r0.edges == 0);
  CHECK(r0.exact);
  TreeComplexReport r1 = tree_complex_check(5, 1);
  CHECK(r1.edges == 6);
  CHECK(r1.vertices == 7);
  TreeComplexReport r2 = tree_complex_check(5, 2);
  CHECK(r2.edges == 36);
  CHECK(tree_complex_check(7, 3).vertices == 457);
}
