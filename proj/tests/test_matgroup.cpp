#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "modp/errors.hpp"
#include "modp/subgroup.hpp"

using namespace modp;

TEST_CASE("conjugation by Pi") {
  Mat2 g(2, 3, 5, 4, 5, 3);
  Mat2 h = conj_by_pi(g);
  CHECK(h == Mat2(4, 1, 15, 2, 5, 2));
  CHECK(conj_by_pi(conj_by_pi(g.lift(4))) == g.reduce(2));
  CHECK_THROWS_AS(conj_by_pi(Mat2(1, 0, 1, 1, 5, 2)), DomainError);
  // Pi K0(p^i) Pi^{-1} is K0plus(p^i) and back
  std::mt19937_64 rng(3);
  for (int i = 1; i <= 3; ++i)
    for (int k = 0; k < 200; ++k) {
      Mat2 x = random_element(groups::K0(i), 5, 4, rng);
      CHECK(is_member(conj_by_pi(x.lift(5)), groups::K0plus(i)));
      Mat2 y = random_element(groups::K0plus(i), 5, 4, rng);
      CHECK(is_member(conj_by_pi(y.lift(5)), groups::K0(i)));
    }
}

TEST_CASE("membership rejects") {
  CHECK(is_member(Mat2(1, 1, 5, 1, 5, 2), groups::Iw1()));
  CHECK(!is_member(Mat2(1, 1, 1, 1, 5, 2), groups::K()));
  CHECK(!is_member(Mat2(2, 1, 5, 1, 5, 2), groups::Iw1()));
  CHECK(is_member(Mat2(7, 0, 0, 1, 5, 2), groups::H()));
  CHECK(!is_member(Mat2(2, 0, 0, 1, 5, 2), groups::H()));
  CHECK(is_member(Mat2(1, 0, 5, 1, 5, 2), groups::K0plus(2)));
  CHECK(!is_member(Mat2(1, 1, 5, 1, 5, 2), groups::K0plus(2)));
}

TEST_CASE("closed-form orders against enumeration") {
  for (int N : {1, 2})
    for (auto s : {groups::K(), groups::Iw(), groups::Iw1(), groups::K0(1), groups::K0(2), groups::K0plus(1),
                   groups::K0plus(2), groups::Ki(1), groups::H(), groups::B(), groups::U(), groups::Ubar(1),
                   groups::B1()}) {
      if (s.kind == GroupKind::K0plus && s.i > N + 1) continue;
      std::size_t n = 0;
      for_each_element(s, 5, N, [&](const Mat2&) { ++n; });
      CHECK_MESSAGE(to_string_u128(n) == order_string(s, 5, N), s.name() << " N=" << N);
    }
}

TEST_CASE("certified generator sets") {
  for (i64 p : {5, 7})
    for (int N : {1, 2, 3})
      for (auto s : {groups::K(), groups::Iw(), groups::Iw1(), groups::K0(2), groups::K0plus(2), groups::Ki(1),
                     groups::H(), groups::B(), groups::B1(), groups::U(), groups::Ubar(1)}) {
        const GeneratorSet& g = generators(s, p, N);
        CHECK(g.cert.order == order_string(s, p, N));
        for (const Mat2& x : g.all()) CHECK(is_member(x, s));
      }
  // an upper unipotent and diag(g, 1) only reach the mirabolic [* *; 0 1]
  Mat2 a(1, 1, 0, 1, 5, 2), b(2, 0, 0, 1, 5, 2);
  CHECK(generated_order({a, b}, order(groups::K(), 5, 2)) == 20 * 25);
  // higher levels are certified through the lifting level
  const GeneratorSet& big = generators(groups::K0(2), 7, 6);
  CHECK(big.cert.method == "lifted");
  CHECK(big.cert.certified_level == 3);
}

TEST_CASE("coset representatives are transversals") {
  struct Case { SubgroupId big, small; int N; size_t count; };
  std::vector<Case> cases = {{groups::Iw(), groups::K0(2), 2, 5},
                             {groups::K(), groups::B(), 1, 6},
                             {groups::K(), groups::Iw(), 1, 6},
                             {groups::K(), groups::B(), 2, 30},
                             {groups::K0(1), groups::K0(2), 2, 5},
                             {groups::Iw(), groups::K0plus(2), 2, 5},
                             {groups::Iw(), groups::B(), 2, 5}};
  for (const auto& c : cases) {
    auto reps = coset_reps(c.big, c.small, 5, c.N);
    CHECK(reps.size() == c.count);
    std::set<size_t> hit;
    size_t bad = 0;
    for_each_element(c.big, 5, c.N, [&](const Mat2& x) {
      CosetFactor f = coset_factor(c.big, c.small, x);
      if (f.rep >= reps.size() || !is_member(f.h, c.small) || !(f.h * reps[f.rep] == x)) ++bad;
      hit.insert(f.rep);
    });
    CHECK(bad == 0);
    CHECK(hit.size() == reps.size());
  }
}

TEST_CASE("double cosets and the intersection identity") {
  std::mt19937_64 rng(1);
  for (int n : {0, 1}) {
    auto r = double_coset_check(5, n);
    CHECK_MESSAGE(r.pass, r.detail);
    CHECK(r.class_sizes.size() == size_t(n + 1));
    auto s = intersection_identity_check(5, n, 0, rng);
    CHECK_MESSAGE(s.pass, s.detail);
  }
  auto s = intersection_identity_check(5, 2, 20000, rng);
  CHECK_MESSAGE(s.pass, s.detail);
}
