#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modp/errors.hpp"
#include "modp/serialize.hpp"
#include "modp/structure.hpp"

using namespace modp;

static bool is_representation(const KModule& m, const SubgroupId& s, int samples, std::mt19937_64& rng) {
  for (int k = 0; k < samples; ++k) {
    Mat2 g = random_element(s, m.prime(), m.level(), rng), h = random_element(s, m.prime(), m.level(), rng);
    if (mul(m.action(g), m.action(h), m.prime()) != m.action(g * h)) return false;
  }
  return true;
}

TEST_CASE("Serre weights are representations") {
  std::mt19937_64 rng(5);
  for (i64 p : {5, 7})
    for (int r = 0; r < p; ++r) {
      KModule w = serre_weight(r, 1, p);
      CHECK(w.dim() == r + 1);
      CHECK(is_representation(w, groups::K(), 20, rng));
    }
  CHECK_THROWS_AS(serre_weight(5, 0, 5), DomainError);
  // det twist: scalar z acts by z^(r+2s)
  KModule w = serre_weight(2, 1, 5);
  CHECK(w.action(Mat2(2, 0, 0, 2, 5, 1)) == reduced(identity(3) * 16, 5));
}

TEST_CASE("weight inclusion is K-linear") {
  for (i64 p : {5, 7})
    for (int r = 0; r < p; ++r) {
      ModuleMap m = weight_inclusion(r, p);
      CHECK(m.is_equivariant());
      CHECK(m.rank() == r + 1);
    }
}

TEST_CASE("induction") {
  std::mt19937_64 rng(9);
  const i64 p = 5;
  CharacterH chi = CharacterH::make(p, 1, 0);
  for (int n = 0; n <= 2; ++n) {
    KModule m = induce(chi, groups::K0(n + 1), groups::Iw(), n + 1);
    CHECK(m.dim() == ipow(p, n));
    CHECK(is_representation(m, groups::Iw(), 20, rng));
    m.validate();
  }
  KModule k = induce(chi, groups::B(), groups::K(), 2);
  CHECK(k.dim() == 30);
  CHECK(is_representation(k, groups::K(), 20, rng));
  // transitivity through K0(p)
  KModule inner = induce(chi, groups::K0(2), groups::K0(1), 2);
  KModule outer = induce(inner, groups::Iw(), 2);
  KModule direct = induce(chi, groups::K0(2), groups::Iw(), 2);
  CHECK(find_isomorphism(outer, direct, rng).has_value());
}

TEST_CASE("twist by Pi and twisted induction") {
  std::mt19937_64 rng(13);
  const i64 p = 5;
  for (auto chi : {CharacterH::make(p, 1, 0), CharacterH::make(p, 2, 3)})
    for (int m = 1; m <= 2; ++m) {
      KModule ind = induce(chi, groups::K0(m), groups::Iw(), m);
      KModule tw = twist_by_pi(ind);
      CHECK(tw.level() == m + 1);
      CHECK(is_representation(tw, groups::Iw(), 20, rng));
      KModule rhs = induce(chi.conj(), groups::K0plus(m), groups::Iw(), m + 1);
      CHECK(find_isomorphism(tw, rhs, rng).has_value());
    }
  KModule c = character_module(CharacterH::make(p, 1, 2), groups::K0(2), 2);
  KModule tc = twist_by_pi(c);
  CHECK(tc.group() == groups::K0plus(2));
  CHECK(tc.action(Mat2(2, 0, 0, 1, p, 3))(0, 0) == 4);  // (2,1) -> chi(diag(1,2)) = 2^2
  CHECK_THROWS_AS(twist_by_pi(serre_weight(1, 0, p)), DomainError);
}

TEST_CASE("json round trip") {
  KModule m = induce(CharacterH::make(5, 1, 0), groups::K0(2), groups::Iw(), 2);
  std::string a = dump(module_to_json(m));
  KModule back = module_from_json(nlohmann::json::parse(a));
  CHECK(dump(module_to_json(back)) == a);
  CHECK(!back.has_element_action());
  CHECK(back.action(back.gens().all()[2]) == m.gen_action(2));
  CHECK_THROWS_AS(back.action(Mat2(1, 2, 5, 1, 5, 2)), InternalError);
  auto j = nlohmann::json::parse(a);
  j["generators"][0]["action"][0][0] = 7;
  CHECK_THROWS_AS(module_from_json(j), ConfigError);
  j = nlohmann::json::parse(a);
  j["schema_version"] = 2;
  CHECK_THROWS_AS(module_from_json(j), ConfigError);
  j = nlohmann::json::parse(a);
  for (auto& row : j["generators"][1]["action"]) row[0] = 0;
  CHECK_THROWS(module_from_json(j));
}

TEST_CASE("submodules, quotients, sums, duals") {
  std::mt19937_64 rng(17);
  const i64 p = 5;
  KModule m = induce(CharacterH::make(p, 1, 0), groups::K0(2), groups::Iw(), 2);
  FpMatrix v = FpMatrix::Zero(5, 1);
  v(1, 0) = 1;
  v(2, 0) = 4;
  Submodule s = spin(m, v);
  s.module.validate();
  Quotient q = quotient(m, s.basis);
  CHECK(q.module.dim() + s.module.dim() == 5);
  q.module.validate();
  CHECK(is_representation(q.module, groups::Iw(), 10, rng));
  KModule d = dual(m);
  CHECK(is_representation(d, groups::Iw(), 10, rng));
  KModule ds = direct_sum(m, d);
  CHECK(ds.dim() == 10);
  CHECK(hom_space(m, ds).size() == hom_space(m, m).size() + hom_space(m, d).size());
}
