#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "modp/errors.hpp"
#include "modp/ribet.hpp"

using namespace modp;

namespace {

LatticeRep load(const std::string& name) {
  std::ifstream in(std::string(MODP_DATA_DIR) + "/ribet/" + name + ".json");
  REQUIRE(in);
  return lattice_rep_from_json(nlohmann::json::parse(in));
}

// every vertex of the ball tested directly
std::set<Index> brute_force(const LatticeRep& rho) {
  TreeBall b(rho.p, rho.m);
  std::set<Index> out;
  for (Index i = 0; i < b.size(); ++i)
    if (is_stable(rho, b.rep(i))) out.insert(i);
  return out;
}

std::set<Index> found(const LatticeGraph& g) {
  std::set<Index> out;
  for (const auto& v : g.vertices) out.insert(v.tree_index);
  return out;
}

}  // namespace

TEST_CASE("two vertex segment") {
  auto rho = load("two_vertex");
  auto g = stable_lattice_graph(rho);
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.path);
  CHECK(!g.horizon_hit);
  CHECK(found(g) == brute_force(rho));
  for (const auto& v : g.vertices) CHECK(v.reduction.kind == ReductionKind::Indecomposable);
  auto s = verify_segment(rho, g);
  CHECK(s.endpoints);
  CHECK(s.alternating);
  CHECK(s.distances);
}

TEST_CASE("three vertex segment") {
  auto rho = load("three_vertex");
  auto g = stable_lattice_graph(rho);
  REQUIRE(g.vertices.size() == 3);
  CHECK(g.path);
  CHECK(!g.horizon_hit);
  CHECK(found(g) == brute_force(rho));
  int semisimple = 0;
  for (const auto& v : g.vertices) semisimple += v.reduction.kind == ReductionKind::Semisimple;
  CHECK(semisimple == 1);
  CHECK(g.vertices[1].distance == 1);
  CHECK(g.vertices[1].reduction.kind == ReductionKind::Semisimple);
  auto s = verify_segment(rho, g);
  CHECK(s.interior);
  CHECK(s.alternating);
  CHECK(s.distances);
}

TEST_CASE("split input reaches the horizon") {
  auto rho = load("diagonal");
  auto g = stable_lattice_graph(rho);
  CHECK(g.horizon_hit);
  CHECK(g.path);
  CHECK(g.vertices.size() == size_t(2 * rho.m + 1));
  CHECK(found(g) == brute_force(rho));
  CHECK_THROWS_AS(verify_segment(rho, g), PreconditionError);
}

TEST_CASE("irreducible reduction is a precondition failure") {
  auto rho = load("irreducible");
  CHECK(brute_force(rho).size() == 1);
  CHECK_THROWS_AS(stable_lattice_graph(rho), PreconditionError);
}

TEST_CASE("lattice distance") {
  auto rho = load("three_vertex");
  const i64 p = rho.p;
  auto a = ScaledMat::make(1, 0, 0, 1, p);
  auto b = ScaledMat::make(1, 0, 0, 25, p);
  auto d = lattice_distance(rho, a, b);
  CHECK(d.d == 2);
  CHECK(d.d_reverse == 2);
  CHECK(d.annihilator == 2);
  // a non-stable lattice is outside the domain
  CHECK_THROWS_AS(lattice_distance(rho, a, ScaledMat::make(25, 0, 0, 1, p)), DomainError);
}

TEST_CASE("json input validation") {
  auto j = nlohmann::json::parse(R"({"p": 4, "m": 2, "generators": [[[1,0],[0,1]]]})");
  CHECK_THROWS_AS(lattice_rep_from_json(j), ConfigError);
  j = nlohmann::json::parse(R"({"p": 5, "m": 2, "generators": [[[5,0],[0,1]]]})");
  CHECK_THROWS_AS(lattice_rep_from_json(j), ConfigError);
  j = nlohmann::json::parse(R"({"p": 5, "m": 2})");
  CHECK_THROWS_AS(lattice_rep_from_json(j), ConfigError);
  auto g = stable_lattice_graph(load("two_vertex"));
  auto out = to_json(g);
  CHECK(out["vertices"].size() == 2);
  CHECK(out["horizon_hit"] == false);
}
