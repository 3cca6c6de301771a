#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modp/errors.hpp"
#include "modp/iwahori_ps.hpp"

using namespace modp;

TEST_CASE("principal series at Iwahori level") {
  for (i64 p : {5, 7})
    for (int n = 0; n <= 2; ++n) {
      CharacterH chi = CharacterH::make(p, 1, 0);
      PSLevelModule ps = build_ps(chi, n);
      CHECK(ps.module.dim() == ipow(p, n));
      CHECK(ps.filtration.layers.size() == size_t(ipow(p, n)));
      CHECK(ps.phi.size() == size_t(n + 1));
      // phi_{n+1} generates
      CHECK(spin_subspace(ps.module, ps.phi.back()).dim() == ps.module.dim());
      CHECK(std::get<CharacterH>(socle(ps.module).labels().at(0)) == chi);
      if (n == 1) CHECK(radical(ps.module).dim() == p - 1);
    }
}

TEST_CASE("eigenvectors") {
  for (int n = 0; n <= 2; ++n) {
    EigenReport r = eigen_basis(build_ps(CharacterH::make(5, 2, 1), n));
    CHECK(r.dim_k0 == n + 1);
    CHECK(r.same_space);
    CHECK(r.others.size() == (n == 0 ? 0u : 3u));
  }
  // the finite-level eigenvectors for chi alpha give nonzero Iw-maps between
  // principal series with different characters
  const i64 p = 5;
  CharacterH chi = CharacterH::make(p, 1, 0);
  KModule a = build_ps(chi * alpha(p), 1).module, b = build_ps(chi, 1).module;
  auto homs = hom_space(a, b);
  REQUIRE(homs.size() == 1);
  CHECK(rank(homs[0], p) == 2);
  CHECK(hom_space(build_ps(CharacterH::make(p, 0, 0), 1).module, b).empty());
}

TEST_CASE("Frobenius reciprocity, dimension form") {
  const i64 p = 5;
  std::mt19937_64 rng(3);
  PSLevelModule ps = build_ps(CharacterH::make(p, 1, 0), 1);
  for (auto psi : {CharacterH::make(p, 1, 0), CharacterH::make(p, 2, 3)}) {
    KModule ind = induce(psi, groups::K0(2), groups::Iw(), 2);
    CHECK(Index(hom_space(ind, ps.module).size()) == eigenspace(ps.module, groups::K0(2), psi).cols());
  }
}

TEST_CASE("finite level split") {
  std::mt19937_64 rng(21);
  SplitReport r1 = finite_split_check(CharacterH::make(5, 1, 0), 1, rng);
  CHECK(r1.total == 6);
  CHECK(r1.image_dim == 1);
  CHECK(r1.kernel_dim == 5);
  SplitReport r2 = finite_split_check(CharacterH::make(5, 1, 0), 2, rng);
  CHECK(r2.total == 30);
  CHECK(r2.image_dim == 5);
  CHECK(r2.kernel_dim == 25);
  CHECK(r2.kernel_socle.size() == 1);
}

TEST_CASE("Iwasawa operator") {
  std::mt19937_64 rng(8);
  for (int n = 0; n <= 2; ++n) {
    PSLevelModule ps = build_ps(CharacterH::make(5, 1, 0), n);
    IwasawaOp op = iwasawa_X(ps);
    CHECK(op.nilpotency == ipow(5, n));
    if (n == 0) CHECK(op.X.isZero());
    IwasawaReport r = prop_iwasawa_check(ps, 20, rng);
    CHECK(r.pairs == r.samples * ipow(5, n));
  }
}

TEST_CASE("cokernel bound") {
  std::mt19937_64 rng(4);
  for (int n = 0; n <= 2; ++n) {
    CokernelReport r = cokernel_bound_check(build_ps(CharacterH::make(5, 1, 0), n), 30, rng);
    CHECK(r.end_dim == n + 1);
    CHECK(r.bijective > 0);
    if (n == 1) CHECK(r.min_coker == 4);
    if (n == 2) CHECK(r.min_coker >= 20);
  }
}
