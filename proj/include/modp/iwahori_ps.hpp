#pragma once
#include <random>
#include <vector>

#include "modp/structure.hpp"

namespace modp {

// pi_{n+1}(chi) = Ind_{K0(p^(n+1))}^{Iw} chi at level n+1, with the vectors
// phi_i supported on K0(p^i) and equal to chi there (i = 1..n+1).
struct PSLevelModule {
  KModule module;
  CharacterH chi;
  int n = 0;
  std::vector<FpVector> phi;  // phi[i - 1]
  FiltrationReport filtration;
};

PSLevelModule build_ps(const CharacterH& chi, int n);

// joint psi-eigenspace of the generators of g acting on m (columns)
FpMatrix eigenspace(const KModule& m, const SubgroupId& g, const CharacterH& psi);

struct EigenReport {
  Index dim_k0 = 0, dim_b = 0;
  bool same_space = false;
  bool phi_basis = false;    // phi_1..phi_{n+1} span the eigenspace
  // psi != chi with a nonzero eigenspace, and its dimension. At finite
  // level these are exactly psi = chi alpha^k (k != 0), each of dimension n.
  std::vector<std::pair<CharacterH, Index>> others;
  bool others_expected = false;
};
EigenReport eigen_basis(const PSLevelModule& ps);

struct SplitReport {
  Index total = 0, image_dim = 0, kernel_dim = 0;
  bool direct = false;       // supported-on-Iw part and kernel are complementary submodules
  bool kernel_twist = false;  // kernel ~ twist_by_pi(pi_{N+1}(chi))
  bool image_ps = false;      // restriction to Iw maps onto pi_N(chi)
  std::vector<Label> image_socle, kernel_socle;
};
SplitReport finite_split_check(const CharacterH& chi, int N, std::mt19937_64& rng);

struct IwasawaOp {
  FpMatrix X;
  int nilpotency = 0;  // least k with X^k = 0
  bool cyclic = false;  // X^(p^n - 1) phi_{n+1} != 0
};
IwasawaOp iwasawa_X(const PSLevelModule& ps);

struct IwasawaReport {
  int samples = 0;
  int pairs = 0;  // (b, N) memberships tested
};
// (b - 1) X^N phi_{n+1} in X^(N+p-2) for the fixed generators of
// [1+pZ, Z; 0, 1+pZ] plus random elements
IwasawaReport prop_iwasawa_check(const PSLevelModule& ps, int random_samples, std::mt19937_64& rng);

struct CokernelReport {
  Index end_dim = 0;
  int tested = 0, bijective = 0;
  Index min_coker = -1;  // over the non-bijective maps
  bool dichotomy = false;  // non-bijective maps land in pi_n(chi)
};
CokernelReport cokernel_bound_check(const PSLevelModule& ps, int random_combinations, std::mt19937_64& rng);

}  // namespace modp
