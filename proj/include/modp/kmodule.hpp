#pragma once
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "modp/linalg.hpp"
#include "modp/subgroup.hpp"

namespace modp {

// Character of H = (F_p^x)^2: diag(a, d) -> a^x d^y, exponents mod p-1.
struct CharacterH {
  i64 p = 5;
  int x = 0, y = 0;
  static CharacterH make(i64 p, i64 x, i64 y);
  i64 eval(const Mat2& g) const;
  CharacterH conj() const { return make(p, y, x); }
  CharacterH operator*(const CharacterH& o) const { return make(p, x + o.x, y + o.y); }
  CharacterH pow(i64 k) const { return make(p, i64(x) * k, i64(y) * k); }
  bool generic() const { return x != y; }
  bool operator==(const CharacterH& o) const = default;
  std::string str() const;
};
// diag(a, d) -> a / d
CharacterH alpha(i64 p);

// Sym^r(F_p^2) twisted by det^s, 0 <= r <= p-1.
struct WeightLabel {
  int r = 0, s = 0;
  bool operator==(const WeightLabel& o) const = default;
  auto operator<=>(const WeightLabel& o) const = default;
  std::string str() const;
};

using ElementAction = std::function<FpMatrix(const Mat2&)>;

class KModule {
 public:
  KModule() = default;
  // generator matrices aligned with generators(group, p, level).all()
  KModule(SubgroupId group, i64 p, int level, Index dim, std::vector<FpMatrix> gen_actions,
          ElementAction act = {}, std::string provenance = {});
  static KModule from_action(SubgroupId group, i64 p, int level, Index dim, ElementAction act,
                             std::string provenance = {});

  const SubgroupId& group() const { return group_; }
  i64 prime() const { return p_; }
  int level() const { return level_; }
  Index dim() const { return dim_; }
  const GeneratorSet& gens() const { return generators(group_, p_, level_); }
  const std::vector<FpMatrix>& actions() const { return acts_; }
  const FpMatrix& gen_action(size_t k) const { return acts_.at(k); }
  size_t torus_count() const { return gens().torus.size(); }
  bool has_element_action() const { return bool(act_); }
  const ElementAction& element_action() const { return act_; }
  // matrix of g; g may be given at any level >= level()
  FpMatrix action(const Mat2& g) const;
  const std::string& provenance() const { return prov_; }
  void set_provenance(std::string s) { prov_ = std::move(s); }
  std::vector<std::string> basis_labels;

  // square, invertible, and consistent with the element action
  void validate() const;

 private:
  SubgroupId group_;
  i64 p_ = 5;
  int level_ = 1;
  Index dim_ = 0;
  std::vector<FpMatrix> acts_;
  ElementAction act_;
  std::string prov_;
};

struct ModuleMap {
  std::shared_ptr<const KModule> source, target;
  FpMatrix matrix;  // target.dim x source.dim
  bool is_equivariant() const;
  Index rank() const { return modp::rank(matrix, source->prime()); }
};

KModule character_module(const CharacterH& chi, const SubgroupId& group, int level);
// monoid action of an integral matrix on Sym^n, basis x^i y^(n-i) at index i
FpMatrix sym_matrix(i64 a, i64 b, i64 c, i64 d, int n, i64 p);
// Sym^n twisted by det^s; irreducible Serre weight when n <= p-1
KModule sym_power(int n, int s, i64 p);
KModule serre_weight(int r, int s, i64 p);
// sigma_r (x) det -> sigma_{p+1+r}, P -> P * (X^p Y - X Y^p)
ModuleMap weight_inclusion(int r, i64 p);

// functions f(h x) = W(h) f(x) on big, small\big right cosets; level >= W.level
KModule induce(const KModule& w, const SubgroupId& big, int level);
KModule induce(const CharacterH& chi, const SubgroupId& small, const SubgroupId& big, int level);
KModule restrict_to(const KModule& m, const SubgroupId& sub);
// the same module read as a module at a higher level
KModule inflate(const KModule& m, int level);
// g -> M(Pi g Pi^{-1}); level goes up by one
KModule twist_by_pi(const KModule& m);
SubgroupId twisted_group(const SubgroupId& s);

struct Submodule {
  Subspace basis;  // inside the ambient module, reduced echelon rows
  KModule module;  // action on the echelon rows
};
struct Quotient {
  KModule module;
  std::vector<Index> kept;  // ambient coordinates forming the quotient basis
  FpMatrix projection;      // dim Q x dim M
};

// span of the orbit of vectors (columns) under the given matrices
Subspace spin_subspace(const std::vector<FpMatrix>& mats, const FpMatrix& vectors, i64 p);
Subspace spin_subspace(const KModule& m, const FpMatrix& vectors);
Submodule submodule(const KModule& m, const Subspace& s);
Submodule spin(const KModule& m, const FpMatrix& vectors);
Quotient quotient(const KModule& m, const Subspace& s);
KModule direct_sum(const KModule& a, const KModule& b);
KModule dual(const KModule& m);

}  // namespace modp
