#pragma once
#include <array>
#include <map>
#include <memory>
#include <random>

#include "modp/structure.hpp"
#include "modp/tree.hpp"

namespace modp {

// cInd_{KZ}^G(sigma_{r,s}) on the ball of radius N, with p in Z acting by
// zeta. Basis [g_j, x^i y^(r-i)] at index j (r+1) + i.
class CInd {
 public:
  CInd(i64 p, int r, int s, int N, i64 zeta = 1);

  i64 prime() const { return p_; }
  int r() const { return r_; }
  int s() const { return s_; }
  i64 zeta() const { return zeta_; }
  int radius() const { return ball_.radius(); }
  const TreeBall& ball() const { return ball_; }
  Index fiber() const { return r_ + 1; }
  Index dim() const { return ball_.size() * fiber(); }
  Index dim_at(int radius) const { return TreeBall::ball_size(p_, radius) * fiber(); }
  Index index(Index vertex, int i) const { return vertex * fiber() + i; }

  // sigma(k), k in K mod p
  const FpMatrix& weight(const Mat2& k) const;
  // g [g_j, v] = [g_t, B v]: one (t, B) per vertex j of the ball of radius `from`
  struct Block {
    Index target = 0;
    FpMatrix m;
  };
  std::vector<Block> blocks(const ScaledMat& g, int from) const;
  // g acting from the ball of radius `from` into this ball
  FpMatrix translate(const ScaledMat& g, int from) const;
  // k in K, given at level >= N + 1
  FpMatrix translate(const Mat2& k) const;
  // T from the ball of radius N - 1 into this ball
  FpMatrix hecke() const;
  // the vector [g, v]
  FpVector bracket(const ScaledMat& g, const FpVector& v) const;
  FpVector monomial(int i) const;  // x^i y^(r-i) in sigma

 private:
  i64 p_;
  int r_, s_;
  i64 zeta_;
  TreeBall ball_;
  mutable std::map<std::array<i64, 4>, FpMatrix> cache_;
};

// pi^(N) = cInd_{<=N} / (T - lambda) cInd_{<=N-1}. The relations are kept in
// echelon form with last-column pivots, so reduction never raises the radius
// of a support; the quotient basis is the set of non-pivot coordinates.
class PsQuotient {
 public:
  PsQuotient(i64 p, int r, int s, i64 lambda, int N, i64 zeta = 1);

  const CInd& cind() const { return cind_; }
  i64 prime() const { return cind_.prime(); }
  int radius() const { return cind_.radius(); }
  i64 lambda() const { return lambda_; }
  Index dim() const { return Index(kept_.size()); }
  Index relation_rank() const { return rel_.dim(); }
  // (T - lambda) is injective on the inner ball
  bool relations_injective() const { return rel_.dim() == cind_.dim_at(radius() - 1); }
  const std::vector<Index>& kept() const { return kept_; }

  FpMatrix project(const FpMatrix& ambient) const;
  FpMatrix lift(const FpMatrix& q) const;
  // k in K (or a subgroup) at level >= N + 1
  FpMatrix action(const Mat2& k) const;
  // quotient vector of [g, v]
  FpVector bracket(const ScaledMat& g, const FpVector& v) const { return project(cind_.bracket(g, v)); }
  // images of the ambient vectors supported in the ball of radius m
  Subspace image_of_ball(int m) const;
  // largest radius in the support of the canonical lift
  int support_radius(const FpVector& q) const;

 private:
  CInd cind_;
  i64 lambda_;
  Subspace rel_;
  std::vector<Index> kept_;
  FpMatrix proj_;  // dim x ambient
};

KModule quotient_module(const std::shared_ptr<const PsQuotient>& q, const SubgroupId& group);

struct HeckeReport {
  bool k_equivariant = false;
  bool invariant_formula = false;  // T on [1, x^r] is the sum over [1 l; 0 1][p 0; 0 1]
  bool origin_support = false;     // T [1, v] lives in the ball of radius 1
  Index rank = 0, inner_dim = 0;   // of T - lambda on the inner ball
};
HeckeReport hecke_check(i64 p, int r, int s, i64 lambda, int N);

struct QuotientReport {
  Index dim = 0, expected_dim = 0;
  bool relations_injective = false;
  bool stabilization_injective = false;  // pi^(N) -> pi^(N+1)
  bool x_iw1_invariant = false;           // image of [1, x^r] fixed by Iw1
};
QuotientReport ps_quotient_check(i64 p, int r, int s, i64 lambda, int N);

struct SummandReport {
  Index even_dim = 0, odd_dim = 0;
  bool direct = false;
  bool v_sigma_even = false, pi_v_sigma_odd = false;
  // K1-invariants of each summand supported in the ball of radius N - 1
  Index k1_even_stable = 0, k1_odd_stable = 0;
};
// lambda = 0: parity summands of pi^(N)
SummandReport ss_summands(const PsQuotient& q);

struct WeightMultiplicity {
  Index total = 0, stable = 0;
};
// dim Hom_K(sigma_{r,s}, pi^(N)) for every Serre weight, and the part whose
// image lies in the ball of radius N - 1
std::map<WeightLabel, WeightMultiplicity> socle_weights(const std::shared_ptr<const PsQuotient>& q);

// e_0 = 0, e_n = r + p(p - 1 - r) + p^2 e_{n-1}
Index e_recursion(i64 p, int r, int n);

struct MReport {
  int n = 0, N = 0;
  Index dim = 0, expected = 0;
  bool iw_equals_b = false;
  bool uniserial = false;
  std::vector<Label> socle_layers;
};
// M_{sigma,n} = B-span of t^(2n) [1, x^r] in pi^(N)(r, 0), N >= 2n + 1
MReport m_sigma_n(i64 p, int r, int n, int N = -1);

struct ContainmentReport {
  int n = 0, N = 0;
  bool same_depth = false;  // s Pi M_{sigma^[s],n} inside M_{sigma,n}
  bool next_depth = false;  // inside M_{sigma,n+1}
};
// computed in pi^(2n+2)(r, 0)
ContainmentReport ss_containment_check(i64 p, int r, int n);

struct ExchangeReport {
  int N = 0;
  Index source_dim = 0, hom_dim = 0, solutions = 0;
  std::vector<i64> scalars, expected;  // m = 0..n
};
// K-linear alpha on <K y_{N-1}> with alpha(x_1) = x_2, y_m = [0 1; p^(m+1) 0] x
ExchangeReport exchange_check(i64 p, int r, i64 lambda1, i64 lambda2, int n, int N = -1);

// f -> (-1)^radius f intertwines pi^(N)(lambda) and pi^(N)(-lambda) over K
bool intertwining_check(i64 p, int r, i64 lambda, int N);

}  // namespace modp
