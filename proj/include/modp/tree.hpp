#pragma once
#include <optional>
#include <vector>

#include "modp/linalg.hpp"
#include "modp/mat2.hpp"

namespace modp {

// Vertex gKZ of the tree at distance n from [K]. Representatives:
// A_n(mu) = [p^n mu; 0 1], mu mod p^n, and B_n(nu) = [1 0; nu p^n], nu in pZ
// mod p^n. The origin is A_0(0). Vertices are ordered by radius, then A
// before B, then by label.
struct Vertex {
  int radius = 0;
  bool upper = true;
  i64 label = 0;
  Index parent = -1;
};

// g = p^e * rep(vertex) * k with k in K, k kept mod p
struct Located {
  Index vertex = 0;
  int e = 0;
  Mat2 k;
};

class TreeBall {
 public:
  TreeBall() = default;
  TreeBall(i64 p, int N);

  i64 prime() const { return p_; }
  int radius() const { return N_; }
  Index size() const { return Index(v_.size()); }
  const Vertex& vertex(Index i) const { return v_.at(size_t(i)); }
  // first index at radius n; sphere_begin(N + 1) == size()
  Index sphere_begin(int n) const;
  static Index ball_size(i64 p, int N);

  ScaledMat rep(Index i) const;
  Index index_of(bool upper, int n, i64 label) const;
  // nullopt when the vertex of g lies outside the ball
  std::optional<Located> locate(const ScaledMat& g) const;
  // edge g N with g KZ = vertex i and g Pi KZ = its parent
  ScaledMat edge_rep(Index i) const;

 private:
  i64 p_ = 5;
  int N_ = 0;
  std::vector<Vertex> v_;
};

struct BallReport {
  std::vector<Index> sphere_sizes;
  bool sizes = false;      // closed forms
  bool parents = false;    // parent pointers agree with normal forms
  bool k_spheres = false;  // K generators permute each sphere
  bool pi_involution = false;
};
BallReport ball_check(i64 p, int N);

struct TreeComplexReport {
  Index vertices = 0, edges = 0, rank_boundary = 0;
  bool injective = false, exact = false;
};
// chains on the ball: 0 -> C(edges) -> C(vertices) -> k -> 0
TreeComplexReport tree_complex_check(i64 p, int N);

}  // namespace modp
