#pragma once
#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "modp/field.hpp"

namespace modp {

using Index = Eigen::Index;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using FpMatrix = Matrix<i64>;
using FpVector = Vector<i64>;
using RowMatrix = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Entries are kept in [0, p). Products of reduced matrices are formed with
// plain integer GEMM and reduced afterwards, so p^2 * n must stay below 2^62.
constexpr i64 kMaxLinalgPrime = i64(1) << 20;

template <typename Derived>
Matrix<i64> reduced(const Eigen::MatrixBase<Derived>& a, i64 p) {
  return a.unaryExpr([p](i64 x) { x %= p; return x < 0 ? x + p : x; });
}

template <typename A, typename B>
FpMatrix mul(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, i64 p) {
  return reduced(a * b, p);
}

struct Rref {
  FpMatrix r;                 // reduced row echelon form, rank rows kept
  std::vector<Index> pivots;  // pivot column of each row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

Rref rref_impl(FpMatrix a, i64 p);

template <typename Derived>
Rref rref(const Eigen::MatrixBase<Derived>& a, i64 p) {
  return rref_impl(reduced(a, p), p);
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a, i64 p) {
  return rref(a, p).rank();
}

// Columns span {x : a x = 0}.
FpMatrix nullspace_impl(const FpMatrix& a, i64 p);
template <typename Derived>
FpMatrix nullspace(const Eigen::MatrixBase<Derived>& a, i64 p) {
  return nullspace_impl(reduced(a, p), p);
}

// Columns span {x : x^T a = 0}, i.e. the cokernel functionals.
template <typename Derived>
FpMatrix left_nullspace(const Eigen::MatrixBase<Derived>& a, i64 p) {
  return nullspace_impl(reduced(a.transpose(), p), p);
}

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b, i64 p);
FpMatrix inverse(const FpMatrix& a, i64 p);
FpMatrix identity(Index n);
FpMatrix random_matrix(Index rows, Index cols, i64 p, std::mt19937_64& rng);

// Incrementally grown subspace of F_p^n in reduced echelon form. The pivot of
// a new row is its first or its last nonzero coordinate.
class Subspace {
 public:
  enum class Pivot { First, Last };

  Subspace() = default;
  Subspace(Index n, i64 p, Pivot rule = Pivot::First);

  Index ambient_dim() const { return n_; }
  Index dim() const { return dim_; }
  i64 prime() const { return p_; }
  Pivot rule() const { return rule_; }

  // v minus its projection: zero at every pivot column
  FpVector reduce(const FpVector& v) const;
  FpMatrix reduce_columns(const FpMatrix& vs) const;
  bool contains(const FpVector& v) const;
  bool insert(const FpVector& v);
  Index insert_columns(const FpMatrix& vs);
  // coordinates of v (assumed inside) against rows()
  FpVector coordinates(const FpVector& v) const;
  auto rows() const { return rows_.topRows(dim_); }
  FpMatrix basis() const { return rows().transpose(); }
  FpVector row(Index j) const { return rows_.row(j).transpose(); }
  const std::vector<Index>& pivots() const { return piv_; }
  std::vector<Index> free_columns() const;
  bool is_pivot(Index c) const { return pivmask_[c]; }

 private:
  Index n_ = 0, dim_ = 0;
  i64 p_ = 2;
  Pivot rule_ = Pivot::First;
  RowMatrix rows_;
  std::vector<Index> piv_;
  std::vector<char> pivmask_;
};

Subspace span(const FpMatrix& cols, i64 p, Subspace::Pivot rule = Subspace::Pivot::First);
// intersection of column spans
FpMatrix intersect(const FpMatrix& a, const FpMatrix& b, i64 p);

}  // namespace modp
