#include "modp/linalg.hpp"

#include "modp/errors.hpp"

namespace modp {

namespace {
void check_prime(i64 p) {
  if (p < 2 || p >= kMaxLinalgPrime) throw DomainError("linear algebra prime out of range");
}
}  // namespace

Rref rref_impl(FpMatrix a, i64 p) {
  check_prime(p);
  RowMatrix m = a;
  const Index rows = m.rows(), cols = m.cols();
  Rref out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(r));
    i64 inv = invmod(m(r, c), p);
    m.row(r) = reduced(m.row(r) * inv, p);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      i64 f = m(i, c);
      m.row(i) = reduced(m.row(i) - f * m.row(r), p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.r = m.topRows(r);
  return out;
}

FpMatrix nullspace_impl(const FpMatrix& a, i64 p) {
  Rref rr = rref_impl(a, p);
  const Index n = a.cols();
  std::vector<char> is_piv(n, 0);
  for (Index c : rr.pivots) is_piv[c] = 1;
  std::vector<Index> free;
  for (Index c = 0; c < n; ++c)
    if (!is_piv[c]) free.push_back(c);
  FpMatrix ns = FpMatrix::Zero(n, static_cast<Index>(free.size()));
  for (size_t k = 0; k < free.size(); ++k) {
    Index f = free[k];
    ns(f, k) = 1;
    for (Index j = 0; j < rr.rank(); ++j) ns(rr.pivots[j], k) = normmod(-rr.r(j, f), p);
  }
  return ns;
}

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b, i64 p) {
  if (a.rows() != b.rows()) throw DomainError("solve: shape mismatch");
  FpMatrix aug(a.rows(), a.cols() + b.cols());
  aug << reduced(a, p), reduced(b, p);
  Rref rr = rref_impl(aug, p);
  FpMatrix x = FpMatrix::Zero(a.cols(), b.cols());
  for (Index j = 0; j < rr.rank(); ++j) {
    if (rr.pivots[j] >= a.cols()) return std::nullopt;
    x.row(rr.pivots[j]) = rr.r.row(j).tail(b.cols());
  }
  return x;
}

FpMatrix inverse(const FpMatrix& a, i64 p) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  auto x = solve(a, identity(a.rows()), p);
  if (!x || rank(a, p) != a.rows()) throw DomainError("singular matrix");
  return *x;
}

FpMatrix identity(Index n) { return FpMatrix::Identity(n, n); }

FpMatrix random_matrix(Index rows, Index cols, i64 p, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> d(0, p - 1);
  FpMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = d(rng);
  return m;
}

Subspace::Subspace(Index n, i64 p, Pivot rule)
    : n_(n), p_(p), rule_(rule), rows_(0, n), pivmask_(n, 0) {
  check_prime(p);
}

FpVector Subspace::reduce(const FpVector& v) const {
  FpVector w = reduced(v, p_);
  if (dim_ == 0) return w;
  FpVector c(dim_);
  for (Index j = 0; j < dim_; ++j) c[j] = w[piv_[j]];
  return reduced(w - rows().transpose() * c, p_);
}

FpMatrix Subspace::reduce_columns(const FpMatrix& vs) const {
  FpMatrix w = reduced(vs, p_);
  if (dim_ == 0) return w;
  FpMatrix c(dim_, w.cols());
  for (Index j = 0; j < dim_; ++j) c.row(j) = w.row(piv_[j]);
  return reduced(w - rows().transpose() * c, p_);
}

bool Subspace::contains(const FpVector& v) const { return reduce(v).isZero(); }

bool Subspace::insert(const FpVector& v) {
  if (v.size() != n_) throw DomainError("subspace: vector of wrong length");
  FpVector w = reduce(v);
  Index q = -1;
  if (rule_ == Pivot::First) {
    for (Index i = 0; i < n_; ++i)
      if (w[i]) { q = i; break; }
  } else {
    for (Index i = n_ - 1; i >= 0; --i)
      if (w[i]) { q = i; break; }
  }
  if (q < 0) return false;
  w = reduced(w * invmod(w[q], p_), p_);
  if (dim_ > 0) {
    auto top = rows_.topRows(dim_);
    FpVector col = top.col(q);
    if (!col.isZero()) top = reduced(top - col * w.transpose(), p_);
  }
  if (dim_ == rows_.rows()) rows_.conservativeResize(std::max<Index>(8, 2 * dim_), n_);
  rows_.row(dim_) = w.transpose();
  piv_.push_back(q);
  pivmask_[q] = 1;
  ++dim_;
  return true;
}

Index Subspace::insert_columns(const FpMatrix& vs) {
  Index added = 0;
  for (Index j = 0; j < vs.cols(); ++j) added += insert(vs.col(j));
  return added;
}

FpVector Subspace::coordinates(const FpVector& v) const {
  FpVector w = reduced(v, p_), c(dim_);
  for (Index j = 0; j < dim_; ++j) c[j] = w[piv_[j]];
  return c;
}

std::vector<Index> Subspace::free_columns() const {
  std::vector<Index> f;
  for (Index c = 0; c < n_; ++c)
    if (!pivmask_[c]) f.push_back(c);
  return f;
}

Subspace span(const FpMatrix& cols, i64 p, Subspace::Pivot rule) {
  Subspace s(cols.rows(), p, rule);
  s.insert_columns(cols);
  return s;
}

FpMatrix intersect(const FpMatrix& a, const FpMatrix& b, i64 p) {
  // x in span(a) and span(b): a u = b v
  FpMatrix ab(a.rows(), a.cols() + b.cols());
  ab << a, -b;
  FpMatrix ns = nullspace(ab, p);
  FpMatrix v = mul(a, ns.topRows(a.cols()), p);
  Subspace s = span(v, p);
  return s.basis();
}

}  // namespace modp
