#include "modp/tree.hpp"

#include "modp/errors.hpp"
#include "modp/subgroup.hpp"

namespace modp {

namespace {

using i128 = __int128;

int val128(i128 x, i64 p) {
  if (x == 0) return 1 << 20;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

i64 mod128(i128 x, i64 m) {
  i128 r = x % m;
  return i64(r < 0 ? r + m : r);
}

}  // namespace

Index TreeBall::ball_size(i64 p, int N) {
  if (N < 0) return 0;
  return 1 + (p + 1) * (ipow(p, N) - 1) / (p - 1);
}

TreeBall::TreeBall(i64 p, int N) : p_(p), N_(N) {
  if (N < 0) throw DomainError("negative ball radius");
  v_.push_back({0, true, 0, -1});
  for (int n = 1; n <= N; ++n) {
    const i64 q = ipow(p, n), q1 = ipow(p, n - 1);
    for (i64 mu = 0; mu < q; ++mu) v_.push_back({n, true, mu, n == 1 ? 0 : index_of(true, n - 1, mu % q1)});
    for (i64 nu = 0; nu < q; nu += p) v_.push_back({n, false, nu, n == 1 ? 0 : index_of(false, n - 1, nu % q1)});
  }
}

Index TreeBall::sphere_begin(int n) const { return n <= 0 ? 0 : ball_size(p_, n - 1); }

Index TreeBall::index_of(bool upper, int n, i64 label) const {
  if (n == 0) return 0;
  const Index base = sphere_begin(n);
  return upper ? base + label : base + ipow(p_, n) + label / p_;
}

ScaledMat TreeBall::rep(Index i) const {
  const Vertex& v = vertex(i);
  const i64 q = ipow(p_, v.radius);
  return v.upper ? ScaledMat::make(q, v.label, 0, 1, p_) : ScaledMat::make(1, 0, v.label, q, p_);
}

std::optional<Located> TreeBall::locate(const ScaledMat& g) const {
  const i64 p = p_;
  i128 a = g.m[0], b = g.m[1], c = g.m[2], d = g.m[3];
  const int e0 = std::min(std::min(val128(a, p), val128(b, p)), std::min(val128(c, p), val128(d, p)));
  for (int k = 0; k < e0; ++k) a /= p, b /= p, c /= p, d /= p;
  const int n = val128(a * d - b * c, p);
  Located out;
  out.e = e0 + g.shift;
  if (n > N_) return std::nullopt;
  const i64 q = ipow(p, n);
  auto unit = [p](i128 x) { return mod128(x, p) != 0; };
  i128 k[4];
  if (n == 0) {
    k[0] = a, k[1] = b, k[2] = c, k[3] = d;
    out.vertex = 0;
  } else if (unit(c) || unit(d)) {
    const i64 mu = unit(c) ? mulmod(mod128(a, q), invmod(mod128(c, q), q), q)
                           : mulmod(mod128(b, q), invmod(mod128(d, q), q), q);
    k[0] = (a - i128(mu) * c) / q;
    k[1] = (b - i128(mu) * d) / q;
    k[2] = c;
    k[3] = d;
    out.vertex = index_of(true, n, mu);
  } else {
    const i64 nu = unit(a) ? mulmod(mod128(c, q), invmod(mod128(a, q), q), q)
                           : mulmod(mod128(d, q), invmod(mod128(b, q), q), q);
    k[0] = a;
    k[1] = b;
    k[2] = (c - i128(nu) * a) / q;
    k[3] = (d - i128(nu) * b) / q;
    out.vertex = index_of(false, n, nu);
  }
  out.k = Mat2(mod128(k[0], p), mod128(k[1], p), mod128(k[2], p), mod128(k[3], p), p, 1);
  if (!out.k.invertible()) throw InternalError("normal form produced a non-unit cocycle");
  return out;
}

ScaledMat TreeBall::edge_rep(Index i) const {
  if (i == 0) throw DomainError("the origin has no parent edge");
  return vertex(i).upper ? rep(i) : rep(i) * s_elem(p_);
}

BallReport ball_check(i64 p, int N) {
  TreeBall ball(p, N);
  BallReport r;
  r.sizes = ball.size() == TreeBall::ball_size(p, N);
  for (int n = 0; n <= N; ++n) {
    r.sphere_sizes.push_back(ball.sphere_begin(n + 1) - ball.sphere_begin(n));
    if (r.sphere_sizes.back() != (n == 0 ? 1 : (p + 1) * ipow(p, n - 1))) r.sizes = false;
  }
  r.parents = true;
  for (Index i = 1; i < ball.size(); ++i) {
    auto up = ball.locate(ball.edge_rep(i) * Pi(p));
    auto here = ball.locate(ball.edge_rep(i));
    if (!up || !here || up->vertex != ball.vertex(i).parent || here->vertex != i) r.parents = false;
    if (ball.vertex(ball.vertex(i).parent).radius != ball.vertex(i).radius - 1) r.parents = false;
  }
  r.k_spheres = true;
  for (const Mat2& g : generators(groups::K(), p, N + 1).all()) {
    std::vector<char> hit(size_t(ball.size()), 0);
    for (Index i = 0; i < ball.size(); ++i) {
      auto l = ball.locate(ScaledMat::from(g) * ball.rep(i));
      if (!l || ball.vertex(l->vertex).radius != ball.vertex(i).radius || hit[size_t(l->vertex)]) {
        r.k_spheres = false;
        break;
      }
      hit[size_t(l->vertex)] = 1;
    }
  }
  r.pi_involution = true;
  TreeBall bigger(p, N + 1);
  for (Index i = 0; i < ball.size(); ++i) {
    auto once = bigger.locate(Pi(p) * ball.rep(i));
    if (!once) throw InternalError("Pi left the enlarged ball");
    const int d = bigger.vertex(once->vertex).radius - ball.vertex(i).radius;
    auto twice = bigger.locate(Pi(p) * bigger.rep(once->vertex));
    if ((d != 1 && d != -1) || !twice || twice->vertex != i) r.pi_involution = false;
  }
  return r;
}

TreeComplexReport tree_complex_check(i64 p, int N) {
  TreeBall ball(p, N);
  TreeComplexReport r;
  r.vertices = ball.size();
  r.edges = ball.size() - 1;
  FpMatrix del = FpMatrix::Zero(r.vertices, r.edges);
  for (Index i = 1; i < ball.size(); ++i) {
    auto from = ball.locate(ball.edge_rep(i));
    auto to = ball.locate(ball.edge_rep(i) * Pi(p));
    if (!from || !to) throw InternalError("edge leaves the ball");
    del(from->vertex, i - 1) += 1;
    del(to->vertex, i - 1) += p - 1;
  }
  del = reduced(del, p);
  r.rank_boundary = rank(del, p);
  r.injective = r.rank_boundary == r.edges;
  const FpMatrix sum = FpMatrix::Ones(1, r.vertices);
  const bool composite_zero = mul(sum, del, p).isZero();
  // ker(sum) has dimension vertices - 1
  r.exact = composite_zero && r.injective && r.rank_boundary == r.vertices - 1;
  if (!r.exact) throw TheoremViolation("tree complex is not exact on the ball of radius " + std::to_string(N));
  return r;
}

}  // namespace modp
