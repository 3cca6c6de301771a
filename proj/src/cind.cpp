#include "modp/cind.hpp"

#include "modp/errors.hpp"

namespace modp {

CInd::CInd(i64 p, int r, int s, int N, i64 zeta) : p_(p), r_(r), s_(s), zeta_(normmod(zeta, p)), ball_(p, N) {
  if (r < 0 || r > p - 1) throw DomainError("weight needs 0 <= r <= p-1");
  if (zeta_ == 0) throw DomainError("central character must be a unit");
}

const FpMatrix& CInd::weight(const Mat2& k) const {
  const std::array<i64, 4> key{normmod(k.a(), p_), normmod(k.b(), p_), normmod(k.c(), p_), normmod(k.d(), p_)};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const i64 det = powmod(normmod(key[0] * key[3] - key[1] * key[2], p_), normmod(s_, p_ - 1), p_);
  return cache_[key] = reduced(sym_matrix(key[0], key[1], key[2], key[3], r_, p_) * det, p_);
}

std::vector<CInd::Block> CInd::blocks(const ScaledMat& g, int from) const {
  if (from > radius()) throw DomainError("source ball larger than the target");
  std::vector<Block> out;
  const Index n = TreeBall::ball_size(p_, from);
  out.reserve(size_t(n));
  for (Index j = 0; j < n; ++j) {
    auto loc = ball_.locate(g * ball_.rep(j));
    if (!loc) throw DomainError(g.str() + " moves vertex " + std::to_string(j) + " out of the ball");
    out.push_back({loc->vertex, reduced(weight(loc->k) * powmod(zeta_, loc->e, p_), p_)});
  }
  return out;
}

FpMatrix CInd::translate(const ScaledMat& g, int from) const {
  const auto bl = blocks(g, from);
  FpMatrix m = FpMatrix::Zero(dim(), dim_at(from));
  const Index f = fiber();
  for (size_t j = 0; j < bl.size(); ++j) m.block(bl[j].target * f, Index(j) * f, f, f) = bl[j].m;
  return m;
}

FpMatrix CInd::translate(const Mat2& k) const {
  if (k.level() < radius() + 1) throw LevelError("K acts on the ball of radius N through level N+1");
  return translate(ScaledMat::from(k), radius());
}

FpMatrix CInd::hecke() const {
  if (radius() < 1) throw DomainError("Hecke operator needs radius >= 1");
  const Index f = fiber();
  const Index n = TreeBall::ball_size(p_, radius() - 1);
  FpMatrix m = FpMatrix::Zero(dim(), n * f);
  auto add = [&](Index j, const ScaledMat& h, const FpMatrix& on_weight) {
    auto loc = ball_.locate(ball_.rep(j) * h);
    if (!loc) throw InternalError("Hecke image left the ball");
    m.block(loc->vertex * f, j * f, f, f) += weight(loc->k) * on_weight * powmod(zeta_, loc->e, p_);
  };
  const FpMatrix low = sym_matrix(p_, 0, 0, 1, r_, p_);
  for (Index j = 0; j < n; ++j) {
    for (i64 l = 0; l < p_; ++l) add(j, ScaledMat::make(p_, l, 0, 1, p_), sym_matrix(1, -l, 0, p_, r_, p_));
    add(j, ScaledMat::make(1, 0, 0, p_, p_), low);
  }
  return reduced(m, p_);
}

FpVector CInd::bracket(const ScaledMat& g, const FpVector& v) const {
  auto loc = ball_.locate(g);
  if (!loc) throw DomainError(g.str() + " lies outside the ball");
  FpVector out = FpVector::Zero(dim());
  out.segment(loc->vertex * fiber(), fiber()) = reduced(weight(loc->k) * v * powmod(zeta_, loc->e, p_), p_);
  return out;
}

FpVector CInd::monomial(int i) const {
  FpVector v = FpVector::Zero(fiber());
  v[i] = 1;
  return v;
}

PsQuotient::PsQuotient(i64 p, int r, int s, i64 lambda, int N, i64 zeta)
    : cind_(p, r, s, N, zeta), lambda_(normmod(lambda, p)), rel_(cind_.dim(), p, Subspace::Pivot::Last) {
  if (N < 1) throw DomainError("quotient needs N >= 1");
  FpMatrix rel = cind_.hecke();
  const Index inner = cind_.dim_at(N - 1);
  for (Index j = 0; j < inner; ++j) rel(j, j) -= lambda_;
  rel_.insert_columns(reduced(rel, p));
  kept_ = rel_.free_columns();
  // e_c reduces to itself off the pivots and to -row at a pivot column
  std::vector<Index> slot(size_t(cind_.dim()), -1);
  for (size_t k = 0; k < kept_.size(); ++k) slot[size_t(kept_[k])] = Index(k);
  proj_ = FpMatrix::Zero(dim(), cind_.dim());
  for (size_t k = 0; k < kept_.size(); ++k) proj_(Index(k), kept_[k]) = 1;
  for (Index i = 0; i < rel_.dim(); ++i) {
    const FpVector row = rel_.row(i);
    const Index c = rel_.pivots()[size_t(i)];
    for (Index j = 0; j < row.size(); ++j)
      if (row[j] && slot[size_t(j)] >= 0) proj_(slot[size_t(j)], c) = normmod(-row[j], p);
  }
}

FpMatrix PsQuotient::project(const FpMatrix& ambient) const { return mul(proj_, ambient, prime()); }

FpMatrix PsQuotient::lift(const FpMatrix& q) const {
  FpMatrix out = FpMatrix::Zero(cind_.dim(), q.cols());
  for (size_t k = 0; k < kept_.size(); ++k) out.row(kept_[k]) = q.row(Index(k));
  return out;
}

FpMatrix PsQuotient::action(const Mat2& k) const {
  if (k.level() < radius() + 1) throw LevelError("K acts on pi^(N) through level N+1");
  const i64 p = prime();
  const Index f = cind_.fiber();
  const auto bl = cind_.blocks(ScaledMat::from(k), radius());
  FpMatrix out(dim(), dim());
  for (size_t c = 0; c < kept_.size(); ++c) {
    const Index j = kept_[c] / f, i = kept_[c] % f;
    const auto& b = bl[size_t(j)];
    out.col(Index(c)) = proj_.middleCols(b.target * f, f) * b.m.col(i);
  }
  return reduced(out, p);
}

Subspace PsQuotient::image_of_ball(int m) const {
  return span(proj_.leftCols(cind_.dim_at(std::min(m, radius()))), prime());
}

int PsQuotient::support_radius(const FpVector& q) const {
  const FpMatrix l = lift(q);
  for (Index i = l.rows() - 1; i >= 0; --i)
    if (l(i, 0)) return cind_.ball().vertex(i / cind_.fiber()).radius;
  return -1;
}

KModule quotient_module(const std::shared_ptr<const PsQuotient>& q, const SubgroupId& group) {
  auto act = [q](const Mat2& g) { return q->action(g); };
  return KModule::from_action(group, q->prime(), q->radius() + 1, q->dim(), act,
                              "pi^(" + std::to_string(q->radius()) + ")(r=" + std::to_string(q->cind().r()) +
                                  ", lambda=" + std::to_string(q->lambda()) + ")");
}

HeckeReport hecke_check(i64 p, int r, int s, i64 lambda, int N) {
  CInd outer(p, r, s, N), inner(p, r, s, N - 1);
  const FpMatrix t = outer.hecke();
  HeckeReport rep;
  rep.k_equivariant = true;
  for (const Mat2& g : generators(groups::K(), p, N + 1).all())
    if (mul(outer.translate(g), t, p) != mul(t, inner.translate(g.reduce(N)), p)) rep.k_equivariant = false;
  rep.invariant_formula = true;
  if (r >= 1) {
    FpVector sum = FpVector::Zero(outer.dim());
    for (i64 l = 0; l < p; ++l) sum += outer.bracket(ScaledMat::make(p, l, 0, 1, p), outer.monomial(r));
    rep.invariant_formula = FpVector(reduced(sum, p)) == FpVector(t.col(inner.index(0, r)));
  }
  rep.origin_support = N < 2 || t.block(outer.dim_at(1), 0, outer.dim() - outer.dim_at(1), outer.fiber()).isZero();
  FpMatrix tl = t;
  for (Index j = 0; j < inner.dim(); ++j) tl(j, j) -= normmod(lambda, p);
  rep.rank = rank(reduced(tl, p), p);
  rep.inner_dim = inner.dim();
  if (!rep.k_equivariant) throw InternalError("Hecke operator is not K-equivariant");
  return rep;
}

QuotientReport ps_quotient_check(i64 p, int r, int s, i64 lambda, int N) {
  PsQuotient q(p, r, s, lambda, N), q2(p, r, s, lambda, N + 1);
  QuotientReport rep;
  rep.dim = q.dim();
  rep.expected_dim = q.cind().dim() - q.cind().dim_at(N - 1);
  rep.relations_injective = q.relations_injective();
  FpMatrix up = FpMatrix::Zero(q2.cind().dim(), q.dim());
  up.topRows(q.cind().dim()) = q.lift(identity(q.dim()));
  rep.stabilization_injective = rank(q2.project(up), p) == q.dim();
  const FpVector x = q.bracket(ScaledMat::make(1, 0, 0, 1, p), q.cind().monomial(r));
  rep.x_iw1_invariant = true;
  for (const Mat2& g : generators(groups::Iw1(), p, N + 1).all())
    if (FpVector(mul(q.action(g), x, p)) != x) rep.x_iw1_invariant = false;
  return rep;
}

SummandReport ss_summands(const PsQuotient& q) {
  if (q.lambda() != 0) throw DomainError("parity summands need lambda = 0");
  const i64 p = q.prime();
  const CInd& c = q.cind();
  std::vector<Index> even, odd;
  for (Index i = 0; i < c.dim(); ++i) (c.ball().vertex(i / c.fiber()).radius % 2 ? odd : even).push_back(i);
  auto image = [&](const std::vector<Index>& idx) {
    FpMatrix e = FpMatrix::Zero(c.dim(), Index(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) e(idx[k], Index(k)) = 1;
    return span(q.project(e), p);
  };
  Subspace ev = image(even), od = image(odd);
  SummandReport rep;
  rep.even_dim = ev.dim();
  rep.odd_dim = od.dim();
  Subspace all = ev;
  all.insert_columns(od.basis());
  rep.direct = all.dim() == q.dim() && ev.dim() + od.dim() == q.dim();
  const FpVector v = q.bracket(ScaledMat::make(1, 0, 0, 1, p), c.monomial(c.r()));
  rep.v_sigma_even = ev.contains(v);
  rep.pi_v_sigma_odd = od.contains(q.bracket(Pi(p), c.monomial(c.r())));
  std::vector<FpMatrix> k1;
  for (const Mat2& g : generators(groups::Ki(1), p, q.radius() + 1).all()) k1.push_back(q.action(g));
  const FpMatrix fixed = fixed_vectors(k1, q.dim(), p);
  const FpMatrix stable = q.image_of_ball(q.radius() - 1).basis();
  const FpMatrix fs = intersect(fixed, stable, p);
  rep.k1_even_stable = rank(intersect(fs, ev.basis(), p), p);
  rep.k1_odd_stable = rank(intersect(fs, od.basis(), p), p);
  if (!rep.direct) throw TheoremViolation("parity summands do not split pi^(N)");
  return rep;
}

std::map<WeightLabel, WeightMultiplicity> socle_weights(const std::shared_ptr<const PsQuotient>& q) {
  const i64 p = q->prime();
  const int level = q->radius() + 1;
  KModule target = quotient_module(q, groups::K());
  // weights are K1-trivial, so every map lands in the K1-invariants
  std::vector<FpMatrix> k1;
  for (const Mat2& g : generators(groups::Ki(1), p, level).all()) k1.push_back(target.action(g));
  const Submodule inv = submodule(target, span(fixed_vectors(k1, target.dim(), p), p));
  const KModule low = KModule::from_action(
      groups::K(), p, 1, inv.basis.dim(), [&inv, level](const Mat2& g) { return inv.module.action(g.lift(level)); });
  Subspace stable = q->image_of_ball(q->radius() - 1);
  std::map<WeightLabel, WeightMultiplicity> out;
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p - 1; ++s) {
      auto homs = hom_space(serre_weight(r, s, p), low);
      if (homs.empty()) continue;
      const Index d = q->dim() * (r + 1);
      FpMatrix off(d, Index(homs.size()));
      for (size_t k = 0; k < homs.size(); ++k) {
        FpMatrix rest = stable.reduce_columns(mul(inv.basis.basis(), homs[k], p));
        off.col(Index(k)) = Eigen::Map<const FpVector>(rest.data(), d);
      }
      const Index total = Index(homs.size());
      out[WeightLabel{r, s}] = {total, total - rank(off, p)};
    }
  return out;
}

Index e_recursion(i64 p, int r, int n) {
  Index e = 0;
  for (int k = 1; k <= n; ++k) e = r + p * (p - 1 - r) + p * p * e;
  return e;
}

MReport m_sigma_n(i64 p, int r, int n, int N) {
  if (N < 0) N = 2 * n + 1;
  if (N < 2 * n + 1) throw DomainError("M_{sigma,n} needs N >= 2n+1");
  auto q = std::make_shared<const PsQuotient>(p, r, 0, 0, N);
  ScaledMat t2n = ScaledMat::make(1, 0, 0, 1, p);
  for (int k = 0; k < 2 * n; ++k) t2n = t2n * t_elem(p);
  const FpVector gen = q->bracket(t2n, q->cind().monomial(r));
  KModule bmod = quotient_module(q, groups::B()), iwmod = quotient_module(q, groups::Iw());
  Subspace mb = spin_subspace(bmod, gen), miw = spin_subspace(iwmod, gen);
  MReport rep;
  rep.n = n;
  rep.N = N;
  rep.dim = mb.dim();
  rep.expected = e_recursion(p, r, n) + 1;
  rep.iw_equals_b = mb.dim() == miw.dim();
  for (Index j = 0; rep.iw_equals_b && j < mb.dim(); ++j) rep.iw_equals_b = miw.contains(mb.row(j));
  Submodule sub = submodule(iwmod, miw);
  FiltrationReport f = socle_filtration(sub.module);
  rep.uniserial = f.uniserial;
  for (const auto& l : f.layers) rep.socle_layers.push_back(l.labels.at(0));
  if (rep.dim != rep.expected || !rep.iw_equals_b || !rep.uniserial)
    throw TheoremViolation("M_{sigma," + std::to_string(n) + "} has dimension " + std::to_string(rep.dim) +
                           " (expected " + std::to_string(rep.expected) + ")" +
                           (rep.uniserial ? "" : ", not uniserial"));
  return rep;
}

ContainmentReport ss_containment_check(i64 p, int r, int n) {
  ContainmentReport rep;
  rep.n = n;
  rep.N = 2 * n + 2;
  auto q = std::make_shared<const PsQuotient>(p, r, 0, 0, rep.N);
  const int level = rep.N + 1;
  auto tpow = [p](int k) {
    ScaledMat m = ScaledMat::make(1, 0, 0, 1, p);
    for (int i = 0; i < k; ++i) m = m * t_elem(p);
    return m;
  };
  const FpVector x = q->cind().monomial(r);
  KModule bmod = quotient_module(q, groups::B());
  Subspace m_n = spin_subspace(bmod, q->bracket(tpow(2 * n), x));
  Subspace m_next = spin_subspace(bmod, q->bracket(tpow(2 * n + 2), x));
  // t M_{sigma^[s],n} is the span of t B t^{-1} applied to t^(2n+1) Pi [1, x^r]
  std::vector<FpMatrix> conj;
  for (const Mat2& b : generators(groups::B(), p, level).all())
    conj.push_back(q->action(Mat2(b.a(), p * b.b(), 0, b.d(), p, level)));
  Subspace img = spin_subspace(conj, q->bracket(tpow(2 * n + 1) * Pi(p), x), p);
  auto inside = [&](const Subspace& big) {
    for (Index j = 0; j < img.dim(); ++j)
      if (!big.contains(img.row(j))) return false;
    return true;
  };
  rep.same_depth = inside(m_n);
  rep.next_depth = inside(m_next);
  if (!rep.same_depth && !rep.next_depth)
    throw TheoremViolation("s Pi M_{sigma^[s]," + std::to_string(n) + "} is not inside M_{sigma," +
                           std::to_string(n + 1) + "} in pi^(" + std::to_string(rep.N) + ")");
  return rep;
}

ExchangeReport exchange_check(i64 p, int r, i64 lambda1, i64 lambda2, int n, int N) {
  if (N < 0) N = n + 2;
  if (N < n + 2) throw DomainError("exchange check needs N >= n+2");
  if (normmod(lambda1, p) == 0 || normmod(lambda2, p) == 0) throw DomainError("exchange check needs units");
  auto q1 = std::make_shared<const PsQuotient>(p, r, 0, lambda1, N);
  auto q2 = std::make_shared<const PsQuotient>(p, r, 0, lambda2, N);
  KModule m1 = quotient_module(q1, groups::K()), m2 = quotient_module(q2, groups::K());
  const FpVector xr = q1->cind().monomial(r);
  const ScaledMat one = ScaledMat::make(1, 0, 0, 1, p);
  auto y = [&](const PsQuotient& q, int m) { return q.bracket(ScaledMat::make(0, 1, ipow(p, m + 1), 0, p), xr); };
  Submodule s = spin(m1, y(*q1, N - 1));
  ExchangeReport rep;
  rep.N = N;
  rep.source_dim = s.module.dim();
  auto coords = [&](const FpVector& v) {
    if (!s.basis.contains(v)) throw InconclusiveTruncation("vector outside <K y_(N-1)> at N = " + std::to_string(N));
    return s.basis.coordinates(v);
  };
  const auto homs = hom_space(s.module, m2);
  rep.hom_dim = Index(homs.size());
  const FpVector x1 = coords(q1->bracket(one, xr)), x2 = q2->bracket(one, xr);
  // sum_k c_k Phi_k x1 = x2
  FpMatrix a(m2.dim(), Index(homs.size()));
  for (size_t k = 0; k < homs.size(); ++k) a.col(Index(k)) = mul(homs[k], x1, p);
  auto c = solve(a, x2, p);
  if (!c) throw InconclusiveTruncation("no K-map with alpha(x1) = x2 at N = " + std::to_string(N));
  const FpMatrix free = nullspace(a, p);
  rep.solutions = free.cols();
  auto apply = [&](const FpVector& coeff, const FpVector& v) {
    FpVector out = FpVector::Zero(m2.dim());
    for (size_t k = 0; k < homs.size(); ++k) out += homs[k] * v * coeff[Index(k)];
    return FpVector(reduced(out, p));
  };
  for (int m = 0; m <= n; ++m) {
    const FpVector ym = coords(y(*q1, m)), y2 = y(*q2, m);
    const FpVector img = apply(c->col(0), ym);
    Index piv = -1;
    for (Index i = 0; i < y2.size() && piv < 0; ++i)
      if (y2[i]) piv = i;
    if (piv < 0) throw InconclusiveTruncation("y_m vanishes in the target truncation");
    const i64 xi = mulmod(img[piv], invmod(y2[piv], p), p);
    if (FpVector(reduced(y2 * xi, p)) != img)
      throw TheoremViolation("alpha(y_" + std::to_string(m) + ") is not a multiple of y_" + std::to_string(m));
    for (Index j = 0; j < free.cols(); ++j)
      if (!apply(free.col(j), ym).isZero())
        throw InconclusiveTruncation("alpha(y_" + std::to_string(m) + ") not determined at N = " + std::to_string(N));
    rep.scalars.push_back(xi);
    rep.expected.push_back(mulmod(powmod(lambda1, m + 1, p), powmod(lambda2, -(m + 1), p), p));
    if (rep.scalars.back() != rep.expected.back())
      throw TheoremViolation("exchange scalar " + std::to_string(xi) + " differs from " +
                             std::to_string(rep.expected.back()) + " at m = " + std::to_string(m));
  }
  return rep;
}

bool intertwining_check(i64 p, int r, i64 lambda, int N) {
  PsQuotient a(p, r, 0, lambda, N), b(p, r, 0, -lambda, N);
  const CInd& c = a.cind();
  FpMatrix d = a.lift(identity(a.dim()));
  for (Index i = 0; i < c.dim(); ++i)
    if (c.ball().vertex(i / c.fiber()).radius % 2) d.row(i) *= -1;
  const FpMatrix map = b.project(reduced(d, p));
  if (rank(map, p) != a.dim()) return false;
  for (const Mat2& g : generators(groups::K(), p, N + 1).all())
    if (mul(map, a.action(g), p) != mul(b.action(g), map, p)) return false;
  return true;
}

}  // namespace modp
