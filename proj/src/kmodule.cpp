#include "modp/kmodule.hpp"

#include <deque>

#include "modp/errors.hpp"

namespace modp {

CharacterH CharacterH::make(i64 p, i64 x, i64 y) {
  CharacterH c;
  c.p = p;
  c.x = int(normmod(x, p - 1));
  c.y = int(normmod(y, p - 1));
  return c;
}

i64 CharacterH::eval(const Mat2& g) const {
  return mulmod(powmod(g.a() % p, x, p), powmod(g.d() % p, y, p), p);
}

std::string CharacterH::str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

CharacterH alpha(i64 p) { return CharacterH::make(p, 1, -1); }

std::string WeightLabel::str() const { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

KModule::KModule(SubgroupId group, i64 p, int level, Index dim, std::vector<FpMatrix> gen_actions,
                 ElementAction act, std::string provenance)
    : group_(group), p_(p), level_(level), dim_(dim), acts_(std::move(gen_actions)),
      act_(std::move(act)), prov_(std::move(provenance)) {
  if (acts_.size() != gens().size())
    throw InternalError("module needs one matrix per generator of " + group_.name());
  for (const auto& a : acts_)
    if (a.rows() != dim_ || a.cols() != dim_) throw InternalError("generator matrix of wrong size");
}

KModule KModule::from_action(SubgroupId group, i64 p, int level, Index dim, ElementAction act,
                             std::string provenance) {
  std::vector<FpMatrix> mats;
  for (const Mat2& g : generators(group, p, level).all()) mats.push_back(act(g));
  return KModule(group, p, level, dim, std::move(mats), std::move(act), std::move(provenance));
}

FpMatrix KModule::action(const Mat2& g0) const {
  if (g0.level() < level_) throw LevelError("element given below the module level");
  if (g0.prime() != p_) throw DomainError("element over the wrong prime");
  Mat2 g = g0.reduce(level_);
  if (!is_member(g, group_)) throw DomainError(g.str() + " is not in " + group_.name());
  if (act_) return act_(g);
  if (g == Mat2::identity(p_, level_)) return identity(dim_);
  const auto all = gens().all();
  for (size_t k = 0; k < all.size(); ++k)
    if (all[k] == g) return acts_[k];
  throw InternalError("module has no action for " + g.str());
}

void KModule::validate() const {
  const auto all = gens().all();
  for (size_t k = 0; k < acts_.size(); ++k) {
    if (modp::rank(acts_[k], p_) != dim_) throw InternalError("non-invertible generator action");
    if (act_ && act_(all[k]) != acts_[k]) throw InternalError("element action disagrees with generators");
  }
}

bool ModuleMap::is_equivariant() const {
  const KModule& s = *source;
  const KModule& t = *target;
  if (!(s.group() == t.group()) || s.level() != t.level() || s.prime() != t.prime())
    throw DomainError("module map between different groups");
  if (matrix.rows() != t.dim() || matrix.cols() != s.dim()) throw InternalError("map of wrong shape");
  const i64 p = s.prime();
  for (size_t k = 0; k < s.actions().size(); ++k)
    if (mul(matrix, s.gen_action(k), p) != mul(t.gen_action(k), matrix, p)) return false;
  return true;
}

KModule character_module(const CharacterH& chi, const SubgroupId& group, int level) {
  auto act = [chi](const Mat2& g) {
    FpMatrix m(1, 1);
    m(0, 0) = chi.eval(g);
    return m;
  };
  return KModule::from_action(group, chi.p, level, 1, act, "character " + chi.str() + " of " + group.name());
}

namespace {

// coefficients of (u x + v y)^k indexed by the x-degree
std::vector<i64> linear_power(i64 u, i64 v, int k, i64 p) {
  std::vector<i64> c(k + 1, 0);
  std::vector<i64> binom(k + 1, 0);
  binom[0] = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j >= 1; --j) binom[j] = (binom[j] + binom[j - 1]) % p;
  for (int j = 0; j <= k; ++j) c[j] = mulmod(binom[j], mulmod(powmod(u, j, p), powmod(v, k - j, p), p), p);
  return c;
}

}  // namespace

FpMatrix sym_matrix(i64 a, i64 b, i64 c, i64 d, int n, i64 p) {
  a = normmod(a, p), b = normmod(b, p), c = normmod(c, p), d = normmod(d, p);
  FpMatrix m = FpMatrix::Zero(n + 1, n + 1);
  // x^i y^(n-i) -> (a x + c y)^i (b x + d y)^(n-i)
  for (int i = 0; i <= n; ++i) {
    auto f = linear_power(a, c, i, p);
    auto h = linear_power(b, d, n - i, p);
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= n - i; ++k) m(j + k, i) = (m(j + k, i) + f[j] * h[k]) % p;
  }
  return m;
}

KModule sym_power(int n, int s, i64 p) {
  auto act = [n, s, p](const Mat2& g) {
    const i64 det = powmod(normmod(g.det(), p), normmod(s, p - 1), p);
    return reduced(sym_matrix(g.a(), g.b(), g.c(), g.d(), n, p) * det, p);
  };
  KModule m = KModule::from_action(groups::K(), p, 1, n + 1, act,
                                   "Sym^" + std::to_string(n) + " x det^" + std::to_string(s));
  for (int i = 0; i <= n; ++i)
    m.basis_labels.push_back("x^" + std::to_string(i) + " y^" + std::to_string(n - i));
  return m;
}

KModule serre_weight(int r, int s, i64 p) {
  if (r < 0 || r > p - 1) throw DomainError("Serre weight needs 0 <= r <= p-1");
  return sym_power(r, int(normmod(s, p - 1)), p);
}

ModuleMap weight_inclusion(int r, i64 p) {
  auto src = std::make_shared<KModule>(serre_weight(r, 1, p));
  auto tgt = std::make_shared<KModule>(sym_power(int(p) + 1 + r, 0, p));
  FpMatrix m = FpMatrix::Zero(tgt->dim(), src->dim());
  // x^(r-i) y^i -> X^(p+r-i) Y^(i+1) - X^(r+1-i) Y^(p+i)
  for (int i = 0; i <= r; ++i) {
    m(p + r - i, r - i) = 1;
    m(r + 1 - i, r - i) = p - 1;
  }
  return {src, tgt, m};
}

KModule induce(const KModule& w, const SubgroupId& big, int level) {
  if (!w.has_element_action()) throw DomainError("induction needs an element action on the inducing module");
  if (level < w.level()) throw LevelError("induction below the level of the inducing module");
  const SubgroupId small = w.group();
  const i64 p = w.prime();
  auto reps = std::make_shared<std::vector<Mat2>>(coset_reps(big, small, p, level));
  const Index d = w.dim();
  const Index n = Index(reps->size()) * d;
  auto act = [w, big, small, reps, d, n](const Mat2& g) {
    FpMatrix m = FpMatrix::Zero(n, n);
    const Mat2 gi = g.inverse();
    for (size_t k = 0; k < reps->size(); ++k) {
      CosetFactor f = coset_factor(big, small, (*reps)[k] * gi);
      m.block(Index(f.rep) * d, Index(k) * d, d, d) = w.action(f.h.inverse());
    }
    return m;
  };
  KModule out = KModule::from_action(big, p, level, n, act,
                                     "Ind_" + small.name() + "^" + big.name() + "(" + w.provenance() + ")");
  for (size_t k = 0; k < reps->size(); ++k)
    for (Index e = 0; e < d; ++e) out.basis_labels.push_back("f" + (*reps)[k].str() + "#" + std::to_string(e));
  return out;
}

KModule induce(const CharacterH& chi, const SubgroupId& small, const SubgroupId& big, int level) {
  KModule out = induce(character_module(chi, small, level), big, level);
  out.set_provenance("Ind_" + small.name() + "^" + big.name() + " " + chi.str());
  return out;
}

KModule restrict_to(const KModule& m, const SubgroupId& sub) {
  if (!m.has_element_action()) throw DomainError("restriction needs an element action");
  return KModule::from_action(sub, m.prime(), m.level(), m.dim(), m.element_action(),
                              "Res_" + sub.name() + " " + m.provenance());
}

KModule inflate(const KModule& m, int level) {
  if (level < m.level()) throw LevelError("inflation below the module level");
  if (level == m.level()) return m;
  if (!m.has_element_action()) throw DomainError("inflation needs an element action");
  auto act = [base = m.element_action(), l0 = m.level()](const Mat2& g) { return base(g.reduce(l0)); };
  KModule out = KModule::from_action(m.group(), m.prime(), level, m.dim(), act, m.provenance());
  out.basis_labels = m.basis_labels;
  return out;
}

SubgroupId twisted_group(const SubgroupId& s) {
  switch (s.kind) {
    case GroupKind::Iw:
    case GroupKind::Iw1: return s;
    case GroupKind::K0: return groups::K0plus(s.i);
    case GroupKind::K0plus: return s.i == 1 ? groups::Iw() : groups::K0(s.i);
    default: throw DomainError("Pi does not normalise " + s.name());
  }
}

KModule twist_by_pi(const KModule& m) {
  if (!m.has_element_action()) throw DomainError("twist by Pi needs an element action");
  SubgroupId g = twisted_group(m.group());
  auto base = m.element_action();
  auto act = [base](const Mat2& x) { return base(conj_by_pi(x)); };
  KModule out = KModule::from_action(g, m.prime(), m.level() + 1, m.dim(), act, "Pi-twist of " + m.provenance());
  out.basis_labels = m.basis_labels;
  return out;
}

Subspace spin_subspace(const std::vector<FpMatrix>& mats, const FpMatrix& vectors, i64 p) {
  Subspace s(vectors.rows(), p);
  std::deque<FpVector> todo;
  for (Index j = 0; j < vectors.cols(); ++j)
    if (s.insert(vectors.col(j))) todo.push_back(vectors.col(j));
  while (!todo.empty()) {
    FpVector v = todo.front();
    todo.pop_front();
    for (const auto& a : mats) {
      FpVector w = reduced(a * v, p);
      if (s.insert(w)) todo.push_back(w);
    }
    if (s.dim() == s.ambient_dim()) break;
  }
  return s;
}

Subspace spin_subspace(const KModule& m, const FpMatrix& vectors) {
  return spin_subspace(m.actions(), vectors, m.prime());
}

Submodule submodule(const KModule& m, const Subspace& s) {
  const i64 p = m.prime();
  auto sub = std::make_shared<Subspace>(s);
  auto restrict = [sub, p](const FpMatrix& a) {
    FpMatrix img = mul(a, sub->basis(), p);
    FpMatrix c(sub->dim(), sub->dim());
    for (Index j = 0; j < img.cols(); ++j) {
      if (!sub->contains(img.col(j))) throw InternalError("subspace is not a submodule");
      c.col(j) = sub->coordinates(img.col(j));
    }
    return c;
  };
  std::vector<FpMatrix> mats;
  for (const auto& a : m.actions()) mats.push_back(restrict(a));
  ElementAction act;
  if (m.has_element_action()) {
    auto base = m.element_action();
    act = [base, restrict](const Mat2& g) { return restrict(base(g)); };
  }
  return {s, KModule(m.group(), p, m.level(), s.dim(), std::move(mats), act, "submodule of " + m.provenance())};
}

Submodule spin(const KModule& m, const FpMatrix& vectors) { return submodule(m, spin_subspace(m, vectors)); }

Quotient quotient(const KModule& m, const Subspace& s) {
  const i64 p = m.prime();
  auto sub = std::make_shared<Subspace>(s);
  auto kept = std::make_shared<std::vector<Index>>(s.free_columns());
  auto project = [sub, kept](const FpMatrix& a) {
    FpMatrix r = sub->reduce_columns(a);
    FpMatrix out(Index(kept->size()), a.cols());
    for (size_t i = 0; i < kept->size(); ++i) out.row(Index(i)) = r.row((*kept)[i]);
    return out;
  };
  auto act_on = [project, kept](const FpMatrix& a) {
    FpMatrix cols(a.rows(), Index(kept->size()));
    for (size_t j = 0; j < kept->size(); ++j) cols.col(Index(j)) = a.col((*kept)[j]);
    return project(cols);
  };
  std::vector<FpMatrix> mats;
  for (const auto& a : m.actions()) mats.push_back(act_on(a));
  ElementAction act;
  if (m.has_element_action()) {
    auto base = m.element_action();
    act = [base, act_on](const Mat2& g) { return act_on(base(g)); };
  }
  Quotient q{KModule(m.group(), p, m.level(), Index(kept->size()), std::move(mats), act,
                     "quotient of " + m.provenance()),
             *kept, project(identity(m.dim()))};
  return q;
}

KModule direct_sum(const KModule& a, const KModule& b) {
  if (!(a.group() == b.group()) || a.level() != b.level() || a.prime() != b.prime())
    throw DomainError("direct sum of modules over different groups");
  auto blk = [](const FpMatrix& x, const FpMatrix& y) {
    FpMatrix m = FpMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
    m.topLeftCorner(x.rows(), x.cols()) = x;
    m.bottomRightCorner(y.rows(), y.cols()) = y;
    return m;
  };
  std::vector<FpMatrix> mats;
  for (size_t k = 0; k < a.actions().size(); ++k) mats.push_back(blk(a.gen_action(k), b.gen_action(k)));
  ElementAction act;
  if (a.has_element_action() && b.has_element_action()) {
    auto fa = a.element_action(), fb = b.element_action();
    act = [fa, fb, blk](const Mat2& g) { return blk(fa(g), fb(g)); };
  }
  return KModule(a.group(), a.prime(), a.level(), a.dim() + b.dim(), std::move(mats), act,
                 a.provenance() + " + " + b.provenance());
}

KModule dual(const KModule& m) {
  const i64 p = m.prime();
  auto dl = [p](const FpMatrix& a) { return FpMatrix(inverse(a, p).transpose()); };
  std::vector<FpMatrix> mats;
  for (const auto& a : m.actions()) mats.push_back(dl(a));
  ElementAction act;
  if (m.has_element_action()) {
    auto base = m.element_action();
    act = [base, dl](const Mat2& g) { return dl(base(g)); };
  }
  return KModule(m.group(), p, m.level(), m.dim(), std::move(mats), act, "dual of " + m.provenance());
}

}  // namespace modp
