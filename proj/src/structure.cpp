#include "modp/structure.hpp"

#include <deque>

#include "modp/errors.hpp"

namespace modp {

std::string label_str(const Label& l) {
  return std::visit([](const auto& x) { return x.str(); }, l);
}

std::vector<Label> SocleResult::labels() const {
  std::vector<Label> out;
  for (const auto& c : components)
    for (Index k = 0; k < c.basis.cols(); ++k) out.push_back(c.label);
  return out;
}

FpMatrix fixed_vectors(const std::vector<FpMatrix>& mats, Index dim, i64 p) {
  // kernels intersected one generator at a time, each on the previous kernel
  FpMatrix basis = identity(dim);
  for (const auto& a : mats) {
    if (basis.cols() == 0) break;
    FpMatrix moved = reduced(mul(a, basis, p) - basis, p);
    basis = mul(basis, nullspace(moved, p), p);
  }
  return basis;
}

namespace {

// Echelon basis that remembers each row as a combination of raw vectors.
class TrackedBasis {
 public:
  TrackedBasis(Index n, Index cap, i64 p) : n_(n), cap_(cap), p_(p), R_(cap, n), T_(cap, cap) {}
  Index dim() const { return k_; }
  // returns true and records v as raw vector k_ if independent; otherwise
  // fills coef with v in terms of earlier raw vectors
  bool insert(const FpVector& v, FpVector& coef) {
    FpVector w = reduced(v, p_);
    FpVector t = FpVector::Zero(cap_);
    for (Index k = 0; k < k_; ++k) {
      i64 c = w[piv_[k]];
      if (!c) continue;
      w = reduced(w - c * R_.row(k).transpose(), p_);
      t = reduced(t + c * T_.row(k).transpose(), p_);
    }
    Index q = -1;
    for (Index i = 0; i < n_; ++i)
      if (w[i]) { q = i; break; }
    if (q < 0) {
      coef = t;
      return false;
    }
    // w = v - sum c_k row_k, so row_new = s (e_raw - t)
    i64 s = invmod(w[q], p_);
    FpVector tn = reduced(-t, p_);
    tn[k_] = 1;
    w = reduced(w * s, p_);
    tn = reduced(tn * s, p_);
    for (Index k = 0; k < k_; ++k) {
      i64 c = R_(k, q);
      if (!c) continue;
      R_.row(k) = reduced(R_.row(k) - c * w.transpose(), p_);
      T_.row(k) = reduced(T_.row(k) - c * tn.transpose(), p_);
    }
    R_.row(k_) = w.transpose();
    T_.row(k_) = tn.transpose();
    piv_.push_back(q);
    ++k_;
    return true;
  }
  bool contains(const FpVector& v) {
    FpVector dummy;
    FpVector w = reduced(v, p_);
    for (Index k = 0; k < k_; ++k)
      if (w[piv_[k]]) w = reduced(w - w[piv_[k]] * R_.row(k).transpose(), p_);
    return w.isZero();
  }

 private:
  Index n_, cap_;
  i64 p_;
  Index k_ = 0;
  FpMatrix R_, T_;
  std::vector<Index> piv_;
};

}  // namespace

std::vector<FpMatrix> hom_space(const std::vector<FpMatrix>& src, const std::vector<FpMatrix>& tgt, Index da,
                                Index db, i64 p) {
  if (src.size() != tgt.size()) throw DomainError("hom_space: generator lists differ");
  if (da == 0 || db == 0) return {};
  TrackedBasis tb(da, da, p);
  std::vector<FpVector> raw;
  std::vector<FpMatrix> W;  // image of raw vector l as a function of the parameters
  Index d = 0;
  std::vector<FpMatrix> pending;
  Index pending_rows = 0;

  auto compress = [&] {
    if (pending.empty()) return;
    FpMatrix c(pending_rows, d);
    Index r = 0;
    for (const auto& b : pending) { c.middleRows(r, b.rows()) = b; r += b.rows(); }
    pending.clear();
    pending_rows = 0;
    FpMatrix ns = nullspace(c, p);
    for (auto& w : W) w = mul(w, ns, p);
    d = ns.cols();
  };
  auto constrain = [&](FpMatrix block) {
    pending_rows += block.rows();
    pending.push_back(std::move(block));
    if (pending_rows >= std::max<Index>(d, 32)) compress();
  };

  std::deque<Index> todo;
  FpVector coef;
  for (Index e = 0; e < da && tb.dim() < da; ++e) {
    FpVector v = FpVector::Zero(da);
    v[e] = 1;
    if (tb.contains(v)) continue;
    compress();
    for (auto& w : W) {
      w.conservativeResize(db, d + db);
      w.rightCols(db).setZero();
    }
    FpMatrix wn = FpMatrix::Zero(db, d + db);
    wn.rightCols(db) = identity(db);
    d += db;
    tb.insert(v, coef);
    raw.push_back(v);
    W.push_back(std::move(wn));
    todo.push_back(Index(raw.size()) - 1);
    while (!todo.empty()) {
      Index j = todo.front();
      todo.pop_front();
      for (size_t g = 0; g < src.size(); ++g) {
        FpVector u = reduced(src[g] * raw[j], p);
        if (tb.insert(u, coef)) {
          raw.push_back(u);
          W.push_back(mul(tgt[g], W[j], p));
          todo.push_back(Index(raw.size()) - 1);
        } else if (d > 0) {
          FpMatrix acc = reduced(-(tgt[g] * W[j]), p);
          for (Index l = 0; l < Index(raw.size()); ++l)
            if (coef[l]) acc = reduced(acc + coef[l] * W[l], p);
          constrain(std::move(acc));
        }
      }
    }
  }
  compress();
  if (d == 0) return {};
  FpMatrix rawm(da, da);
  for (Index l = 0; l < da; ++l) rawm.col(l) = raw[l];
  FpMatrix rinv = inverse(rawm, p);
  std::vector<FpMatrix> out;
  for (Index i = 0; i < d; ++i) {
    FpMatrix img(db, da);
    for (Index l = 0; l < da; ++l) img.col(l) = W[l].col(i);
    FpMatrix phi = mul(img, rinv, p);
    for (size_t g = 0; g < src.size(); ++g)
      if (mul(phi, src[g], p) != mul(tgt[g], phi, p)) throw InternalError("hom_space produced a non-equivariant map");
    out.push_back(std::move(phi));
  }
  return out;
}

std::vector<FpMatrix> hom_space(const KModule& a, const KModule& b) {
  if (!(a.group() == b.group()) || a.level() != b.level() || a.prime() != b.prime())
    throw DomainError("hom_space between modules over different groups");
  return hom_space(a.actions(), b.actions(), a.dim(), b.dim(), a.prime());
}

std::optional<FpMatrix> find_isomorphism(const KModule& a, const KModule& b, std::mt19937_64& rng, int tries) {
  if (a.dim() != b.dim()) return std::nullopt;
  const i64 p = a.prime();
  auto hs = hom_space(a, b);
  if (hs.empty()) return a.dim() == 0 ? std::optional<FpMatrix>(FpMatrix(0, 0)) : std::nullopt;
  for (const auto& h : hs)
    if (rank(h, p) == a.dim()) return h;
  std::uniform_int_distribution<i64> d(0, p - 1);
  for (int t = 0; t < tries; ++t) {
    FpMatrix c = FpMatrix::Zero(b.dim(), a.dim());
    for (const auto& h : hs) c += d(rng) * h;
    c = reduced(c, p);
    if (rank(c, p) == a.dim()) return c;
  }
  return std::nullopt;
}

namespace {

bool k_type(const KModule& m) { return m.group().kind == GroupKind::K; }

SocleResult socle_iwahori(const KModule& m) {
  const i64 p = m.prime();
  const size_t nt = m.torus_count();
  std::vector<FpMatrix> tor(m.actions().begin(), m.actions().begin() + nt);
  std::vector<FpMatrix> pro(m.actions().begin() + nt, m.actions().end());
  Subspace inv = span(fixed_vectors(pro, m.dim(), p), p);
  SocleResult res{inv, {}};
  if (inv.dim() == 0) return res;
  FpMatrix vb = inv.basis();
  if (nt == 0) {
    res.components.push_back({CharacterH::make(p, 0, 0), vb});
    return res;
  }
  std::vector<FpMatrix> c;
  for (const auto& t : tor) {
    FpMatrix img = mul(t, vb, p), co(inv.dim(), inv.dim());
    for (Index j = 0; j < img.cols(); ++j) co.col(j) = inv.coordinates(img.col(j));
    c.push_back(co);
  }
  const i64 g = primitive_root(p);
  const Index k = inv.dim();
  for (int x = 0; x < p - 1; ++x) {
    FpMatrix m1 = c[0] - powmod(g, x, p) * identity(k);
    if (nullspace(m1, p).cols() == 0) continue;
    for (int y = 0; y < p - 1; ++y) {
      FpMatrix st(2 * k, k);
      st << m1, c[1] - powmod(g, y, p) * identity(k);
      FpMatrix ns = nullspace(st, p);
      if (ns.cols()) res.components.push_back({CharacterH::make(p, x, y), mul(vb, ns, p)});
    }
  }
  Index total = 0;
  for (const auto& comp : res.components) total += comp.basis.cols();
  if (total != k) throw InternalError("torus does not act semisimply on the invariants");
  return res;
}

SocleResult socle_k1(const KModule& m) {
  const i64 p = m.prime();
  SocleResult res{Subspace(m.dim(), p), {}};
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p - 1; ++s) {
      KModule w = serre_weight(r, s, p);
      auto hs = hom_space(w, m);
      if (hs.empty()) continue;
      FpMatrix cols(m.dim(), Index(hs.size()) * w.dim());
      for (size_t k = 0; k < hs.size(); ++k) cols.middleCols(Index(k) * w.dim(), w.dim()) = hs[k];
      // one copy of the weight per Hom basis vector
      for (const auto& h : hs) res.components.push_back({WeightLabel{r, s}, h});
      res.space.insert_columns(cols);
    }
  return res;
}

}  // namespace

KModule k1_invariants(const KModule& m) {
  if (!k_type(m)) throw DomainError("K1-invariants of a module not over K");
  if (m.level() == 1) return m;
  if (!m.has_element_action()) throw DomainError("K1-invariants need an element action");
  std::vector<FpMatrix> k1;
  for (const Mat2& g : generators(groups::Ki(1), m.prime(), m.level()).all()) k1.push_back(m.action(g));
  Subspace inv = span(fixed_vectors(k1, m.dim(), m.prime()), m.prime());
  auto sub = std::make_shared<Submodule>(submodule(m, inv));
  const int L = m.level();
  auto act = [sub, L](const Mat2& g) { return sub->module.action(g.lift(L)); };
  return KModule::from_action(groups::K(), m.prime(), 1, inv.dim(), act, "K1-invariants of " + m.provenance());
}

SocleResult socle(const KModule& m) {
  if (!k_type(m)) return socle_iwahori(m);
  if (m.level() == 1) return socle_k1(m);
  throw DomainError("socle over K needs level one; take k1_invariants first");
}

Subspace radical(const KModule& m) {
  const i64 p = m.prime();
  if (!k_type(m)) {
    const size_t nt = m.torus_count();
    std::vector<FpMatrix> cols;
    Index total = 0;
    for (size_t k = nt; k < m.actions().size(); ++k) {
      cols.push_back(m.gen_action(k) - identity(m.dim()));
      total += m.dim();
    }
    FpMatrix v(m.dim(), total);
    for (size_t k = 0; k < cols.size(); ++k) v.middleCols(Index(k) * m.dim(), m.dim()) = cols[k];
    return spin_subspace(m, reduced(v, p));
  }
  if (m.level() != 1) throw DomainError("radical over K needs level one");
  std::vector<FpMatrix> maps;
  Index rows = 0;
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p - 1; ++s)
      for (auto& h : hom_space(m, serre_weight(r, s, p))) {
        rows += h.rows();
        maps.push_back(std::move(h));
      }
  FpMatrix st(rows, m.dim());
  Index at = 0;
  for (const auto& h : maps) { st.middleRows(at, h.rows()) = h; at += h.rows(); }
  return span(nullspace(st, p), p);
}

FiltrationReport socle_filtration(const KModule& m) {
  const i64 p = m.prime();
  FiltrationReport rep;
  Subspace cur(m.dim(), p);
  while (cur.dim() < m.dim()) {
    Quotient q = quotient(m, cur);
    SocleResult s = socle(q.module);
    if (s.space.dim() == 0) throw InternalError("empty socle of a nonzero module");
    Layer layer;
    layer.dim = s.space.dim();
    layer.labels = s.labels();
    for (const auto& comp : s.components)
      for (Index j = 0; j < comp.basis.cols(); ++j) {
        FpVector v = FpVector::Zero(m.dim());
        for (size_t i = 0; i < q.kept.size(); ++i) v[q.kept[i]] = comp.basis(Index(i), j);
        cur.insert(v);
      }
    rep.layers.push_back(layer);
    rep.steps.push_back(cur);
  }
  rep.uniserial = true;
  for (const auto& l : rep.layers)
    if (l.labels.size() != 1) rep.uniserial = false;
  return rep;
}

bool is_uniserial(const KModule& m) { return socle_filtration(m).uniserial; }

std::map<WeightLabel, int> socle_K(const KModule& m) {
  KModule base = k1_invariants(m);
  std::map<WeightLabel, int> out;
  for (const auto& c : socle_k1(base).components) out[std::get<WeightLabel>(c.label)]++;
  return out;
}

std::map<WeightLabel, int> cosocle_K(const KModule& m) {
  if (!k_type(m) || m.level() != 1) throw DomainError("cosocle_K needs a module over K mod K1");
  std::map<WeightLabel, int> out;
  const i64 p = m.prime();
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p - 1; ++s) {
      auto hs = hom_space(m, serre_weight(r, s, p));
      if (!hs.empty()) out[WeightLabel{r, s}] = int(hs.size());
    }
  return out;
}

}  // namespace modp
