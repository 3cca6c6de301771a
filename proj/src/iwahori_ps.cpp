#include "modp/iwahori_ps.hpp"

#include "modp/errors.hpp"

namespace modp {

namespace {

Subspace subspace_of(const FpMatrix& cols, i64 p) { return span(cols, p); }

bool same_span(const FpMatrix& a, const FpMatrix& b, i64 p) {
  Subspace sa = subspace_of(a, p);
  if (sa.dim() != rank(b, p)) return false;
  for (Index j = 0; j < b.cols(); ++j)
    if (!sa.contains(b.col(j))) return false;
  return true;
}

}  // namespace

PSLevelModule build_ps(const CharacterH& chi, int n) {
  if (n < 0) throw DomainError("negative depth");
  const i64 p = chi.p;
  const int L = n + 1;
  PSLevelModule ps{induce(chi, groups::K0(L), groups::Iw(), L), chi, n, {}, {}};
  const Index d = ps.module.dim();
  if (d != ipow(p, n)) throw TheoremViolation("pi_{n+1}(chi) has dimension " + std::to_string(d));
  const auto reps = coset_reps(groups::Iw(), groups::K0(L), p, L);
  for (int i = 1; i <= L; ++i) {
    FpVector v = FpVector::Zero(d);
    for (size_t k = 0; k < reps.size(); ++k)
      if (is_member(reps[k], groups::K0(i))) v[Index(k)] = chi.eval(reps[k]);
    ps.phi.push_back(v);
  }
  ps.filtration = socle_filtration(ps.module);
  if (!ps.filtration.uniserial) throw TheoremViolation("pi_{n+1}(chi) is not uniserial");
  if (Index(ps.filtration.layers.size()) != d) throw TheoremViolation("wrong socle length");
  for (Index k = 0; k < d; ++k) {
    const Label want = chi * alpha(p).pow(k);
    if (!(ps.filtration.layers[k].labels.at(0) == want))
      throw TheoremViolation("socle layer " + std::to_string(k) + " is " + label_str(ps.filtration.layers[k].labels[0]) +
                             ", expected " + label_str(want));
  }
  return ps;
}

FpMatrix eigenspace(const KModule& m, const SubgroupId& g, const CharacterH& psi) {
  const i64 p = m.prime();
  const Index d = m.dim();
  const auto gs = generators(g, p, m.level()).all();
  FpMatrix st(Index(gs.size()) * d, d);
  for (size_t k = 0; k < gs.size(); ++k)
    st.middleRows(Index(k) * d, d) = reduced(m.action(gs[k]) - identity(d) * psi.eval(gs[k]), p);
  return nullspace(st, p);
}

EigenReport eigen_basis(const PSLevelModule& ps) {
  const i64 p = ps.chi.p;
  const KModule& m = ps.module;
  EigenReport r;
  FpMatrix k0 = eigenspace(m, groups::K0(ps.n + 1), ps.chi);
  FpMatrix b = eigenspace(m, groups::B(), ps.chi);
  r.dim_k0 = k0.cols();
  r.dim_b = b.cols();
  r.same_space = same_span(k0, b, p);
  FpMatrix phis(m.dim(), Index(ps.phi.size()));
  for (size_t i = 0; i < ps.phi.size(); ++i) phis.col(Index(i)) = ps.phi[i];
  r.phi_basis = same_span(k0, phis, p) && rank(phis, p) == Index(ps.phi.size());
  r.others_expected = true;
  for (int x = 0; x < p - 1; ++x)
    for (int y = 0; y < p - 1; ++y) {
      CharacterH psi = CharacterH::make(p, x, y);
      if (psi == ps.chi) continue;
      const Index dim = eigenspace(m, groups::K0(ps.n + 1), psi).cols();
      bool in_orbit = false;
      for (int k = 1; k < p - 1; ++k) in_orbit |= psi == ps.chi * alpha(p).pow(k);
      if (dim > 0) r.others.emplace_back(psi, dim);
      if (dim != (in_orbit ? ps.n : 0)) r.others_expected = false;
    }
  if (r.dim_k0 != ps.n + 1 || r.dim_b != ps.n + 1 || !r.same_space || !r.phi_basis || !r.others_expected)
    throw TheoremViolation("eigenspace of " + ps.chi.str() + ": K0 dim " + std::to_string(r.dim_k0) + ", B dim " +
                           std::to_string(r.dim_b) + ", " + std::to_string(r.others.size()) + " other characters");
  return r;
}

SplitReport finite_split_check(const CharacterH& chi, int N, std::mt19937_64& rng) {
  if (N < 1) throw DomainError("finite split needs N >= 1");
  const i64 p = chi.p;
  KModule res = restrict_to(induce(chi, groups::B(), groups::K(), N), groups::Iw());
  const auto reps = coset_reps(groups::K(), groups::B(), p, N);
  SplitReport r;
  r.total = res.dim();
  Subspace on_iw(r.total, p), off_iw(r.total, p);
  for (size_t k = 0; k < reps.size(); ++k) {
    FpVector e = FpVector::Zero(r.total);
    e[Index(k)] = 1;
    (is_member(reps[k], groups::Iw()) ? on_iw : off_iw).insert(e);
  }
  r.image_dim = on_iw.dim();
  r.kernel_dim = off_iw.dim();
  const bool stable = spin_subspace(res, on_iw.basis()).dim() == on_iw.dim() &&
                      spin_subspace(res, off_iw.basis()).dim() == off_iw.dim();
  r.direct = stable && r.image_dim + r.kernel_dim == r.total;
  if (!r.direct) throw TheoremViolation("Ind_B^K restricted to Iw does not split at level " + std::to_string(N));
  Submodule image = submodule(res, on_iw), kernel = submodule(res, off_iw);
  KModule ps = induce(chi, groups::K0(N), groups::Iw(), N);
  r.image_ps = find_isomorphism(image.module, ps, rng).has_value();
  KModule twisted = twist_by_pi(induce(chi, groups::K0(N + 1), groups::Iw(), N + 1));
  r.kernel_twist = find_isomorphism(inflate(kernel.module, twisted.level()), twisted, rng).has_value();
  r.image_socle = socle(image.module).labels();
  r.kernel_socle = socle(kernel.module).labels();
  if (!r.image_ps || !r.kernel_twist)
    throw TheoremViolation("split summands not identified at level " + std::to_string(N));
  return r;
}

IwasawaOp iwasawa_X(const PSLevelModule& ps) {
  const i64 p = ps.chi.p;
  const int L = ps.n + 1;
  const Index d = ps.module.dim();
  IwasawaOp op;
  op.X = FpMatrix::Zero(d, d);
  for (i64 l = 1; l < p; ++l) {
    Mat2 u(1, 0, p * teichmuller(l, p, L).value(), 1, p, L);
    op.X += ps.module.action(u) * invmod(l, p);
  }
  op.X = reduced(op.X, p);
  FpMatrix pw = identity(d);
  FpVector v = ps.phi.back();
  for (Index k = 0; k <= d; ++k) {
    if (pw.isZero()) {
      op.nilpotency = int(k);
      break;
    }
    if (k == d - 1) op.cyclic = !reduced(pw * v, p).isZero();
    pw = mul(op.X, pw, p);
  }
  if (op.nilpotency != d || !op.cyclic)
    throw TheoremViolation("X has nilpotency index " + std::to_string(op.nilpotency) + " on a module of dimension " +
                           std::to_string(d));
  return op;
}

IwasawaReport prop_iwasawa_check(const PSLevelModule& ps, int random_samples, std::mt19937_64& rng) {
  const i64 p = ps.chi.p;
  const int L = ps.n + 1;
  const Index d = ps.module.dim();
  const IwasawaOp op = iwasawa_X(ps);
  std::vector<Mat2> bs = {Mat2(1, 1, 0, 1, p, L), Mat2(1 + p, 0, 0, 1, p, L), Mat2(1, 0, 0, 1 + p, p, L),
                          Mat2(1 + p, 1, 0, 1 + p, p, L)};
  for (int k = 0; k < random_samples; ++k) bs.push_back(random_element(groups::B1(), p, L, rng));
  std::vector<FpMatrix> pows{identity(d)};
  std::vector<Subspace> images{span(identity(d), p)};
  while (Index(pows.size()) <= d) {
    pows.push_back(mul(op.X, pows.back(), p));
    images.push_back(span(pows.back(), p));
  }
  IwasawaReport r;
  r.samples = int(bs.size());
  for (const Mat2& b : bs) {
    const FpMatrix bm = reduced(ps.module.action(b) - identity(d), p);
    for (Index n = 0; n < d; ++n) {
      FpVector v = reduced(bm * reduced(pows[n] * ps.phi.back(), p), p);
      const Index j = std::min<Index>(n + p - 2, d);
      ++r.pairs;
      if (!images[j].contains(v))
        throw TheoremViolation("(b-1) X^" + std::to_string(n) + " phi not in X^" + std::to_string(n + p - 2) +
                               " for b = " + b.str());
    }
  }
  return r;
}

CokernelReport cokernel_bound_check(const PSLevelModule& ps, int random_combinations, std::mt19937_64& rng) {
  const i64 p = ps.chi.p;
  const Index d = ps.module.dim();
  const auto homs = hom_space(ps.module, ps.module);
  CokernelReport r;
  r.end_dim = Index(homs.size());
  if (r.end_dim != ps.n + 1) throw TheoremViolation("End(pi_{n+1}(chi)) has dimension " + std::to_string(r.end_dim));
  const Index bound = ps.n == 0 ? 1 : ipow(p, ps.n) - ipow(p, ps.n - 1);
  FpMatrix phis(d, Index(ps.phi.size()));
  for (size_t i = 0; i < ps.phi.size(); ++i) phis.col(Index(i)) = ps.phi[i];
  Subspace lower = ps.n == 0 ? Subspace(d, p) : spin_subspace(ps.module, ps.phi[ps.n - 1]);
  std::vector<FpMatrix> maps = homs;
  std::uniform_int_distribution<i64> coef(0, p - 1);
  for (int t = 0; t < random_combinations; ++t) {
    FpMatrix a = FpMatrix::Zero(d, d);
    for (const auto& h : homs) a += h * coef(rng);
    maps.push_back(reduced(a, p));
  }
  r.dichotomy = true;
  for (const auto& a : maps) {
    ++r.tested;
    const Index rk = rank(a, p);
    auto c = solve(phis, reduced(a * ps.phi.back(), p), p);
    if (!c) throw InternalError("image of phi_{n+1} left the eigenspace");
    const bool top = (*c)(ps.n, 0) != 0;
    if (rk == d) {
      ++r.bijective;
      if (!top) r.dichotomy = false;
      continue;
    }
    const Index coker = d - rk;
    if (r.min_coker < 0 || coker < r.min_coker) r.min_coker = coker;
    if (coker < bound)
      throw TheoremViolation("endomorphism with cokernel " + std::to_string(coker) + " below " + std::to_string(bound));
    if (top) r.dichotomy = false;
    for (Index j = 0; j < d; ++j)
      if (!lower.contains(a.col(j))) r.dichotomy = false;
  }
  if (!r.dichotomy) throw TheoremViolation("image dichotomy fails for an endomorphism");
  return r;
}

}  // namespace modp
