#include "modp/subgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "modp/errors.hpp"

namespace modp {

using u128 = unsigned __int128;

std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) { s.push_back(char('0' + int(v % 10))); v /= 10; }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string SubgroupId::name() const {
  switch (kind) {
    case GroupKind::K: return "K";
    case GroupKind::Iw: return "Iw";
    case GroupKind::Iw1: return "Iw1";
    case GroupKind::K0: return "K0(" + std::to_string(i) + ")";
    case GroupKind::K0plus: return "K0plus(" + std::to_string(i) + ")";
    case GroupKind::Ki: return "Ki(" + std::to_string(i) + ")";
    case GroupKind::H: return "H";
    case GroupKind::B: return "B";
    case GroupKind::U: return "U(" + std::to_string(i) + ")";
    case GroupKind::Ubar: return "Ubar(" + std::to_string(i) + ")";
    case GroupKind::B1: return "B1";
  }
  return "?";
}

SubgroupId SubgroupId::parse(const std::string& s) {
  auto arg = [&](const std::string& head) -> int {
    if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return -1;
    return std::stoi(s.substr(head.size() + 1, s.size() - head.size() - 2));
  };
  if (s == "K") return groups::K();
  if (s == "Iw") return groups::Iw();
  if (s == "Iw1") return groups::Iw1();
  if (s == "H") return groups::H();
  if (s == "B") return groups::B();
  if (s == "B1") return groups::B1();
  int k;
  if ((k = arg("K0plus")) >= 1) return groups::K0plus(k);
  if ((k = arg("K0")) >= 0) return groups::K0(k);
  if ((k = arg("Ki")) >= 1) return groups::Ki(k);
  if ((k = arg("Ubar")) >= 0) return groups::Ubar(k);
  if ((k = arg("U")) >= 0) return groups::U(k);
  throw ConfigError("unknown subgroup '" + s + "'");
}

bool has_split_radical(const SubgroupId& s) { return s.kind != GroupKind::K; }

namespace {

int val(i64 x, const Mat2& g) { return valuation(x, g.prime(), g.level()); }
bool unit(i64 x, i64 p) { return x % p != 0; }
bool one_mod_p(i64 x, i64 p) { return x % p == 1 % p; }

}  // namespace

bool is_member(const Mat2& g, const SubgroupId& s) {
  const i64 p = g.prime();
  const int N = g.level();
  if (!g.invertible()) return false;
  auto ge = [&](i64 x, int k) { return val(x, g) >= std::min(k, N); };
  switch (s.kind) {
    case GroupKind::K: return true;
    case GroupKind::Iw: return ge(g.c(), 1);
    case GroupKind::Iw1: return ge(g.c(), 1) && one_mod_p(g.a(), p) && one_mod_p(g.d(), p);
    case GroupKind::K0: return ge(g.c(), s.i);
    case GroupKind::K0plus:
      return ge(g.c(), 1) && ge(g.b(), s.i - 1) && unit(g.a(), p) && unit(g.d(), p);
    case GroupKind::Ki:
      return ge(g.a() - 1, s.i) && ge(g.b(), s.i) && ge(g.c(), s.i) && ge(g.d() - 1, s.i);
    case GroupKind::H:
      return g.b() == 0 && g.c() == 0 && powmod(g.a(), p - 1, g.modulus()) == 1 &&
             powmod(g.d(), p - 1, g.modulus()) == 1;
    case GroupKind::B: return g.c() == 0;
    case GroupKind::U: return g.a() == 1 && g.d() == 1 && g.c() == 0 && ge(g.b(), s.i);
    case GroupKind::Ubar: return g.a() == 1 && g.d() == 1 && g.b() == 0 && ge(g.c(), s.i);
    case GroupKind::B1: return g.c() == 0 && one_mod_p(g.a(), p) && one_mod_p(g.d(), p);
  }
  return false;
}

u128 order(const SubgroupId& s, i64 p, int N) {
  auto P = [p](int k) -> u128 {
    u128 r = 1;
    for (int j = 0; j < std::max(k, 0); ++j) r *= p;
    return r;
  };
  const u128 units = P(N - 1) * (p - 1);
  const int i = std::min(s.i, N);
  switch (s.kind) {
    case GroupKind::K: return P(4 * (N - 1)) * u128(p * p - 1) * u128(p * p - p);
    case GroupKind::Iw: return units * units * P(N) * P(N - 1);
    case GroupKind::Iw1: return P(N - 1) * P(N - 1) * P(N) * P(N - 1);
    case GroupKind::K0: return units * units * P(N) * P(N - i);
    case GroupKind::K0plus: {
      if (s.i < 1 || s.i > N + 1) throw DomainError("K0plus parameter out of range");
      return units * units * P(N - s.i + 1) * P(N - 1);
    }
    case GroupKind::Ki: return P(4 * (N - i));
    case GroupKind::H: return u128(p - 1) * u128(p - 1);
    case GroupKind::B: return units * units * P(N);
    case GroupKind::U: return P(N - i);
    case GroupKind::Ubar: return P(N - i);
    case GroupKind::B1: return P(N - 1) * P(N - 1) * P(N);
  }
  return 0;
}

std::string order_string(const SubgroupId& s, i64 p, int N) { return to_string_u128(order(s, p, N)); }

std::vector<Mat2> GeneratorSet::all() const {
  std::vector<Mat2> v = torus;
  v.insert(v.end(), pro_p.begin(), pro_p.end());
  return v;
}

u128 generated_order(const std::vector<Mat2>& gens, u128 target) {
  if (gens.empty()) return 1;
  const i64 p = gens[0].prime();
  const int N = gens[0].level();
  const i64 q = gens[0].modulus();
  using Key = std::uint64_t;
  auto enc = [q](i64 x, i64 y) { return Key(x) * Key(q) + Key(y); };
  auto act = [q](const Mat2& g, i64 x, i64 y) {
    return std::pair<i64, i64>(normmod(mulmod(g.a(), x, q) + mulmod(g.b(), y, q), q),
                               normmod(mulmod(g.c(), x, q) + mulmod(g.d(), y, q), q));
  };

  std::vector<std::pair<i64, i64>> pts{{1, 0}};
  std::vector<int> par{-1}, via{-1};
  std::unordered_map<Key, int> idx{{enc(1, 0), 0}};
  for (size_t k = 0; k < pts.size(); ++k)
    for (size_t g = 0; g < gens.size(); ++g) {
      auto [x, y] = act(gens[g], pts[k].first, pts[k].second);
      if (idx.emplace(enc(x, y), int(pts.size())).second) {
        pts.push_back({x, y});
        par.push_back(int(k));
        via.push_back(int(g));
      }
    }
  auto rep = [&](int k) {
    Mat2 m = Mat2::identity(p, N);
    for (; k > 0; k = par[k]) m = m * gens[via[k]];
    return m;
  };
  const u128 n1 = pts.size();

  // orbit of e2 under a growing set of Schreier generators of Stab(e1)
  std::vector<Mat2> sg;
  std::vector<std::pair<i64, i64>> o2{{0, 1}};
  std::unordered_set<Key> seen{enc(0, 1)};
  auto close = [&](size_t from_point, size_t first_gen) {
    for (size_t k = 0; k < o2.size(); ++k)
      for (size_t g = (k < from_point ? first_gen : 0); g < sg.size(); ++g) {
        auto [x, y] = act(sg[g], o2[k].first, o2[k].second);
        if (seen.insert(enc(x, y)).second) o2.push_back({x, y});
      }
  };
  auto add = [&](const Mat2& s) {
    if (s == Mat2::identity(p, N)) return false;
    size_t before = o2.size();
    sg.push_back(s);
    close(before, sg.size() - 1);
    return o2.size() > before;
  };
  auto schreier = [&](int k, size_t g) {
    auto [x, y] = act(gens[g], pts[k].first, pts[k].second);
    int kk = idx.at(enc(x, y));
    return rep(kk).inverse() * gens[g] * rep(k);
  };

  std::mt19937_64 rng(0x5eed);
  int stall = 0;
  while (n1 * o2.size() < target && stall < 200) {
    int k = int(rng() % pts.size());
    size_t g = rng() % gens.size();
    stall = add(schreier(k, g)) ? 0 : stall + 1;
  }
  if (n1 * o2.size() < target)
    for (size_t k = 0; k < pts.size() && n1 * o2.size() < target; ++k)
      for (size_t g = 0; g < gens.size(); ++g) add(schreier(int(k), g));
  return n1 * o2.size();
}

namespace {

int lift_level(const SubgroupId& s) {
  switch (s.kind) {
    case GroupKind::K0:
    case GroupKind::K0plus:
    case GroupKind::Ki:
    case GroupKind::U:
    case GroupKind::Ubar: return std::max(2, s.i + 1);
    default: return 2;
  }
}

GeneratorSet build_generators(const SubgroupId& s, i64 p, int N) {
  GeneratorSet gs;
  gs.group = s;
  gs.p = p;
  gs.level = N;
  const i64 q = ipow(p, N);
  auto M = [&](i64 a, i64 b, i64 c, i64 d) { return Mat2(a, b, c, d, p, N); };
  auto pk = [&](int k) { return k >= N ? q : ipow(p, k); };
  const i64 z = teichmuller(primitive_root(p), p, N).value();
  const i64 u = 1 + p;
  auto torus = [&] { gs.torus = {M(z, 0, 0, 1), M(1, 0, 0, z)}; };
  auto diag1p = [&] { gs.pro_p.push_back(M(u, 0, 0, 1)); gs.pro_p.push_back(M(1, 0, 0, u)); };
  switch (s.kind) {
    case GroupKind::K:
      gs.pro_p = {M(1, 1, 0, 1), M(1, 0, 1, 1), M(primitive_root_pp(p), 0, 0, 1)};
      break;
    case GroupKind::Iw:
      torus();
      gs.pro_p = {M(1, 1, 0, 1), M(1, 0, p, 1)};
      diag1p();
      break;
    case GroupKind::Iw1:
      gs.pro_p = {M(1, 1, 0, 1), M(1, 0, p, 1)};
      diag1p();
      break;
    case GroupKind::K0:
      torus();
      gs.pro_p = {M(1, 1, 0, 1), M(1, 0, pk(s.i), 1)};
      diag1p();
      break;
    case GroupKind::K0plus:
      torus();
      gs.pro_p = {M(1, pk(s.i - 1), 0, 1), M(1, 0, p, 1)};
      diag1p();
      break;
    case GroupKind::Ki:
      if (s.i < N) {
        i64 e = pk(s.i);
        gs.pro_p = {M(1, e, 0, 1), M(1, 0, e, 1), M(1 + e, 0, 0, 1), M(1, 0, 0, 1 + e)};
      }
      break;
    case GroupKind::H: torus(); break;
    case GroupKind::B:
      torus();
      gs.pro_p = {M(1, 1, 0, 1)};
      diag1p();
      break;
    case GroupKind::U:
      if (s.i < N) gs.pro_p = {M(1, pk(s.i), 0, 1)};
      break;
    case GroupKind::Ubar:
      if (s.i < N) gs.pro_p = {M(1, 0, pk(s.i), 1)};
      break;
    case GroupKind::B1:
      gs.pro_p = {M(1, 1, 0, 1)};
      diag1p();
      break;
  }
  return gs;
}

void certify(GeneratorSet& gs) {
  const SubgroupId& s = gs.group;
  for (const Mat2& g : gs.all())
    if (!is_member(g, s)) throw InternalError("generator " + g.str() + " not in " + s.name());
  // direct orbit count while p^(2L) stays small; otherwise certify at the
  // lifting level, where generation mod p^L0 implies generation of S
  // because S meets the L0-th congruence kernel inside the Frattini
  // subgroup of its pro-p radical
  int L = gs.level;
  std::string method = "orbit";
  auto small = [&](int lev) { return 2.0 * lev * std::log(double(gs.p)) <= std::log(4.5e6); };
  if (!small(L)) {
    L = std::min(L, lift_level(s));
    method = "lifted";
    if (!small(L)) throw LevelError("generator certification exceeds the orbit budget");
  }
  std::vector<Mat2> g;
  for (const Mat2& x : gs.all()) g.push_back(x.reduce(L));
  const u128 target = order(s, gs.p, L);
  const u128 got = generated_order(g, target);
  if (got != target)
    throw InternalError("generators of " + s.name() + " span order " + to_string_u128(got) +
                        " instead of " + to_string_u128(target));
  // the pro-p part alone must generate the pro-p radical
  if (s.kind != GroupKind::K && !gs.torus.empty()) {
    std::vector<Mat2> pp;
    for (const Mat2& x : gs.pro_p) pp.push_back(x.reduce(L));
    const u128 t2 = target / (u128(gs.p - 1) * u128(gs.p - 1));
    if (generated_order(pp, t2) != t2) throw InternalError("pro-p generators of " + s.name() + " fail");
  }
  gs.cert = {method, L, to_string_u128(order(s, gs.p, gs.level))};
}

}  // namespace

const GeneratorSet& generators(const SubgroupId& s, i64 p, int N) {
  static std::map<std::tuple<int, int, i64, int>, GeneratorSet> cache;
  auto key = std::make_tuple(int(s.kind), s.i, p, N);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (!is_prime(p) || p < 3) throw DomainError("p must be an odd prime");
  GeneratorSet gs = build_generators(s, p, N);
  certify(gs);
  return cache.emplace(key, std::move(gs)).first->second;
}

Mat2 random_element(const SubgroupId& s, i64 p, int N, std::mt19937_64& rng) {
  const i64 q = ipow(p, N);
  auto any = [&] { return i64(rng() % std::uint64_t(q)); };
  auto mult = [&](int k) { return k >= N ? 0 : i64(rng() % std::uint64_t(q)) / ipow(p, k) * ipow(p, k); };
  auto unit = [&] { i64 x; do x = any(); while (x % p == 0); return x; };
  auto one = [&] { return normmod(1 + mult(1), q); };
  auto M = [&](i64 a, i64 b, i64 c, i64 d) { return Mat2(a, b, c, d, p, N); };
  const int i = s.i;
  switch (s.kind) {
    case GroupKind::K: {
      Mat2 g;
      do g = M(any(), any(), any(), any()); while (!g.invertible());
      return g;
    }
    case GroupKind::Iw: return M(unit(), any(), mult(1), unit());
    case GroupKind::Iw1: return M(one(), any(), mult(1), one());
    case GroupKind::K0: return M(unit(), any(), mult(i), unit());
    case GroupKind::K0plus: return M(unit(), mult(i - 1), mult(1), unit());
    case GroupKind::Ki: return M(normmod(1 + mult(i), q), mult(i), mult(i), normmod(1 + mult(i), q));
    case GroupKind::H: {
      i64 z = teichmuller(primitive_root(p), p, N).value();
      return M(powmod(z, rng() % (p - 1), q), 0, 0, powmod(z, rng() % (p - 1), q));
    }
    case GroupKind::B: return M(unit(), any(), 0, unit());
    case GroupKind::U: return M(1, mult(i), 0, 1);
    case GroupKind::Ubar: return M(1, 0, mult(i), 1);
    case GroupKind::B1: return M(one(), any(), 0, one());
  }
  throw InternalError("random_element");
}

void for_each_element(const SubgroupId& s, i64 p, int N, const std::function<void(const Mat2&)>& f) {
  const i64 q = ipow(p, N);
  if (order(s, p, N) > u128(50'000'000)) throw LevelError("group too large to enumerate");
  for (i64 a = 0; a < q; ++a)
    for (i64 b = 0; b < q; ++b)
      for (i64 c = 0; c < q; ++c)
        for (i64 d = 0; d < q; ++d) {
          Mat2 g(a, b, c, d, p, N);
          if (is_member(g, s)) f(g);
        }
}

namespace {

// K0(p^j) contains K0(p^m) for j <= m; K0(1) is Iw and K0(0) is K.
bool k0_param(const SubgroupId& s, int N, int& out) {
  switch (s.kind) {
    case GroupKind::K: out = 0; return true;
    case GroupKind::Iw: out = 1; return true;
    case GroupKind::K0: out = std::min(s.i, N); return true;
    case GroupKind::B: out = N; return true;
    default: return false;
  }
}

}  // namespace

std::vector<Mat2> coset_reps(const SubgroupId& big, const SubgroupId& small, i64 p, int N) {
  int j, m;
  std::vector<Mat2> reps;
  if (k0_param(big, N, j) && k0_param(small, N, m)) {
    if (j > m) throw DomainError(small.name() + " is not inside " + big.name());
    const i64 pm = ipow(p, m), pj = ipow(p, j);
    for (i64 u = 0; u < pm; u += pj) reps.emplace_back(1, 0, u, 1, p, N);
    if (j == 0 && m >= 1)
      for (i64 v = 0; v < pm; v += p) reps.emplace_back(0, 1, 1, v, p, N);
    return reps;
  }
  if ((big.kind == GroupKind::Iw) && small.kind == GroupKind::K0plus) {
    const i64 top = ipow(p, small.i - 1);
    for (i64 v = 0; v < top; ++v) reps.emplace_back(1, v, 0, 1, p, N);
    return reps;
  }
  throw DomainError("coset representatives for " + small.name() + "\\" + big.name() + " not supported");
}

CosetFactor coset_factor(const SubgroupId& big, const SubgroupId& small, const Mat2& x) {
  const i64 p = x.prime();
  const int N = x.level();
  const i64 q = x.modulus();
  int j, m;
  if (!is_member(x, big)) throw DomainError(x.str() + " not in " + big.name());
  if (k0_param(big, N, j) && k0_param(small, N, m)) {
    const i64 pm = ipow(p, m), pj = ipow(p, j);
    if (x.d() % p) {
      i64 u = normmod(mulmod(x.c(), invmod(x.d(), q), q), pm);
      Mat2 r(1, 0, u, 1, p, N);
      return {x * r.inverse(), size_t(u / pj)};
    }
    if (j > 0) throw InternalError("coset_factor: non-unit d in " + big.name());
    i64 v = normmod(mulmod(x.d(), invmod(x.c(), q), q), pm);
    Mat2 r(0, 1, 1, v, p, N);
    return {x * r.inverse(), size_t(pm + v / p)};
  }
  if (big.kind == GroupKind::Iw && small.kind == GroupKind::K0plus) {
    const i64 top = ipow(p, small.i - 1);
    i64 v = normmod(mulmod(x.b(), invmod(x.a(), q), q), top);
    Mat2 r(1, v, 0, 1, p, N);
    return {x * r.inverse(), size_t(v)};
  }
  throw DomainError("coset factorisation for " + small.name() + "\\" + big.name() + " not supported");
}

PartitionReport double_coset_check(i64 p, int n) {
  const int L = n + 1;
  const i64 q = ipow(p, L);
  PartitionReport rep;
  const u128 total = order(groups::Iw(), p, L);
  rep.group_size = std::size_t(total);
  if (total > u128(3'000'000)) throw LevelError("double coset scan too large");
  const auto& left = generators(groups::K0(L), p, L).all();
  const auto& right = generators(groups::B(), p, L).all();
  auto key = [q](const Mat2& g) {
    return ((std::uint64_t(g.a()) * q + g.b()) * q + g.c()) * q + g.d();
  };
  std::unordered_map<std::uint64_t, int> cls;
  bool ok = true;
  for (int i = 1; i <= L; ++i) {
    std::vector<Mat2> orbit{Mat2(1, 0, i == L ? 0 : ipow(p, i), 1, p, L)};
    if (!cls.emplace(key(orbit[0]), i).second) ok = false;
    for (size_t k = 0; k < orbit.size(); ++k) {
      auto visit = [&](const Mat2& y) {
        auto [it, fresh] = cls.emplace(key(y), i);
        if (fresh) orbit.push_back(y);
        else if (it->second != i) ok = false;
      };
      for (const Mat2& g : left) visit(g * orbit[k]);
      for (const Mat2& g : right) visit(orbit[k] * g);
    }
    rep.class_sizes.push_back(orbit.size());
  }
  std::size_t sum = 0;
  for (auto s : rep.class_sizes) sum += s;
  if (sum != rep.group_size) ok = false;
  // every element of Iw lands in the class predicted by the explicit
  // factorisation x = [1 0; 0 u/a] [1 0; p^i 1] [a b; 0 (ad - b u p^i)/u]
  std::size_t bad = 0;
  for_each_element(groups::Iw(), p, L, [&](const Mat2& x) {
    int i = valuation(x.c(), p, L);
    i64 u = i >= L ? 1 : x.c() / ipow(p, i);
    i64 pi = i >= L ? 0 : ipow(p, i);
    i64 ui = invmod(u, q);
    Mat2 h(1, 0, 0, mulmod(u, invmod(x.a(), q), q), p, L);
    Mat2 w(1, 0, pi, 1, p, L);
    Mat2 b(x.a(), x.b(), 0, mulmod(ui, normmod(mulmod(x.a(), x.d(), q) - mulmod(mulmod(x.b(), u, q), pi, q), q), q), p, L);
    bool good = h * w * b == x && is_member(h, groups::K0(L)) && is_member(b, groups::B());
    auto it = cls.find(key(x));
    if (!good || it == cls.end() || it->second != std::min(i, L)) ++bad;
  });
  if (bad) ok = false;
  rep.pass = ok;
  std::ostringstream os;
  os << "classes";
  for (auto s : rep.class_sizes) os << " " << s;
  os << " of " << rep.group_size << ", mismatches " << bad;
  rep.detail = os.str();
  return rep;
}

PartitionReport intersection_identity_check(i64 p, int n, std::size_t samples, std::mt19937_64& rng) {
  const int L = n + 1;
  const i64 q = ipow(p, L);
  const i64 pn = ipow(p, n);
  PartitionReport rep;
  std::size_t bad = 0, in = 0, seen = 0;
  auto test = [&](const Mat2& x) {
    ++seen;
    // first column (a, c): for g = D y b the ratio c/a has valuation >= n+1
    int vc = valuation(x.c(), p, L), va = valuation(x.a(), p, L);
    bool lhs = va == 0 && vc >= n + 1;
    bool rhs = is_member(x, groups::K0(L));
    if (lhs != rhs) ++bad;
    if (rhs) {
      ++in;
      // witness x = D [a, p^n b; p c', d] D^{-1}, with D = diag(1, p^n)
      i64 c1 = x.c() / pn;  // divisible since p^(n+1) | c
      ScaledMat D = ScaledMat::make(1, 0, 0, pn, p);
      ScaledMat y = ScaledMat::make(x.a(), pn * x.b(), c1, x.d(), p);
      ScaledMat Dinv = ScaledMat::make(pn, 0, 0, 1, p, -n);
      ScaledMat g = D * y * Dinv;
      Mat2 ym(y.m[0], y.m[1], y.m[2], y.m[3], p, L);
      bool ok = g.shift == -n;
      for (int k = 0; k < 4 && ok; ++k) {
        i64 xe = k == 0 ? x.a() : k == 1 ? x.b() : k == 2 ? x.c() : x.d();
        ok = normmod(g.m[k] / pn, q) == xe && g.m[k] % pn == 0;
      }
      if (!ok || !is_member(ym, groups::Iw())) ++bad;
    }
  };
  if (order(groups::K(), p, L) <= u128(2'000'000)) {
    for_each_element(groups::K(), p, L, test);
  } else {
    for (std::size_t k = 0; k < samples; ++k) test(random_element(groups::K(), p, L, rng));
    for (std::size_t k = 0; k < samples; ++k) test(random_element(groups::K0(L), p, L, rng));
  }
  rep.group_size = seen;
  rep.class_sizes = {in};
  rep.pass = bad == 0;
  rep.detail = std::to_string(seen) + " elements, " + std::to_string(in) + " in K0, mismatches " +
               std::to_string(bad);
  return rep;
}

}  // namespace modp
