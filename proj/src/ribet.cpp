#include "modp/ribet.hpp"

#include <array>
#include <deque>
#include <map>
#include <optional>

#include "modp/errors.hpp"

namespace modp {

namespace {

using i128 = __int128;
using M = std::array<i128, 4>;

int val(i128 x, i64 p) {
  if (x == 0) return 1 << 20;
  int v = 0;
  for (; x % p == 0; x /= p) ++v;
  return v;
}
i64 modp_(i128 x, i64 p) {
  i128 r = x % p;
  return i64(r < 0 ? r + p : r);
}
M mm(const M& a, const M& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
M adj(const M& a) { return {a[3], -a[1], -a[2], a[0]}; }
M of(const ScaledMat& g) { return {g.m[0], g.m[1], g.m[2], g.m[3]}; }
M of(const Mat2& g) { return {g.a(), g.b(), g.c(), g.d()}; }
i128 det(const M& a) { return a[0] * a[3] - a[1] * a[2]; }
int minval(const M& a, i64 p) { return std::min(std::min(val(a[0], p), val(a[1], p)), std::min(val(a[2], p), val(a[3], p))); }

// g^{-1} h g mod p, for theta = g Z_p^2 at distance d (exact division by p^d)
std::vector<std::array<i64, 4>> reduce_at(const LatticeRep& rho, const ScaledMat& g) {
  const M gm = of(g);
  const i128 dt = det(gm);
  const int d = val(dt, rho.p);
  i128 unit = dt;
  for (int k = 0; k < d; ++k) unit /= rho.p;
  const i64 uinv = invmod(modp_(unit, rho.p), rho.p);
  std::vector<std::array<i64, 4>> out;
  for (const Mat2& h : rho.gens) {
    M x = mm(adj(gm), mm(of(h), gm));
    std::array<i64, 4> r{};
    for (int k = 0; k < 4; ++k) {
      i128 e = x[k];
      for (int i = 0; i < d; ++i) e /= rho.p;
      r[k] = mulmod(modp_(e, rho.p), uinv, rho.p);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<std::pair<i64, i64>> all_lines(i64 p) {
  std::vector<std::pair<i64, i64>> l;
  for (i64 t = 0; t < p; ++t) l.push_back({1, t});
  l.push_back({0, 1});
  return l;
}

// eigenvalue of a on the line, if stable
std::optional<i64> eigen_on(const std::array<i64, 4>& a, std::pair<i64, i64> v, i64 p) {
  const i64 x = (a[0] * v.first + a[1] * v.second) % p, y = (a[2] * v.first + a[3] * v.second) % p;
  if ((x * v.second - y * v.first) % p != 0) return std::nullopt;
  return v.first ? mulmod(x, invmod(v.first, p), p) : mulmod(y, invmod(v.second, p), p);
}

// neighbour lattice g (l + p Z_p^2) for the line l
ScaledMat neighbour(const ScaledMat& g, std::pair<i64, i64> l, i64 p) {
  return l.first ? g * ScaledMat::make(1, 0, l.second, p, p) : g * ScaledMat::make(p, 0, 0, 1, p);
}

}  // namespace

std::string kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::Semisimple: return "semisimple";
    case ReductionKind::Indecomposable: return "indecomposable";
    case ReductionKind::Irreducible: return "irreducible";
    default: return "unknown";
  }
}

LatticeRep lattice_rep_from_json(const nlohmann::json& j) {
  try {
    LatticeRep r;
    if (j.contains("schema_version") && j.at("schema_version").get<int>() != 1)
      throw ConfigError("unsupported schema_version");
    r.p = j.at("p").get<i64>();
    r.m = j.at("m").get<int>();
    r.label = j.value("label", std::string{});
    if (r.p < 5 || !is_prime(r.p)) throw ConfigError("p must be a prime >= 5");
    if (r.m < 2 || ipow(r.p, r.m) > (i64(1) << 30)) throw ConfigError("m must satisfy 2 <= m and p^m <= 2^30");
    for (const auto& g : j.at("generators")) {
      if (g.size() != 2 || g[0].size() != 2 || g[1].size() != 2) throw ConfigError("generator must be 2x2");
      Mat2 h(g[0][0].get<i64>(), g[0][1].get<i64>(), g[1][0].get<i64>(), g[1][1].get<i64>(), r.p, r.m);
      if (!h.invertible()) throw ConfigError("generator " + h.str() + " is not invertible");
      r.gens.push_back(h);
    }
    if (r.gens.empty()) throw ConfigError("no generators");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed representation: ") + e.what());
  }
}

bool is_stable(const LatticeRep& rho, const ScaledMat& g) {
  const M gm = of(g);
  const int d = val(det(gm), rho.p);
  if (minval(gm, rho.p) != 0) throw DomainError("lattice basis is not primitive");
  if (d > rho.m) throw DomainError("lattice beyond the visibility bound");
  for (const Mat2& h : rho.gens) {
    M x = mm(adj(gm), mm(of(h), gm));
    if (minval(x, rho.p) < d) return false;
  }
  return true;
}

Reduction reduction_type(const LatticeRep& rho, const ScaledMat& g) {
  const i64 p = rho.p;
  Reduction r;
  if (val(det(of(g)), p) >= rho.m) return r;
  if (!is_stable(rho, g)) throw DomainError("reduction of a non-stable lattice");
  const auto mats = reduce_at(rho, g);
  for (auto l : all_lines(p)) {
    Character c;
    for (const auto& a : mats) {
      auto e = eigen_on(a, l, p);
      if (!e) break;
      c.push_back(*e);
    }
    if (c.size() != mats.size()) continue;
    Character q;
    for (size_t k = 0; k < mats.size(); ++k) {
      const auto& a = mats[k];
      q.push_back(mulmod(normmod(a[0] * a[3] - a[1] * a[2], p), invmod(c[k], p), p));
    }
    r.stable_lines.push_back(l);
    r.socle.push_back(c);
    r.cosocle.push_back(q);
  }
  if (r.stable_lines.empty()) {
    r.kind = ReductionKind::Irreducible;
  } else if (r.stable_lines.size() == 1) {
    r.kind = ReductionKind::Indecomposable;
  } else {
    r.kind = ReductionKind::Semisimple;
    // both lines are submodules and quotients; keep the two characters once
    r.socle = {r.socle[0], r.cosocle[0]};
    r.cosocle = r.socle;
    if (r.stable_lines.size() > 2) r.stable_lines.resize(2);
  }
  return r;
}

LatticeGraph stable_lattice_graph(const LatticeRep& rho) {
  const i64 p = rho.p;
  TreeBall ball(p, rho.m);
  LatticeGraph g;
  g.p = p;
  g.m = rho.m;
  const ScaledMat origin = ScaledMat::make(1, 0, 0, 1, p);
  Reduction r0 = reduction_type(rho, origin);
  if (r0.kind == ReductionKind::Irreducible) throw PreconditionError("reduction is irreducible");
  if (r0.kind == ReductionKind::Indecomposable ? r0.socle[0] == r0.cosocle[0] : r0.socle[0] == r0.socle[1])
    throw PreconditionError("reduction has a repeated Jordan-Holder factor");
  std::map<Index, Index> seen;
  std::deque<Index> todo;
  auto add = [&](Index tree, const ScaledMat& basis) {
    auto it = seen.find(tree);
    if (it != seen.end()) return it->second;
    const Index id = Index(g.vertices.size());
    const int d = ball.vertex(tree).radius;
    g.vertices.push_back({tree, basis, d, reduction_type(rho, basis)});
    seen[tree] = id;
    if (d == rho.m) g.horizon_hit = true;
    else todo.push_back(id);
    return id;
  };
  add(0, origin);
  while (!todo.empty()) {
    const Index u = todo.front();
    todo.pop_front();
    const LatticeVertex v = g.vertices[size_t(u)];
    for (auto l : v.reduction.stable_lines) {
      auto loc = ball.locate(neighbour(v.basis, l, p));
      if (!loc) throw InternalError("neighbour left the ball");
      const ScaledMat basis = ball.rep(loc->vertex);
      if (!is_stable(rho, basis)) throw InternalError("stable line gave an unstable neighbour");
      const Index w = add(loc->vertex, basis);
      if (u < w) g.edges.push_back({u, w});
    }
  }
  std::vector<int> deg(g.vertices.size(), 0);
  for (auto [a, b] : g.edges) ++deg[size_t(a)], ++deg[size_t(b)];
  g.path = g.edges.size() + 1 == g.vertices.size();
  for (int k : deg) g.path = g.path && k <= 2;
  return g;
}

nlohmann::json to_json(const LatticeGraph& g) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["p"] = g.p;
  j["m"] = g.m;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) {
    nlohmann::json vj;
    vj["basis"] = {{v.basis.m[0], v.basis.m[1]}, {v.basis.m[2], v.basis.m[3]}};
    vj["distance"] = v.distance;
    vj["reduction_type"] = kind_name(v.reduction.kind);
    vj["socle"] = v.reduction.socle;
    vj["cosocle"] = v.reduction.cosocle;
    j["vertices"].push_back(vj);
  }
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  j["path"] = g.path;
  j["horizon_hit"] = g.horizon_hit;
  return j;
}

Distance lattice_distance(const LatticeRep& rho, const ScaledMat& a, const ScaledMat& b) {
  if (!is_stable(rho, a) || !is_stable(rho, b)) throw DomainError("lattice distance of a non-stable lattice");
  const i64 p = rho.p;
  auto dist = [p](const ScaledMat& x, const ScaledMat& y) {
    M n = mm(adj(of(x)), of(y));
    return val(det(n), p) - 2 * minval(n, p);
  };
  Distance out;
  out.d = dist(a, b);
  out.d_reverse = dist(b, a);
  // scale b into a so that it is saturated, then find the least k with p^k a inside b
  M n = mm(adj(of(a)), of(b));
  const int shift = minval(n, p) - val(det(of(a)), p);
  M inv = mm(adj(of(b)), of(a));
  // p^k a in p^(-shift) b  iff  p^(k + shift) b^{-1} a integral
  out.annihilator = val(det(of(b)), p) - minval(inv, p) - shift;
  return out;
}

SegmentReport verify_segment(const LatticeRep& rho, const LatticeGraph& g) {
  if (g.horizon_hit) throw PreconditionError("stable lattices reach the visibility horizon");
  if (g.vertices.size() < 2) throw PreconditionError("graph has a single vertex");
  SegmentReport r;
  r.vertices = Index(g.vertices.size());
  r.path = g.path;
  if (!r.path) throw TheoremViolation("stable lattice graph is not a path");
  const i64 p = g.p;
  std::vector<std::vector<Index>> nb(g.vertices.size());
  for (auto [a, b] : g.edges) nb[size_t(a)].push_back(b), nb[size_t(b)].push_back(a);
  Index start = 0;
  while (nb[size_t(start)].size() != 1) ++start;
  std::vector<Index> order{start};
  while (order.size() < g.vertices.size()) {
    const Index last = order.back();
    for (Index w : nb[size_t(last)])
      if (order.size() < 2 || w != order[order.size() - 2]) {
        order.push_back(w);
        break;
      }
  }
  const auto& e0 = g.vertices[size_t(order.front())].reduction;
  const auto& e1 = g.vertices[size_t(order.back())].reduction;
  r.endpoints = e0.kind == ReductionKind::Indecomposable && e1.kind == ReductionKind::Indecomposable &&
                e0.cosocle[0] != e1.cosocle[0];
  r.interior = true;
  for (size_t i = 1; i + 1 < order.size(); ++i)
    if (g.vertices[size_t(order[i])].reduction.kind != ReductionKind::Semisimple) r.interior = false;
  // quotient character of theta_i / theta_{i+1} along the path
  TreeBall ball(p, g.m);
  std::vector<Character> quotients;
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    const auto& u = g.vertices[size_t(order[i])];
    const Index target = g.vertices[size_t(order[i + 1])].tree_index;
    for (size_t k = 0; k < u.reduction.stable_lines.size(); ++k) {
      auto loc = ball.locate(neighbour(u.basis, u.reduction.stable_lines[k], p));
      if (loc && loc->vertex == target) quotients.push_back(u.reduction.kind == ReductionKind::Semisimple
                                                                ? (k == 0 ? u.reduction.socle[1] : u.reduction.socle[0])
                                                                : u.reduction.cosocle[0]);
    }
  }
  r.alternating = quotients.size() + 1 == order.size();
  for (const auto& q : quotients) r.alternating = r.alternating && q == quotients.front();
  r.distances = true;
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = 0; j < order.size(); ++j) {
      Distance d = lattice_distance(rho, g.vertices[size_t(order[i])].basis, g.vertices[size_t(order[j])].basis);
      const int want = int(i > j ? i - j : j - i);
      if (d.d != want || d.d_reverse != want || d.annihilator != want) r.distances = false;
    }
  if (!r.endpoints || !r.interior)
    throw TheoremViolation(!r.endpoints ? "endpoint reductions are not indecomposable with distinct cosocles"
                                        : "an interior reduction is not semisimple");
  if (!r.alternating || !r.distances) throw TheoremViolation("edge quotients or distances are inconsistent");
  return r;
}

}  // namespace modp
