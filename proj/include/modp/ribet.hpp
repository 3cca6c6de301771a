#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "modp/tree.hpp"

namespace modp {

// Rank-two representation over Z/p^m given by generator images.
struct LatticeRep {
  i64 p = 5;
  int m = 2;
  std::vector<Mat2> gens;
  std::string label;
};
LatticeRep lattice_rep_from_json(const nlohmann::json& j);

enum class ReductionKind { Semisimple, Indecomposable, Irreducible, Unknown };
std::string kind_name(ReductionKind k);

// characters are tuples of generator eigenvalues mod p
using Character = std::vector<i64>;

struct Reduction {
  ReductionKind kind = ReductionKind::Unknown;
  std::vector<Character> socle, cosocle;
  std::vector<std::pair<i64, i64>> stable_lines;  // (x, y) spanning the line
};

struct LatticeVertex {
  Index tree_index = 0;  // vertex of the tree around L0 = Z_p^2
  ScaledMat basis;
  int distance = 0;
  Reduction reduction;
};

struct LatticeGraph {
  i64 p = 5;
  int m = 2;
  std::vector<LatticeVertex> vertices;
  std::vector<std::pair<Index, Index>> edges;
  bool path = false;
  bool horizon_hit = false;  // a stable class at distance m, the visibility bound
};

// theta = g Z_p^2 with g primitive and v(det g) <= m
bool is_stable(const LatticeRep& rho, const ScaledMat& g);
// action on theta / p theta; needs v(det g) <= m - 1
Reduction reduction_type(const LatticeRep& rho, const ScaledMat& g);
LatticeGraph stable_lattice_graph(const LatticeRep& rho);
nlohmann::json to_json(const LatticeGraph& g);

struct Distance {
  int d = 0, d_reverse = 0;
  int annihilator = 0;  // p-exponent of Ann(theta_0 / theta_1) for the saturated pair
};
Distance lattice_distance(const LatticeRep& rho, const ScaledMat& a, const ScaledMat& b);

struct SegmentReport {
  Index vertices = 0;
  bool path = false, endpoints = false, interior = false;
  bool alternating = false;  // edge quotients along one orientation all agree
  bool distances = false;    // symmetric, annihilator law, equal to path distance
  std::string length_reading = "at least two vertices";
};
SegmentReport verify_segment(const LatticeRep& rho, const LatticeGraph& g);

}  // namespace modp
