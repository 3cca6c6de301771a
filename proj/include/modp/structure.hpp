#pragma once
#include <map>
#include <random>
#include <variant>
#include <vector>

#include "modp/kmodule.hpp"

namespace modp {

using Label = std::variant<CharacterH, WeightLabel>;
std::string label_str(const Label& l);

struct SocleComponent {
  Label label;
  FpMatrix basis;  // columns in module coordinates
};

struct SocleResult {
  Subspace space;
  std::vector<SocleComponent> components;  // isotypic pieces
  std::vector<Label> labels() const;       // with multiplicity
};

struct Layer {
  Index dim = 0;
  std::vector<Label> labels;
};

struct FiltrationReport {
  std::vector<Layer> layers;
  bool uniserial = false;
  std::vector<Subspace> steps;  // soc^1 M, soc^2 M, ...
};

// joint fixed vectors of the matrices
FpMatrix fixed_vectors(const std::vector<FpMatrix>& mats, Index dim, i64 p);

SocleResult socle(const KModule& m);
Subspace radical(const KModule& m);
FiltrationReport socle_filtration(const KModule& m);
bool is_uniserial(const KModule& m);

// basis of Hom between modules whose generator matrices correspond
std::vector<FpMatrix> hom_space(const std::vector<FpMatrix>& src, const std::vector<FpMatrix>& tgt, Index dsrc,
                                Index dtgt, i64 p);
std::vector<FpMatrix> hom_space(const KModule& a, const KModule& b);

// isomorphism if one is found among the Hom basis and random combinations
std::optional<FpMatrix> find_isomorphism(const KModule& a, const KModule& b, std::mt19937_64& rng, int tries = 40);

// K-modules: multiplicities of Serre weights in soc_K and cosoc_K. Modules
// over K at a level above one are first cut down to their K1-invariants.
std::map<WeightLabel, int> socle_K(const KModule& m);
std::map<WeightLabel, int> cosocle_K(const KModule& m);
// M^{K1} as a module over K mod p
KModule k1_invariants(const KModule& m);

}  // namespace modp
