#pragma once
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "modp/mat2.hpp"

namespace modp {

enum class GroupKind { K, Iw, Iw1, K0, K0plus, Ki, H, B, U, Ubar, B1 };

// K0(p^i) = [*, *; p^i, *]; K0plus(p^i) = [*, p^(i-1); p, *];
// Ki(i) = 1 + p^i M_2; U(i), Ubar(i) are unipotents with entry in p^i;
// B1 is upper triangular with diagonal congruent to 1.
struct SubgroupId {
  GroupKind kind = GroupKind::K;
  int i = 0;
  bool operator==(const SubgroupId&) const = default;
  std::string name() const;
  static SubgroupId parse(const std::string& s);
};

namespace groups {
inline SubgroupId K() { return {GroupKind::K, 0}; }
inline SubgroupId Iw() { return {GroupKind::Iw, 1}; }
inline SubgroupId Iw1() { return {GroupKind::Iw1, 1}; }
inline SubgroupId K0(int i) { return i == 0 ? K() : SubgroupId{GroupKind::K0, i}; }
inline SubgroupId K0plus(int i) { return {GroupKind::K0plus, i}; }
inline SubgroupId Ki(int i) { return {GroupKind::Ki, i}; }
inline SubgroupId H() { return {GroupKind::H, 0}; }
inline SubgroupId B() { return {GroupKind::B, 0}; }
inline SubgroupId U(int i = 0) { return {GroupKind::U, i}; }
inline SubgroupId Ubar(int i = 0) { return {GroupKind::Ubar, i}; }
inline SubgroupId B1() { return {GroupKind::B1, 1}; }
}  // namespace groups

bool is_member(const Mat2& g, const SubgroupId& s);
// |S mod p^N| as a decimal string, exact
std::string order_string(const SubgroupId& s, i64 p, int N);
unsigned __int128 order(const SubgroupId& s, i64 p, int N);
// torus H times a pro-p normal subgroup
bool has_split_radical(const SubgroupId& s);

struct Certificate {
  std::string method;  // "orbit" or "lifted"
  int certified_level = 0;
  std::string order;
};

struct GeneratorSet {
  SubgroupId group;
  i64 p = 0;
  int level = 0;
  std::vector<Mat2> torus;  // generate H inside S
  std::vector<Mat2> pro_p;  // generate the pro-p radical, or everything for K
  Certificate cert;
  std::vector<Mat2> all() const;
  size_t size() const { return torus.size() + pro_p.size(); }
};

// Cached; throws InternalError if certification fails.
const GeneratorSet& generators(const SubgroupId& s, i64 p, int N);
// Order of the group generated by gens mod p^N (orbit-stabiliser), exact.
unsigned __int128 generated_order(const std::vector<Mat2>& gens, unsigned __int128 target);

Mat2 random_element(const SubgroupId& s, i64 p, int N, std::mt19937_64& rng);
void for_each_element(const SubgroupId& s, i64 p, int N, const std::function<void(const Mat2&)>& f);

// Right cosets small\big: x = h * reps[k] with h in small.
struct CosetFactor {
  Mat2 h;
  size_t rep = 0;
};
std::vector<Mat2> coset_reps(const SubgroupId& big, const SubgroupId& small, i64 p, int N);
CosetFactor coset_factor(const SubgroupId& big, const SubgroupId& small, const Mat2& x);

struct PartitionReport {
  bool pass = false;
  std::vector<std::size_t> class_sizes;
  std::size_t group_size = 0;
  std::string detail;
};
// Iw mod p^(n+1) as the union of K0(p^(n+1)) [1 0; p^i 1] B, i = 1..n+1,
// checked by orbit enumeration.
PartitionReport double_coset_check(i64 p, int n);
// K intersected with diag(1, p^n) Iw B(Q_p) equals K0(p^(n+1)); exhaustive
// at level n+1 when small, sampled otherwise.
PartitionReport intersection_identity_check(i64 p, int n, std::size_t samples, std::mt19937_64& rng);

std::string to_string_u128(unsigned __int128 v);

}  // namespace modp
