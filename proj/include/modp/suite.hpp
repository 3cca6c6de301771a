#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modp/kmodule.hpp"
#include "modp/report.hpp"

namespace modp {

// Parameter ranges for the acceptance criteria.
struct Profile {
  std::string name;
  std::vector<i64> primes;
  int ps_max_n = 2;
  std::map<i64, int> split_max_N;
  std::map<i64, int> iwasawa_n;
  std::vector<i64> coset_primes{5};
  int coset_max_n = 1;
  // (p, r, N) truncations for the supersingular K-socle and K1 checks
  std::vector<std::array<i64, 3>> ss_truncations;
  // (p, r, n) for M_{sigma,n}, and (p, r, n) for the containment
  std::vector<std::array<i64, 3>> m_cases, containment_cases;
  int exchange_max_n = 1;
  int tree_max_N = 3;
};
// "quick" or "full"; anything else is a config error
Profile profile(const std::string& name);

inline constexpr int kCriteria = 12;
std::string criterion_name(int id);
Check run_criterion(int id, const Profile& prof, std::uint64_t seed);

// directory holding the bundled lattice representations
std::string data_dir();

// Optional on-disk cache of constructed modules, keyed by construction
// parameters and tool version. An empty directory disables it.
class ModuleCache {
 public:
  explicit ModuleCache(std::string dir = {}) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  // the module from the cache, or build() stored for next time
  KModule get(const std::string& key, const std::function<KModule()>& build);
  int hits() const { return hits_; }

 private:
  std::string dir_;
  int hits_ = 0;
};

Report cmd_ps(i64 p, const CharacterH& chi, int n, std::uint64_t seed, ModuleCache& cache);
Report cmd_ss(i64 p, int r, int n, int N, ModuleCache& cache);
Report cmd_ribet(const nlohmann::json& input);
Report cmd_verify(const Profile& prof, std::uint64_t seed);

}  // namespace modp
