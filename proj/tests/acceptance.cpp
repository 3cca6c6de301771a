// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "modp/suite.hpp"

int main(int argc, char** argv) {
  const std::string name = argc > 1 ? argv[1] : "full";
  const modp::Profile prof = modp::profile(name);
  int failed = 0;
  for (int id = 1; id <= modp::kCriteria; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    const modp::Check c = modp::run_criterion(id, prof, 20240601);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d %-18s %7.2f s", c.pass ? "PASS" : "FAIL", id, modp::criterion_name(id).c_str(), s);
    if (!c.pass) std::printf("  %s", c.witness.dump().c_str());
    std::printf("\n");
    std::fflush(stdout);
    failed += !c.pass;
  }
  std::printf("%d of %d criteria passed (profile %s)\n", modp::kCriteria - failed, modp::kCriteria, name.c_str());
  return failed ? 1 : 0;
}
