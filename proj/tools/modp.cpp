// modp: build the finite-level objects, run the checks, print JSON reports.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "modp/errors.hpp"
#include "modp/serialize.hpp"
#include "modp/suite.hpp"

using namespace modp;

namespace {

enum Exit { kPass = 0, kFail = 1, kConfig = 2, kPrecondition = 3 };

int emit(Report& rep, const std::string& out, bool timing, double seconds) {
  if (timing && rep.timing.is_null()) rep.timing = {{"seconds", seconds}};
  const std::string text = dump(rep.to_json());
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot write " + out);
    f << text;
  }
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  return rep.pass() ? kPass : kFail;
}

std::pair<int, int> parse_chi(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ConfigError("--chi expects two exponents, e.g. 1,0");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("--chi expects two integers, got '" + s + "'");
  }
}

void restrict_primes(Profile& prof, const std::vector<i64>& ps) {
  for (i64 p : ps)
    if (p != 5 && p != 7) throw ConfigError("verify supports --p 5 or --p 7");
  prof.primes = ps;
  auto keep = [&](i64 p) { return std::find(ps.begin(), ps.end(), p) != ps.end(); };
  std::erase_if(prof.split_max_N, [&](const auto& e) { return !keep(e.first); });
  std::erase_if(prof.iwasawa_n, [&](const auto& e) { return !keep(e.first); });
  std::erase_if(prof.coset_primes, [&](i64 p) { return !keep(p); });
  for (i64 p : ps) {
    prof.split_max_N.try_emplace(p, 2);
    prof.iwasawa_n.try_emplace(p, 1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-level mod p representations of GL2: constructions and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out, cache_dir;
  bool timing = false;
  std::uint64_t seed = 1;
  app.add_option("--out", out, "write the JSON report here instead of stdout");
  app.add_flag("--timing", timing, "include wall-clock timing (reports are then not byte-stable)");
  app.add_option("--seed", seed, "seed for the random samples")->capture_default_str();
  app.add_option("--cache", cache_dir, "module cache directory (default: $MODP_CACHE, else disabled)");

  i64 p = 5;
  std::string chi = "1,0";
  int n = 1, r = 1, N = 3;
  auto* ps = app.add_subcommand("ps", "principal series pi_{n+1}(chi) of the Iwahori");
  ps->add_option("--p", p, "prime >= 5")->capture_default_str();
  ps->add_option("--chi", chi, "character exponents x,y of diag(a,d) -> a^x d^y")->capture_default_str();
  ps->add_option("--n", n, "depth; the module has dimension p^n")->capture_default_str();

  auto* ss = app.add_subcommand("ss", "supersingular truncation pi^(N) of cInd(Sym^r)/T");
  ss->add_option("--p", p, "prime >= 5")->capture_default_str();
  ss->add_option("--r", r, "weight, 0 < r < p-1")->capture_default_str();
  ss->add_option("--n", n, "depth of M_{sigma,n}")->capture_default_str();
  ss->add_option("--N", N, "truncation radius, N >= 2n+1")->capture_default_str();

  std::string input;
  auto* rb = app.add_subcommand("ribet", "stable lattice graph of a rank-two representation");
  rb->add_option("--input", input, "JSON file with p, m and generator matrices")->required();

  std::string prof_name = "quick";
  std::vector<i64> primes;
  auto* vf = app.add_subcommand("verify", "run the acceptance criteria");
  vf->add_option("--profile", prof_name, "quick or full")->capture_default_str();
  vf->add_option("--p", primes, "restrict the prime-indexed criteria to these primes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }

  if (cache_dir.empty())
    if (const char* env = std::getenv("MODP_CACHE")) cache_dir = env;

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  try {
    ModuleCache cache(cache_dir);
    if (*ps) {
      auto [x, y] = parse_chi(chi);
      if (p < 5 || !is_prime(p)) throw ConfigError("p must be a prime >= 5");
      Report rep = cmd_ps(p, CharacterH::make(p, x, y), n, seed, cache);
      return emit(rep, out, timing, elapsed());
    }
    if (*ss) {
      Report rep = cmd_ss(p, r, n, N, cache);
      return emit(rep, out, timing, elapsed());
    }
    if (*rb) {
      std::ifstream in(input);
      if (!in) throw ConfigError("cannot read " + input);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
      }
      Report rep = cmd_ribet(j);
      return emit(rep, out, timing, elapsed());
    }
    Profile prof = profile(prof_name);
    if (!primes.empty()) restrict_primes(prof, primes);
    Report rep;
    rep.command = "verify";
    rep.config = {{"profile", prof.name}, {"primes", prof.primes}, {"seed", seed}};
    nlohmann::json times = nlohmann::json::object();
    for (int id = 1; id <= kCriteria; ++id) {
      const double before = elapsed();
      rep.checks.push_back(run_criterion(id, prof, seed));
      times[rep.checks.back().name] = elapsed() - before;
      std::cerr << (rep.checks.back().pass ? "PASS " : "FAIL ") << rep.checks.back().name << "\n";
    }
    if (timing) rep.timing = {{"seconds", elapsed()}, {"checks", times}};
    return emit(rep, out, timing, elapsed());
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
