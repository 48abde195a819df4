// Acceptance suite runner: executes the verification checks of one tier
// and prints one PASS/FAIL line per check. Exit code 0 iff all passed.

#include <cstdio>
#include <cstring>
#include <string>

#include "nrprop/acceptance.hpp"

int main(int argc, char** argv) {
  std::string tier = "fast";
  nrprop::VerifyOptions opts;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&](const char* what) -> std::string {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "missing value for %s\n", what);
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--tier")
      tier = next("--tier");
    else if (arg == "--cache")
      opts.cache_dir = next("--cache");
    else if (arg == "--jobs")
      opts.jobs = std::stoi(next("--jobs"));
    else if (arg == "--seed")
      opts.seed = static_cast<std::uint32_t>(std::stoul(next("--seed")));
    else if (arg == "--cumulative")
      opts.cumulative = true;
    else if (arg == "--verbose")
      verbose = true;
    else {
      std::fprintf(stderr, "usage: %s [--tier fast|medium|long] [--cumulative] [--cache DIR] [--jobs N] [--seed S] [--verbose]\n",
                   argv[0]);
      return 2;
    }
  }
  if (verbose) opts.progress = [](const std::string& m) { std::fprintf(stderr, "  .. %s\n", m.c_str()); };

  std::vector<nrprop::CheckResult> results;
  try {
    results = nrprop::run_checks(nrprop::tier_from_string(tier), opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
    return 1;
  }
  bool all = true;
  for (const nrprop::CheckResult& c : results) {
    std::printf("[%s] criterion %2d [%s] %s%s%s\n", c.passed ? "PASS" : "FAIL", c.id,
                nrprop::tier_name(c.tier), c.name.c_str(), c.detail.empty() ? "" : " — ",
                c.detail.c_str());
    all = all && c.passed;
  }
  std::printf("%s: %zu checks, tier %s\n", all ? "ACCEPTED" : "REJECTED", results.size(), tier.c_str());
  return all ? 0 : 1;
}
