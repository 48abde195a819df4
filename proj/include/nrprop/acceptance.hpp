#ifndef NRPROP_ACCEPTANCE_HPP
#define NRPROP_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nrprop {

enum class Tier { fast, medium, long_run };

Tier tier_from_string(const std::string& s);
const char* tier_name(Tier t);

struct CheckResult {
  int id = 0;
  Tier tier = Tier::fast;
  bool passed = false;
  std::string name;
  std::string detail;
};

struct VerifyOptions {
  std::string cache_dir;
  int jobs = 1;
  std::uint32_t seed = 0xC0DE5EEDu;   // for the randomized property suites
  bool cumulative = false;            // include lower tiers as well
  std::function<void(const std::string&)> progress;
};

// Runs the verification checks of the given tier (optionally cumulative)
// and returns one result per check. Check ids are stable.
std::vector<CheckResult> run_checks(Tier tier, const VerifyOptions& opts);

}  // namespace nrprop

#endif
