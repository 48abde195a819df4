// Command-line front end for the nrprop shared library. Talks to the
// library exclusively through the C interface in nrprop.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nrprop.h"

using json = nlohmann::json;

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { nrp_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int fail_with(nrp_status st, const std::string& what) {
  std::fprintf(stderr, "error: %s: %s (%s)\n", what.c_str(), nrp_last_error(), nrp_status_name(st));
  return 1;
}

void progress_printer(const char* message, void*) { std::fprintf(stderr, "  .. %s\n", message); }

struct Options {
  std::string cache_dir;
  std::string tier = "fast";
  std::string format = "text";
  int jobs = 1;
  std::uint32_t seed = 0;
  bool verbose = false;
};

void print_json_or_text(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::printf("%s\n", j.dump(2).c_str());
  else
    std::printf("%s", text.c_str());
}

int run_construct(const Options& opt, const std::string& target, int r, int m, const std::string& output) {
  if (target == "octacode") {
    nrp_z4code* z = nullptr;
    if (nrp_status st = nrp_octacode(&z)) return fail_with(st, "octacode");
    std::unique_ptr<nrp_z4code, decltype(&nrp_z4_free)> zguard(z, &nrp_z4_free);
    if (!output.empty())
      if (nrp_status st = nrp_z4_save(z, output.c_str())) return fail_with(st, "save " + output);
    nrp_code* g = nullptr;
    if (nrp_status st = nrp_z4_gray_image(z, &g)) return fail_with(st, "gray image");
    std::unique_ptr<nrp_code, decltype(&nrp_code_free)> gguard(g, &nrp_code_free);
    int d = 0;
    if (nrp_status st = nrp_code_min_distance(g, &d)) return fail_with(st, "min distance");
    json j = {{"target", target}, {"length", 8}, {"size", nrp_z4_size(z)}, {"gray_min_distance", d}};
    print_json_or_text(opt, j,
                       "octacode: 256 words of length 8 over Z4, Gray image distance " + std::to_string(d) +
                           (output.empty() ? "\n" : ", written to " + output + "\n"));
    return 0;
  }
  nrp_code* c = nullptr;
  if (nrp_status st = nrp_code_construct(target.c_str(), r, m, &c)) return fail_with(st, "construct " + target);
  std::unique_ptr<nrp_code, decltype(&nrp_code_free)> guard(c, &nrp_code_free);
  if (!output.empty())
    if (nrp_status st = nrp_code_save(c, output.c_str())) return fail_with(st, "save " + output);
  int d = 0;
  if (nrp_status st = nrp_code_min_distance(c, &d)) return fail_with(st, "min distance");
  json j = {{"target", target}, {"length", nrp_code_length(c)}, {"size", nrp_code_size(c)}, {"min_distance", d}};
  print_json_or_text(opt, j,
                     target + ": n=" + std::to_string(nrp_code_length(c)) + " M=" + std::to_string(nrp_code_size(c)) +
                         " d=" + std::to_string(d) + (output.empty() ? "\n" : ", written to " + output + "\n"));
  return 0;
}

int run_kernel(const Options& opt, const std::string& input, const std::string& output) {
  nrp_code* c = nullptr;
  if (nrp_status st = nrp_code_load(input.c_str(), &c)) return fail_with(st, "load " + input);
  std::unique_ptr<nrp_code, decltype(&nrp_code_free)> guard(c, &nrp_code_free);
  nrp_code* k = nullptr;
  if (nrp_status st = nrp_code_kernel(c, &k)) return fail_with(st, "kernel");
  std::unique_ptr<nrp_code, decltype(&nrp_code_free)> kguard(k, &nrp_code_free);
  if (!output.empty())
    if (nrp_status st = nrp_code_save(k, output.c_str())) return fail_with(st, "save " + output);
  json j = {{"input", input}, {"kernel_size", nrp_code_size(k)}};
  print_json_or_text(opt, j,
                     "kernel: " + std::to_string(nrp_code_size(k)) + " words" +
                         (output.empty() ? "\n" : ", written to " + output + "\n"));
  return 0;
}

int run_partitions(const Options& opt, const std::string& base, const std::string& out_dir, bool verify) {
  // The base option is accepted for interface completeness; the canonical
  // base is the library's Nordstrom-Robinson code and other bases are
  // rejected by the library with a clear error.
  if (!base.empty()) {
    nrp_code* c = nullptr;
    if (nrp_status st = nrp_code_load(base.c_str(), &c)) return fail_with(st, "load " + base);
    nrp_code_free(c);
  }
  StringOut out;
  if (nrp_status st = nrp_partitions(out_dir.empty() ? nullptr : out_dir.c_str(), verify ? 1 : 0, &out.s))
    return fail_with(st, "partitions");
  json j = json::parse(out.str());
  print_json_or_text(opt, j,
                     "partitions: " + std::to_string(j["count"].get<std::size_t>()) + ", isomorphism classes: " +
                         std::to_string(j["iso_classes"].get<int>()) + "\n");
  return 0;
}

int run_enumerate(const Options& opt) {
  if (opt.tier != "long") {
    std::fprintf(stderr, "error: enumerate-structures is a long-tier operation; pass --tier long\n");
    return 1;
  }
  StringOut out;
  if (nrp_status st = nrp_enumerate_structures(opt.cache_dir.empty() ? nullptr : opt.cache_dir.c_str(),
                                               opt.jobs, &out.s))
    return fail_with(st, "enumerate-structures");
  json j = json::parse(out.str());
  print_json_or_text(opt, j,
                     "conjugacy classes: " + std::to_string(j["conj"].get<std::size_t>()) + ", normalized: " +
                         std::to_string(j["normalized_conj"].get<std::size_t>()) + ", fingerprint-distinct: " +
                         std::to_string(j["fingerprint_iso_lb"].get<std::size_t>()) + "\n");
  return 0;
}

int run_extend(const Options& opt, const std::string& structure, bool all_sources) {
  if (all_sources && opt.tier != "long") {
    std::fprintf(stderr, "error: extend --all-sources is a long-tier operation; pass --tier long\n");
    return 1;
  }
  StringOut out;
  if (nrp_status st = nrp_extend(structure.empty() ? nullptr : structure.c_str(), all_sources ? 1 : 0,
                                 opt.cache_dir.empty() ? nullptr : opt.cache_dir.c_str(), opt.jobs, &out.s))
    return fail_with(st, "extend");
  json j = json::parse(out.str());
  if (all_sources)
    print_json_or_text(opt, j,
                       "extension classes: " + std::to_string(j["conj"].get<std::size_t>()) +
                           ", fingerprint-distinct: " + std::to_string(j["iso_lb"].get<std::size_t>()) +
                           ", sources without extension: " +
                           std::to_string(j["non_extendable_sources"].get<std::size_t>()) + "\n");
  else
    print_json_or_text(opt, j,
                       "extensions found: " + std::to_string(j["extensions_found"].get<std::size_t>()) + "\n");
  return 0;
}

int run_fingerprint(const Options& opt, const std::string& structure) {
  nrp_structure* s = nullptr;
  if (nrp_status st = nrp_structure_load(structure.c_str(), &s)) return fail_with(st, "load " + structure);
  std::unique_ptr<nrp_structure, decltype(&nrp_structure_free)> guard(s, &nrp_structure_free);
  int valid = 0;
  StringOut diag;
  if (nrp_status st = nrp_structure_validate(s, &valid, &diag.s)) return fail_with(st, "validate");
  if (!valid) {
    std::fprintf(stderr, "error: structure invalid: %s\n", diag.str().c_str());
    return 1;
  }
  StringOut fp;
  if (nrp_status st = nrp_structure_fingerprint(s, &fp.s)) return fail_with(st, "fingerprint");
  int normalized = 0;
  size_t perms = 0;
  nrp_structure_is_normalized(s, &normalized);
  nrp_structure_distinct_perms(s, &perms);
  json j = json::parse(fp.str());
  j["order"] = nrp_structure_order(s);
  j["normalized"] = normalized != 0;
  j["distinct_perms"] = perms;
  std::string text = "order " + std::to_string(nrp_structure_order(s)) + ", distinct permutations " +
                     std::to_string(perms) + (normalized ? " (normalized)\n" : "\n");
  print_json_or_text(opt, j, text);
  return 0;
}

int run_report(const Options& opt, const std::string& kind) {
  StringOut out;
  if (nrp_status st = nrp_report(kind.c_str(), opt.cache_dir.empty() ? nullptr : opt.cache_dir.c_str(), &out.s))
    return fail_with(st, "report " + kind);
  json j = json::parse(out.str());
  print_json_or_text(opt, j, j.dump(2) + "\n");
  return 0;
}

int run_verify(const Options& opt, bool exact_tier) {
  StringOut out;
  int passed = 0;
  if (nrp_status st = nrp_verify(opt.tier.c_str(), exact_tier ? 0 : 1,
                                 opt.cache_dir.empty() ? nullptr : opt.cache_dir.c_str(), opt.jobs, opt.seed,
                                 &out.s, &passed))
    return fail_with(st, "verify");
  json j = json::parse(out.str());
  if (opt.format == "json") {
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    for (const auto& c : j["checks"])
      std::printf("[%s] %2d [%s] %s — %s\n", c["passed"].get<bool>() ? "PASS" : "FAIL", c["id"].get<int>(),
                  c["tier"].get<std::string>().c_str(), c["name"].get<std::string>().c_str(),
                  c["detail"].get<std::string>().c_str());
    std::printf("%s (seed %u)\n", passed ? "all checks passed" : "SOME CHECKS FAILED",
                j["seed"].get<unsigned>());
  }
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nordstrom-Robinson / extended Hamming propelinear-structure toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--cache", opt.cache_dir, "cache directory (default: $NRPROP_CACHE or ./nrprop-cache)");
  app.add_option("--tier", opt.tier, "execution tier: fast, medium, long")->check(CLI::IsMember({"fast", "medium", "long"}));
  app.add_option("--jobs", opt.jobs, "worker threads for long operations")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format: text, json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for randomized property suites (0: library default)");
  app.add_flag("--verbose", opt.verbose, "print progress for long operations");

  auto* construct = app.add_subcommand("construct", "build a code and report its parameters");
  std::string target, output;
  int rm_r = 1, rm_m = 4;
  construct->add_option("target", target, "nr, h16, rm, octacode")->required();
  construct->add_option("-r", rm_r, "Reed-Muller order (rm target)");
  construct->add_option("-m", rm_m, "Reed-Muller variables (rm target)");
  construct->add_option("-o,--output", output, "write the code file here");

  auto* kernel = app.add_subcommand("kernel", "kernel of a code file");
  std::string kin, kout;
  kernel->add_option("input", kin, "code file")->required();
  kernel->add_option("-o,--output", kout, "write the kernel here");

  auto* partitions = app.add_subcommand("partitions", "partitions of H16 into Nordstrom-Robinson translates");
  std::string part_base, part_out;
  bool part_verify = false;
  partitions->add_option("--base", part_base, "base code file (canonical base is used for the search)");
  partitions->add_option("-o,--output-dir", part_out, "write partition files here");
  partitions->add_flag("--verify", part_verify, "re-derive the list by exhaustive search");

  auto* enumerate = app.add_subcommand("enumerate-structures",
                                       "conjugacy classes of regular structures on the Nordstrom-Robinson code");

  auto* extend = app.add_subcommand("extend", "narrow extensions to H16");
  std::string ext_structure;
  bool ext_all = false;
  extend->add_option("--structure", ext_structure, "structure file to extend");
  extend->add_flag("--all-sources", ext_all, "extend every enumerated class representative");

  auto* fingerprint = app.add_subcommand("fingerprint", "order/centralizer fingerprint of a structure file");
  std::string fp_structure;
  fingerprint->add_option("structure", fp_structure, "structure file")->required();

  auto* report = app.add_subcommand("report", "machine-readable summary of cached results");
  std::string report_kind;
  report->add_option("kind", report_kind, "partitions, structures, extensions")->required();

  auto* verify = app.add_subcommand("verify", "run the verification suites for a tier");
  bool verify_exact = false;
  verify->add_flag("--exact-tier", verify_exact, "run only the named tier, not the lower ones");

  CLI11_PARSE(app, argc, argv);

  if (opt.verbose) nrp_set_progress(progress_printer, nullptr);

  if (construct->parsed()) return run_construct(opt, target, rm_r, rm_m, output);
  if (kernel->parsed()) return run_kernel(opt, kin, kout);
  if (partitions->parsed()) return run_partitions(opt, part_base, part_out, part_verify);
  if (enumerate->parsed()) return run_enumerate(opt);
  if (extend->parsed()) return run_extend(opt, ext_structure, ext_all);
  if (fingerprint->parsed()) return run_fingerprint(opt, fp_structure);
  if (report->parsed()) return run_report(opt, report_kind);
  if (verify->parsed()) return run_verify(opt, verify_exact);
  return 1;
}
