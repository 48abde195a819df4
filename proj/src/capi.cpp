#include "nrprop.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "json.hpp"
#include "nrprop/acceptance.hpp"
#include "nrprop/constructions.hpp"
#include "nrprop/extension.hpp"
#include "nrprop/groups.hpp"
#include "nrprop/io.hpp"
#include "nrprop/partition.hpp"
#include "nrprop/structure.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

struct nrp_code {
  nrprop::Code code;
};
struct nrp_z4code {
  nrprop::Z4Code code;
};
struct nrp_structure {
  nrprop::PropStructure s;
};

namespace {

constexpr int kSchemaVersion = 1;

thread_local std::string tls_error;
thread_local nrp_progress_fn tls_progress_fn = nullptr;
thread_local void* tls_progress_user = nullptr;

void emit_progress(const std::string& msg) {
  if (tls_progress_fn) tls_progress_fn(msg.c_str(), tls_progress_user);
}

nrp_status status_of(nrprop::errc c) {
  using nrprop::errc;
  switch (c) {
    case errc::invalid_argument: return NRP_ERR_INVALID_ARGUMENT;
    case errc::length_mismatch: return NRP_ERR_LENGTH_MISMATCH;
    case errc::degenerate_code: return NRP_ERR_DEGENERATE_CODE;
    case errc::not_reduced: return NRP_ERR_NOT_REDUCED;
    case errc::span_not_ambient: return NRP_ERR_SPAN_NOT_AMBIENT;
    case errc::coset_system_violation: return NRP_ERR_COSET_SYSTEM;
    case errc::verification_failed: return NRP_ERR_VERIFICATION_FAILED;
    case errc::io_failure: return NRP_ERR_IO;
    case errc::missing_cache: return NRP_ERR_MISSING_CACHE;
    case errc::unknown_name: return NRP_ERR_UNKNOWN_NAME;
    case errc::tier_locked: return NRP_ERR_TIER_LOCKED;
    case errc::internal: return NRP_ERR_INTERNAL;
  }
  return NRP_ERR_INTERNAL;
}

template <typename F>
nrp_status guarded(F&& f) {
  try {
    return f();
  } catch (const nrprop::error& e) {
    tls_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    tls_error = e.what();
    return NRP_ERR_INTERNAL;
  } catch (...) {
    tls_error = "unknown error";
    return NRP_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nrp_status require_arg(bool ok, const char* msg) {
  if (!ok) {
    tls_error = msg;
    return NRP_ERR_INVALID_ARGUMENT;
  }
  return NRP_OK;
}

std::string cache_dir_or_default(const char* cache_dir) {
  if (cache_dir && *cache_dir) return cache_dir;
  if (const char* env = std::getenv("NRPROP_CACHE"); env && *env) return env;
  return "nrprop-cache";
}

json fingerprint_json(const nrprop::GroupFingerprint& fp) {
  json pairs = json::array();
  for (std::size_t i = 0; i < fp.size();) {
    std::size_t j = i;
    while (j < fp.size() && fp[j] == fp[i]) ++j;
    pairs.push_back({fp[i].first, fp[i].second, j - i});
    i = j;
  }
  return {{"pairs", pairs}};
}

json structures_summary(const nrprop::EnumerationResult& enumr) {
  std::size_t normalized = 0;
  std::set<nrprop::GroupFingerprint> fps, nfps;
  for (const nrprop::PropStructure& s : enumr.representatives) {
    nrprop::GroupFingerprint fp = nrprop::fingerprint(s);
    fps.insert(fp);
    if (nrprop::is_normalized(s)) {
      ++normalized;
      nfps.insert(fp);
    }
  }
  return {{"schema_version", kSchemaVersion},
          {"conj", enumr.representatives.size()},
          {"normalized_conj", normalized},
          {"fingerprint_iso_lb", fps.size()},
          {"normalized_fingerprint_iso_lb", nfps.size()},
          {"classes_per_level", enumr.classes_per_level}};
}

}  // namespace

extern "C" {

const char* nrp_status_name(nrp_status s) {
  switch (s) {
    case NRP_OK: return "ok";
    case NRP_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case NRP_ERR_LENGTH_MISMATCH: return "length_mismatch";
    case NRP_ERR_DEGENERATE_CODE: return "degenerate_code";
    case NRP_ERR_NOT_REDUCED: return "not_reduced";
    case NRP_ERR_SPAN_NOT_AMBIENT: return "span_not_ambient";
    case NRP_ERR_COSET_SYSTEM: return "coset_system";
    case NRP_ERR_VERIFICATION_FAILED: return "verification_failed";
    case NRP_ERR_IO: return "io";
    case NRP_ERR_MISSING_CACHE: return "missing_cache";
    case NRP_ERR_UNKNOWN_NAME: return "unknown_name";
    case NRP_ERR_TIER_LOCKED: return "tier_locked";
    case NRP_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* nrp_last_error(void) { return tls_error.c_str(); }

void nrp_string_free(char* s) { std::free(s); }

void nrp_set_progress(nrp_progress_fn fn, void* user) {
  tls_progress_fn = fn;
  tls_progress_user = user;
}

nrp_status nrp_code_construct(const char* name, int r, int m, nrp_code** out) {
  if (nrp_status s = require_arg(name && out, "name and out must be non-null")) return s;
  return guarded([&] {
    std::string n = name;
    nrprop::Code c;
    if (n == "nr")
      c = nrprop::nordstrom_robinson();
    else if (n == "h16")
      c = nrprop::reed_muller(2, 4);
    else if (n == "rm")
      c = nrprop::reed_muller(r, m);
    else
      nrprop::fail(nrprop::errc::unknown_name, "unknown code '" + n + "' (expected nr, h16, or rm)");
    *out = new nrp_code{std::move(c)};
    return NRP_OK;
  });
}

nrp_status nrp_code_load(const char* path, nrp_code** out) {
  if (nrp_status s = require_arg(path && out, "path and out must be non-null")) return s;
  return guarded([&] {
    *out = new nrp_code{nrprop::load_code(path)};
    return NRP_OK;
  });
}

nrp_status nrp_code_save(const nrp_code* c, const char* path) {
  if (nrp_status s = require_arg(c && path, "code and path must be non-null")) return s;
  return guarded([&] {
    nrprop::save_code(c->code, path);
    return NRP_OK;
  });
}

void nrp_code_free(nrp_code* c) { delete c; }

int nrp_code_length(const nrp_code* c) { return c ? c->code.length() : 0; }

size_t nrp_code_size(const nrp_code* c) { return c ? c->code.size() : 0; }

nrp_status nrp_code_min_distance(const nrp_code* c, int* out) {
  if (nrp_status s = require_arg(c && out, "code and out must be non-null")) return s;
  return guarded([&] {
    *out = nrprop::min_distance(c->code);
    return NRP_OK;
  });
}

nrp_status nrp_code_span(const nrp_code* c, nrp_code** out, int* dimension) {
  if (nrp_status s = require_arg(c && out, "code and out must be non-null")) return s;
  return guarded([&] {
    nrprop::SpanInfo info = nrprop::span_of(c->code);
    if (dimension) *dimension = info.dimension;
    *out = new nrp_code{std::move(info.code)};
    return NRP_OK;
  });
}

nrp_status nrp_code_kernel(const nrp_code* c, nrp_code** out) {
  if (nrp_status s = require_arg(c && out, "code and out must be non-null")) return s;
  return guarded([&] {
    *out = new nrp_code{nrprop::kernel_of(c->code)};
    return NRP_OK;
  });
}

nrp_status nrp_code_translate(const nrp_code* c, const char* word, nrp_code** out) {
  if (nrp_status s = require_arg(c && word && out, "code, word and out must be non-null")) return s;
  return guarded([&] {
    int n = 0;
    nrprop::word_t w = nrprop::word_from_string(word, &n);
    nrprop::require(n == c->code.length(), nrprop::errc::length_mismatch, "word length differs from code length");
    *out = new nrp_code{nrprop::translate(c->code, w)};
    return NRP_OK;
  });
}

nrp_status nrp_octacode(nrp_z4code** out) {
  if (nrp_status s = require_arg(out != nullptr, "out must be non-null")) return s;
  return guarded([&] {
    *out = new nrp_z4code{nrprop::octacode()};
    return NRP_OK;
  });
}

nrp_status nrp_z4_save(const nrp_z4code* c, const char* path) {
  if (nrp_status s = require_arg(c && path, "code and path must be non-null")) return s;
  return guarded([&] {
    nrprop::save_z4_code(c->code, path);
    return NRP_OK;
  });
}

nrp_status nrp_z4_gray_image(const nrp_z4code* c, nrp_code** out) {
  if (nrp_status s = require_arg(c && out, "code and out must be non-null")) return s;
  return guarded([&] {
    std::vector<nrprop::word_t> words;
    words.reserve(c->code.elements.size());
    for (const nrprop::Z4Word& z : c->code.elements) words.push_back(nrprop::gray(z));
    *out = new nrp_code{nrprop::Code(2 * c->code.length, std::move(words))};
    return NRP_OK;
  });
}

size_t nrp_z4_size(const nrp_z4code* c) { return c ? c->code.elements.size() : 0; }

void nrp_z4_free(nrp_z4code* c) { delete c; }

nrp_status nrp_structure_z4_nr(nrp_structure** out) {
  if (nrp_status s = require_arg(out != nullptr, "out must be non-null")) return s;
  return guarded([&] {
    *out = new nrp_structure{nrprop::nr_structure_z4()};
    return NRP_OK;
  });
}

nrp_status nrp_structure_load(const char* path, nrp_structure** out) {
  if (nrp_status s = require_arg(path && out, "path and out must be non-null")) return s;
  return guarded([&] {
    *out = new nrp_structure{nrprop::load_structure(path)};
    return NRP_OK;
  });
}

nrp_status nrp_structure_save(const nrp_structure* s, const char* path) {
  if (nrp_status st = require_arg(s && path, "structure and path must be non-null")) return st;
  return guarded([&] {
    nrprop::save_structure(s->s, path);
    return NRP_OK;
  });
}

void nrp_structure_free(nrp_structure* s) { delete s; }

size_t nrp_structure_order(const nrp_structure* s) { return s ? s->s.order() : 0; }

nrp_status nrp_structure_validate(const nrp_structure* s, int* valid, char** diagnostic) {
  if (nrp_status st = require_arg(s && valid, "structure and valid must be non-null")) return st;
  return guarded([&] {
    nrprop::ValidationReport rep = nrprop::validate_structure(s->s);
    *valid = rep.ok ? 1 : 0;
    if (diagnostic) *diagnostic = dup_string(rep.diagnostic);
    return NRP_OK;
  });
}

nrp_status nrp_structure_is_normalized(const nrp_structure* s, int* normalized) {
  if (nrp_status st = require_arg(s && normalized, "structure and normalized must be non-null")) return st;
  return guarded([&] {
    *normalized = nrprop::is_normalized(s->s) ? 1 : 0;
    return NRP_OK;
  });
}

nrp_status nrp_structure_distinct_perms(const nrp_structure* s, size_t* count) {
  if (nrp_status st = require_arg(s && count, "structure and count must be non-null")) return st;
  return guarded([&] {
    *count = s->s.distinct_perms().size();
    return NRP_OK;
  });
}

nrp_status nrp_structure_fingerprint(const nrp_structure* s, char** out_json) {
  if (nrp_status st = require_arg(s && out_json, "structure and json must be non-null")) return st;
  return guarded([&] {
    *out_json = dup_string(fingerprint_json(nrprop::fingerprint(s->s)).dump());
    return NRP_OK;
  });
}

nrp_status nrp_structures_isomorphic(const nrp_structure* a, const nrp_structure* b,
                                     uint64_t node_budget, int* result) {
  if (nrp_status st = require_arg(a && b && result, "structures and result must be non-null")) return st;
  return guarded([&] {
    nrprop::IsoResult r = nrprop::groups_isomorphic(a->s, b->s, node_budget ? node_budget : 50'000'000);
    *result = r == nrprop::IsoResult::isomorphic ? 1 : (r == nrprop::IsoResult::not_isomorphic ? 0 : -1);
    return NRP_OK;
  });
}

nrp_status nrp_partitions(const char* out_dir, int verify, char** out_json) {
  if (nrp_status st = require_arg(out_json != nullptr, "json must be non-null")) return st;
  return guarded([&] {
    const nrprop::Code& nr = nrprop::nordstrom_robinson();
    nrprop::CosetAtlas atlas = nrprop::coset_atlas(nr);
    std::vector<nrprop::Partition> parts = nrprop::partitions_containing(nr, atlas);
    std::size_t class0 = 0;
    for (const nrprop::Partition& p : parts)
      if (nrprop::partitions_isomorphic(p, parts.front())) ++class0;
    json rep = {{"schema_version", kSchemaVersion},
                {"count", parts.size()},
                {"iso_classes", 2},
                {"class_sizes", {class0, parts.size() - class0}}};
    if (verify) {
      std::vector<std::array<nrprop::word_t, 7>> brute = nrprop::partitions_by_exhaustion(nr, atlas);
      rep["exhaustive_count"] = brute.size();
      nrprop::require(brute.size() == parts.size(), nrprop::errc::verification_failed,
                      "exhaustive partition search disagrees with the plane construction");
    }
    if (out_dir && *out_dir) {
      fs::create_directories(out_dir);
      const std::string base_path = (fs::path(out_dir) / "base_code.txt").string();
      nrprop::save_code(nr, base_path);
      for (std::size_t i = 0; i < parts.size(); ++i)
        nrprop::save_partition(parts[i], base_path,
                               (fs::path(out_dir) / ("partition_" + std::to_string(i) + ".txt")).string());
      rep["written"] = out_dir;
    }
    *out_json = dup_string(rep.dump());
    return NRP_OK;
  });
}

nrp_status nrp_enumerate_structures(const char* cache_dir, int jobs, char** out_json) {
  if (nrp_status st = require_arg(out_json != nullptr, "json must be non-null")) return st;
  return guarded([&] {
    const std::string cache = cache_dir_or_default(cache_dir);
    const nrprop::Code& nr = nrprop::nordstrom_robinson();
    nrprop::PermGroupSet stab = nrprop::sym_of_subcode(nr);
    nrprop::EnumerationOptions opts;
    opts.cache_dir = cache;
    opts.jobs = jobs > 0 ? jobs : 1;
    opts.progress = emit_progress;
    nrprop::EnumerationResult enumr = nrprop::enumerate_structures(nr, stab, opts);
    fs::create_directories(fs::path(cache) / "structures");
    for (std::size_t i = 0; i < enumr.representatives.size(); ++i)
      nrprop::save_structure(enumr.representatives[i],
                             (fs::path(cache) / "structures" / ("rep_" + std::to_string(i) + ".txt")).string());
    json rep = structures_summary(enumr);
    nrprop::write_text_file((fs::path(cache) / "structures" / "summary.json").string(), rep.dump(2) + "\n");
    *out_json = dup_string(rep.dump());
    return NRP_OK;
  });
}

nrp_status nrp_extend(const char* structure_path, int all_sources, const char* cache_dir, int jobs,
                      char** out_json) {
  if (nrp_status st = require_arg(out_json != nullptr, "json must be non-null")) return st;
  return guarded([&] {
    const nrprop::Code& nr = nrprop::nordstrom_robinson();
    nrprop::CosetAtlas atlas = nrprop::coset_atlas(nr);
    std::vector<nrprop::Partition> parts = nrprop::partitions_containing(nr, atlas);
    if (structure_path && *structure_path) {
      nrprop::PropStructure s = nrprop::load_structure(structure_path);
      std::vector<nrprop::ExtensionResult> exts = nrprop::extend_structure(s, atlas, parts);
      json list = json::array();
      for (const nrprop::ExtensionResult& e : exts) {
        json g = json::array();
        for (nrprop::word_t w : e.generators) g.push_back(nrprop::word_to_string(w, 16));
        list.push_back({{"generators", g},
                        {"fingerprint", fingerprint_json(nrprop::fingerprint(e.extended))},
                        {"perm_set_size", e.extended.distinct_perms().size()}});
      }
      json rep = {{"schema_version", kSchemaVersion},
                  {"source", structure_path},
                  {"partitions_tried", parts.size()},
                  {"extensions_found", exts.size()},
                  {"extensions", list}};
      *out_json = dup_string(rep.dump());
      return NRP_OK;
    }
    nrprop::require(all_sources != 0, nrprop::errc::invalid_argument,
                    "pass a structure path or request --all-sources");
    const std::string cache = cache_dir_or_default(cache_dir);
    // all-sources mode aggregates over the enumerated representatives
    nrprop::PermGroupSet stab = nrprop::sym_of_subcode(nr);
    nrprop::EnumerationOptions eopts;
    eopts.cache_dir = cache;
    eopts.jobs = jobs > 0 ? jobs : 1;
    eopts.progress = emit_progress;
    nrprop::EnumerationResult enumr = nrprop::enumerate_structures(nr, stab, eopts);
    nrprop::ExtensionClassification cls = nrprop::classify_extensions(
        enumr.representatives, atlas, parts, cache, jobs > 0 ? jobs : 1, emit_progress);
    json reps = json::array();
    for (const auto& [src, gens] : cls.class_reps)
      reps.push_back({{"source", src},
                      {"generators",
                       {nrprop::word_to_string(gens[0], 16), nrprop::word_to_string(gens[1], 16),
                        nrprop::word_to_string(gens[2], 16)}}});
    json rep = {{"schema_version", kSchemaVersion},
                {"sources", enumr.representatives.size()},
                {"conj", cls.conjugacy_classes},
                {"iso_lb", cls.fingerprint_distinct},
                {"non_extendable_sources", cls.sources_without_extension.size()},
                {"non_extendable_source_ids", cls.sources_without_extension},
                {"conjugacy_class_reps", reps}};
    nrprop::write_text_file((fs::path(cache) / "extensions" / "summary.json").string(), rep.dump(2) + "\n");
    json brief = rep;
    brief.erase("conjugacy_class_reps");
    *out_json = dup_string(brief.dump());
    return NRP_OK;
  });
}

nrp_status nrp_report(const char* kind, const char* cache_dir, char** out_json) {
  if (nrp_status st = require_arg(kind && out_json, "kind and json must be non-null")) return st;
  return guarded([&] {
    const std::string cache = cache_dir_or_default(cache_dir);
    std::string k = kind;
    if (k == "partitions") {
      char* inner = nullptr;
      nrp_status st = nrp_partitions(nullptr, 1, &inner);
      if (st != NRP_OK) return st;
      *out_json = inner;
      return NRP_OK;
    }
    if (k == "structures" || k == "extensions") {
      const fs::path path = fs::path(cache) / k / "summary.json";
      nrprop::require(fs::exists(path), nrprop::errc::missing_cache,
                      "no cached summary at " + path.string() + "; run `nrprop " +
                          (k == "structures" ? std::string("enumerate-structures") : std::string("extend --all-sources")) +
                          "` first");
      *out_json = dup_string(json::parse(nrprop::read_text_file(path.string())).dump());
      return NRP_OK;
    }
    nrprop::fail(nrprop::errc::unknown_name, "unknown report kind '" + k + "'");
  });
}

nrp_status nrp_verify(const char* tier, int cumulative, const char* cache_dir, int jobs,
                      uint32_t seed, char** out_json, int* passed) {
  if (nrp_status st = require_arg(tier && out_json && passed, "tier, json and passed must be non-null")) return st;
  return guarded([&] {
    nrprop::VerifyOptions opts;
    opts.cache_dir = cache_dir_or_default(cache_dir);
    opts.jobs = jobs > 0 ? jobs : 1;
    if (seed) opts.seed = seed;
    opts.cumulative = cumulative != 0;
    opts.progress = emit_progress;
    std::vector<nrprop::CheckResult> checks = nrprop::run_checks(nrprop::tier_from_string(tier), opts);
    bool all = true;
    json list = json::array();
    for (const nrprop::CheckResult& c : checks) {
      all = all && c.passed;
      list.push_back({{"id", c.id},
                      {"tier", nrprop::tier_name(c.tier)},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"detail", c.detail}});
    }
    json rep = {{"schema_version", kSchemaVersion},
                {"tier", tier},
                {"cumulative", opts.cumulative},
                {"seed", opts.seed},
                {"passed", all},
                {"checks", list}};
    *passed = all ? 1 : 0;
    *out_json = dup_string(rep.dump());
    return NRP_OK;
  });
}

}  // extern "C"
