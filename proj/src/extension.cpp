#include "nrprop/extension.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "nrprop/constructions.hpp"
#include "nrprop/groups.hpp"

namespace nrprop {

namespace {

// Identity-permutation words of a structure; always a subspace of the
// kernel of its code.
std::vector<word_t> identity_words(const PropStructure& s) {
  std::vector<word_t> out;
  const Perm id = Perm::identity();
  for (std::size_t i = 0; i < s.order(); ++i)
    if (s.perm_of[i] == id) out.push_back(s.code[i]);
  return out;
}

struct TripleScan {
  std::array<word_t, 3> gens;
  std::vector<word_t> vspace;  // sorted words of <gens> + identity words
};

// All invariant translator spaces for one (source, partition) pair. A
// translator triple works iff the space it spans together with the
// identity words is invariant under every permutation of the source; the
// resulting group is then the full extension of order 2048.
std::vector<TripleScan> scan_partition(const std::vector<Perm>& perms, const std::vector<word_t>& wid,
                                       const Partition& part, const CosetAtlas& atlas) {
  // Pick the lexicographically least non-concurrent line triple; every
  // valid translator space contains exactly one generator triple over it.
  int li = -1, lj = -1, lk = -1;
  [&] {
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        for (int k = j + 1; k < 7; ++k) {
          int label_i = atlas.coset_index(part.translators[static_cast<std::size_t>(i)]);
          int label_j = atlas.coset_index(part.translators[static_cast<std::size_t>(j)]);
          int label_k = atlas.coset_index(part.translators[static_cast<std::size_t>(k)]);
          const unsigned common = static_cast<unsigned>(atlas.subset_of_coset[label_i]) &
                                  static_cast<unsigned>(atlas.subset_of_coset[label_j]) &
                                  static_cast<unsigned>(atlas.subset_of_coset[label_k]);
          if (common == 0) {
            li = i;
            lj = j;
            lk = k;
            return;
          }
        }
  }();
  require(li >= 0, errc::internal, "every Fano plane has a non-concurrent line triple");

  // The 7 coset indices a translator space may touch.
  bool allowed_coset[64] = {};
  for (word_t t : part.translators) allowed_coset[atlas.coset_index(t)] = true;

  const auto& ker = atlas.base.kernel.words();
  auto coset_words = [&](int slot) {
    std::vector<word_t> out;
    out.reserve(ker.size());
    for (word_t k : ker) out.push_back(part.translators[static_cast<std::size_t>(slot)] ^ k);
    std::sort(out.begin(), out.end());
    return out;
  };

  // Per-coordinate prefilter: every permutation must keep the candidate
  // inside the union of the translator cosets.
  auto prefilter = [&](std::vector<word_t> cand) {
    std::vector<word_t> kept;
    for (word_t t : cand) {
      bool ok = true;
      for (const Perm& p : perms) {
        word_t u = act(p, t);
        if (atlas.coset_of_word[u] == 0xFF || !allowed_coset[atlas.coset_of_word[u]]) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(t);
    }
    return kept;
  };
  const std::vector<word_t> c1 = prefilter(coset_words(li));
  if (c1.empty()) return {};
  const std::vector<word_t> c2 = prefilter(coset_words(lj));
  if (c2.empty()) return {};
  const std::vector<word_t> c3 = prefilter(coset_words(lk));
  if (c3.empty()) return {};

  std::vector<TripleScan> found;
  std::set<std::vector<word_t>> seen_spaces;
  for (word_t t1 : c1)
    for (word_t t2 : c2)
      for (word_t t3 : c3) {
        // the seven nonzero combinations must land in the seven translator
        // cosets, one each
        const word_t combos[7] = {t1, t2, t3, t1 ^ t2, t1 ^ t3, t2 ^ t3, t1 ^ t2 ^ t3};
        bool used[64] = {};
        bool ok = true;
        for (word_t c : combos) {
          if (atlas.coset_of_word[c] == 0xFF) {
            ok = false;
            break;
          }
          const std::uint8_t idx = atlas.coset_of_word[c];
          if (!allowed_coset[idx] || used[idx]) {
            ok = false;
            break;
          }
          used[idx] = true;
        }
        if (!ok) continue;
        // exact invariance of span{t1,t2,t3} + identity words
        std::vector<word_t> vspace;
        vspace.reserve(8 * wid.size());
        for (const word_t t : {word_t{0}, t1, t2, t3, t1 ^ t2, t1 ^ t3, t2 ^ t3, t1 ^ t2 ^ t3})
          for (word_t w : wid) vspace.push_back(t ^ w);
        std::sort(vspace.begin(), vspace.end());
        for (const Perm& p : perms) {
          for (word_t b : {t1, t2, t3})
            if (!std::binary_search(vspace.begin(), vspace.end(), act(p, b))) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (!ok) continue;
        if (seen_spaces.insert(vspace).second) found.push_back({{t1, t2, t3}, std::move(vspace)});
      }
  return found;
}

}  // namespace

PropStructure build_extension(const PropStructure& source, const std::array<word_t, 3>& generators,
                              const Code& h16) {
  const word_t t[3] = {generators[0], generators[1], generators[2]};
  std::vector<Auto> elems;
  elems.reserve(8 * source.order());
  for (unsigned m = 0; m < 8; ++m) {
    word_t shift = 0;
    for (int b = 0; b < 3; ++b)
      if (m >> b & 1) shift ^= t[b];
    for (std::size_t i = 0; i < source.order(); ++i) elems.push_back({shift ^ source.code[i], source.perm_of[i]});
  }
  return structure_from_elements(h16, elems);
}

std::vector<ExtensionResult> extend_structure(const PropStructure& s, const CosetAtlas& atlas,
                                              const std::vector<Partition>& partitions) {
  ValidationReport rep = validate_structure(s);
  require(rep.ok, errc::invalid_argument, "source structure invalid: " + rep.diagnostic);
  require(s.code == atlas.base.base, errc::invalid_argument, "source structure must live on the atlas base code");
  const std::vector<Perm> perms = s.distinct_perms();
  const std::vector<word_t> wid = identity_words(s);
  std::vector<ExtensionResult> out;
  std::set<std::vector<word_t>> seen_spaces;
  for (const Partition& part : partitions) {
    for (TripleScan& hit : scan_partition(perms, wid, part, atlas)) {
      if (!seen_spaces.insert(hit.vspace).second) continue;
      ExtensionResult e;
      e.source = &s;
      e.partition = part;
      e.generators = hit.gens;
      e.extended = build_extension(s, hit.gens, atlas.hamming);
      out.push_back(std::move(e));
    }
  }
  return out;
}

SubgroupChainReport narrow_extension_report(const ExtensionResult& e) {
  SubgroupChainReport r;
  const PropStructure& d = e.extended;
  const PropStructure& c = *e.source;
  std::vector<word_t> did = identity_words(d);
  std::vector<word_t> cid = identity_words(c);
  std::sort(did.begin(), did.end());
  std::sort(cid.begin(), cid.end());
  r.identity_words_extend =
      did.size() == 8 * cid.size() && std::includes(did.begin(), did.end(), cid.begin(), cid.end());
  r.identity_words_abelian = true;
  for (word_t a : did)
    for (word_t b : did)
      if (!std::binary_search(did.begin(), did.end(), static_cast<word_t>(a ^ b))) {
        r.identity_words_abelian = false;
        break;
      }
  // conjugating any identity-permutation element stays identity-permutation
  r.identity_set_normal = true;
  for (const Perm& p : d.distinct_perms())
    for (word_t v : did)
      if (!std::binary_search(did.begin(), did.end(), act(p, v))) {
        r.identity_set_normal = false;
        break;
      }
  // Every left coset x * (C,*) is a translate of C: the translate by the
  // coset's identity-permutation representative. The distinct cosets must
  // be exactly the blocks of the chosen partition.
  r.cosets_are_translates = true;
  std::set<std::vector<word_t>> distinct_cosets;
  for (std::size_t i = 0; i < d.order(); ++i) {
    const word_t x = d.code[i];
    std::vector<word_t> coset;
    coset.reserve(c.order());
    for (word_t y : c.code.words()) coset.push_back(d.star(x, y));
    std::sort(coset.begin(), coset.end());
    word_t rep = 0;
    bool have_rep = false;
    for (word_t u : coset) {
      const Perm* p = d.perm_for(u);
      if (p != nullptr && *p == Perm::identity()) {
        rep = u;
        have_rep = true;
        break;
      }
    }
    if (!have_rep || Code(16, coset) != translate(c.code, rep)) {
      r.cosets_are_translates = false;
      r.diagnostic = "left coset at " + word_to_string(x, 16) + " is not a translate of the subcode";
      break;
    }
    distinct_cosets.insert(std::move(coset));
  }
  if (r.cosets_are_translates) {
    std::set<std::vector<word_t>> blocks{c.code.words()};
    for (word_t t : e.partition.translators) blocks.insert(translate(c.code, t).words());
    if (distinct_cosets != blocks) {
      r.cosets_are_translates = false;
      r.diagnostic = "left cosets differ from the partition blocks";
    }
  }
  if (!r.ok() && r.diagnostic.empty()) r.diagnostic = "identity-permutation subgroup checks failed";
  return r;
}

Z4ExtensionReport z4_extension_report(const CosetAtlas& atlas, const std::vector<Partition>& partitions) {
  Z4ExtensionReport r;
  const PropStructure& sub = nr_structure_z4();
  const PropStructure& sup = h16_structure_z4();
  r.supercode_order_ok = z4_hamming_supercode().elements.size() == 2048 && sup.order() == 2048;
  // subgroup containment
  r.contains_subcode_structure = true;
  for (std::size_t i = 0; i < sub.order(); ++i) {
    const Perm* p = sup.perm_for(sub.code[i]);
    if (p == nullptr || !(*p == sub.perm_of[i])) {
      r.contains_subcode_structure = false;
      break;
    }
  }
  // narrow: same permutation sets
  r.same_perm_set = sub.distinct_perms() == sup.distinct_perms() && sub.distinct_perms().size() == 16;
  // permutation equality happens exactly on equal doubled Z4 preimages
  r.perm_rule_ok = true;
  for (const Z4Code* zc : {&octacode(), &z4_hamming_supercode()}) {
    const PropStructure raw = z4_structure(*zc);
    for (std::size_t i = 0; i < raw.order() && r.perm_rule_ok; ++i)
      for (std::size_t j = 0; j < raw.order(); ++j) {
        const Z4Word zi = gray_inverse(raw.code[i], zc->length);
        const Z4Word zj = gray_inverse(raw.code[j], zc->length);
        const bool same_doubled = z4_add(zi, zi) == z4_add(zj, zj);
        const bool same_perm = raw.perm_of[i] == raw.perm_of[j];
        if (same_doubled != same_perm) {
          r.perm_rule_ok = false;
          break;
        }
      }
  }
  // the analytic extension is found by the search
  r.found_by_search = false;
  const std::vector<Auto> sup_elems = sup.elements();
  for (const ExtensionResult& e : extend_structure(sub, atlas, partitions))
    if (e.extended.elements() == sup_elems) {
      r.found_by_search = true;
      break;
    }
  return r;
}

// ---- classification ----------------------------------------------------------

namespace {

struct RawExtension {
  std::size_t source = 0;
  std::array<word_t, 3> gens{};
};

std::uint64_t extension_invariant(const PropStructure& d) {
  // multiset of (order, centralizer order, word weight, cycle type) plus
  // the identity-word weight distribution; all invariant under
  // conjugation by coordinate permutations.
  GroupFingerprint fp = fingerprint_of_elements(d.elements());
  std::uint64_t h = hash_bytes(fp.data(), fp.size() * sizeof(fp[0]), 0xe7);
  std::vector<int> wid_weights;
  const Perm id = Perm::identity();
  for (std::size_t i = 0; i < d.order(); ++i)
    if (d.perm_of[i] == id) wid_weights.push_back(weight(d.code[i]));
  std::sort(wid_weights.begin(), wid_weights.end());
  h = hash_bytes(wid_weights.data(), wid_weights.size() * sizeof(int), h);
  std::vector<std::uint64_t> elem_parts;
  elem_parts.reserve(d.order());
  for (std::size_t i = 0; i < d.order(); ++i) {
    int wt = weight(d.code[i]);
    std::uint64_t eh = hash_bytes(&wt, sizeof(wt), 0x1234);
    std::uint8_t cyc[16] = {};
    bool seen[16] = {};
    for (int a = 0; a < 16; ++a) {
      if (seen[a]) continue;
      int len = 0, j = a;
      do {
        seen[j] = true;
        j = d.perm_of[i].img[j];
        ++len;
      } while (j != a);
      ++cyc[len - 1];
    }
    eh = hash_bytes(cyc, 16, eh);
    elem_parts.push_back(eh);
  }
  std::sort(elem_parts.begin(), elem_parts.end());
  return hash_bytes(elem_parts.data(), elem_parts.size() * sizeof(std::uint64_t), h);
}

}  // namespace

ExtensionClassification classify_extensions(const std::vector<PropStructure>& sources,
                                            const CosetAtlas& atlas,
                                            const std::vector<Partition>& partitions,
                                            const std::string& cache_dir, int jobs,
                                            const std::function<void(const std::string&)>& progress) {
  namespace fs = std::filesystem;
  const bool cache = !cache_dir.empty();
  if (cache) fs::create_directories(fs::path(cache_dir) / "extensions");
  auto src_path = [&](std::size_t i) {
    return (fs::path(cache_dir) / "extensions" / ("source_" + std::to_string(i) + ".txt")).string();
  };
  auto say = [&](const std::string& m) {
    if (progress) progress(m);
  };

  // Phase 1: narrow extensions per source, cached as generator triples.
  std::vector<std::vector<std::array<word_t, 3>>> per_source(sources.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= sources.size()) return;
      if (cache && fs::exists(src_path(i))) {
        std::ifstream in(src_path(i));
        std::string line;
        std::vector<std::array<word_t, 3>> triples;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          std::istringstream is(line);
          std::array<word_t, 3> t{};
          is >> t[0] >> t[1] >> t[2];
          triples.push_back(t);
        }
        per_source[i] = std::move(triples);
        continue;
      }
      std::vector<std::array<word_t, 3>> triples;
      for (const ExtensionResult& e : extend_structure(sources[i], atlas, partitions))
        triples.push_back(e.generators);
      if (cache) {
        std::ofstream out(src_path(i) + ".tmp");
        for (const auto& t : triples) out << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
        out.close();
        fs::rename(src_path(i) + ".tmp", src_path(i));
      }
      per_source[i] = std::move(triples);
    }
  };
  const int njobs = std::max(1, jobs);
  if (njobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < njobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ExtensionClassification cls;
  std::size_t total_raw = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (per_source[i].empty()) cls.sources_without_extension.push_back(i);
    total_raw += per_source[i].size();
  }
  say("extension search done: " + std::to_string(total_raw) + " raw extensions over " +
      std::to_string(sources.size()) + " sources");

  // Phase 2: conjugacy classes under the symmetries of H16.
  std::vector<Perm> stab, stab_inv;
  stab.reserve(sym_h16().order());
  for (const Auto& a : sym_h16().elements) stab.push_back(a.p);
  stab_inv.reserve(stab.size());
  for (const Perm& p : stab) stab_inv.push_back(inverse(p));

  struct ClassRep {
    RawExtension raw;
    std::vector<Auto> elems;
    std::vector<word_t> id_words;  // sorted identity-permutation words
    GroupFingerprint fp;
  };
  std::vector<ClassRep> reps;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;

  std::vector<std::uint8_t> id_mask(1u << 16, 0);
  std::size_t processed = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (const auto& gens : per_source[i]) {
      PropStructure d = build_extension(sources[i], gens, atlas.hamming);
      const std::uint64_t key = extension_invariant(d);
      std::vector<Auto> delems = d.elements();
      std::vector<Auto> dgens = d.minimal_generators();
      // translations first: their conjugates are the cheapest to test
      std::stable_sort(dgens.begin(), dgens.end(), [](const Auto& a, const Auto& b) {
        return (a.p == Perm::identity()) > (b.p == Perm::identity());
      });
      std::vector<word_t> id_words = identity_words(d);
      std::sort(id_words.begin(), id_words.end());
      // cheap, highly selective probes: identity-permutation words must map
      // into the candidate's identity-permutation words
      std::array<word_t, 3> probes{id_words[1 % id_words.size()], id_words[id_words.size() / 2],
                                   id_words.back()};
      auto& bucket = buckets[key];
      bool dup = false;
      for (std::size_t bi : bucket) {
        const ClassRep& cand = reps[bi];
        // quick invariant guards before the full conjugator scan
        if (cand.id_words.size() != id_words.size()) continue;
        for (word_t w : cand.id_words) id_mask[w] = 1;
        bool found = false;
        for (std::size_t si = 0; si < stab.size() && !found; ++si) {
          const Perm& sigma = stab[si];
          if (!id_mask[act(sigma, probes[0])] || !id_mask[act(sigma, probes[1])] ||
              !id_mask[act(sigma, probes[2])])
            continue;
          bool ok = true;
          for (const Auto& g : dgens) {
            const word_t w = act(sigma, g.x);
            if (g.p == Perm::identity()) {
              if (!id_mask[w]) {
                ok = false;
                break;
              }
              continue;
            }
            const Perm cp = compose(compose(sigma, g.p), stab_inv[si]);
            bool member = false;
            auto it = std::lower_bound(cand.elems.begin(), cand.elems.end(), Auto{w, Perm{}},
                                       [](const Auto& a, const Auto& b) { return a.x < b.x; });
            if (it != cand.elems.end() && it->x == w && it->p == cp) member = true;
            if (!member) {
              ok = false;
              break;
            }
          }
          if (ok) found = true;
        }
        for (word_t w : cand.id_words) id_mask[w] = 0;
        if (found) {
          dup = true;
          break;
        }
      }
      if (!dup) {
        ClassRep rep;
        rep.raw = {i, gens};
        rep.elems = std::move(delems);
        rep.id_words = std::move(id_words);
        rep.fp = fingerprint_of_elements(rep.elems);
        bucket.push_back(reps.size());
        reps.push_back(std::move(rep));
      }
      ++processed;
    }
    if (progress && ((i + 1) % 16 == 0 || i + 1 == sources.size()))
      say("classified sources " + std::to_string(i + 1) + "/" + std::to_string(sources.size()) + ": " +
          std::to_string(reps.size()) + " classes from " + std::to_string(processed) + " raw extensions");
  }

  cls.conjugacy_classes = reps.size();
  std::set<GroupFingerprint> distinct_fp;
  for (const ClassRep& r : reps) distinct_fp.insert(r.fp);
  cls.fingerprint_distinct = distinct_fp.size();
  cls.class_reps.reserve(reps.size());
  for (const ClassRep& r : reps) cls.class_reps.emplace_back(r.raw.source, r.raw.gens);
  return cls;
}

}  // namespace nrprop
