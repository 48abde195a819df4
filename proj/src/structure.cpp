#include "nrprop/structure.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "nrprop/constructions.hpp"

namespace nrprop {

// ---- PropStructure basics --------------------------------------------------

const Perm* PropStructure::perm_for(word_t x) const {
  const auto& w = code.words();
  auto it = std::lower_bound(w.begin(), w.end(), x);
  if (it == w.end() || *it != x) return nullptr;
  return &perm_of[static_cast<std::size_t>(it - w.begin())];
}

word_t PropStructure::star(word_t x, word_t y) const {
  const Perm* p = perm_for(x);
  require(p != nullptr, errc::invalid_argument, "left factor is not a codeword");
  return x ^ act(*p, y);
}

std::vector<Auto> PropStructure::elements() const {
  std::vector<Auto> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::vector<Perm> PropStructure::distinct_perms() const {
  std::vector<Perm> ps = perm_of;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

PropStructure structure_from_elements(const Code& code, const std::vector<Auto>& elements) {
  require(elements.size() == code.size(), errc::invalid_argument,
          "structure needs exactly one element per codeword");
  std::vector<Auto> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  PropStructure s;
  s.code = code;
  s.perm_of.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    require(sorted[i].x == code[i], errc::invalid_argument,
            "element word parts must enumerate the code exactly");
    s.perm_of[i] = sorted[i].p;
  }
  return s;
}

PropStructure translation_structure(const Code& linear_code) {
  require(linear_code.is_linear(), errc::invalid_argument, "translation structure requires a linear code");
  PropStructure s;
  s.code = linear_code;
  s.perm_of.assign(linear_code.size(), Perm::identity());
  return s;
}

// ---- validation ------------------------------------------------------------

ValidationReport validate_structure(const PropStructure& s) {
  ValidationReport rep;
  auto failwith = [&](std::string msg) {
    rep.ok = false;
    rep.diagnostic = std::move(msg);
    return rep;
  };
  if (s.code.size() == 0 || s.perm_of.size() != s.code.size())
    return failwith("structure is empty or misaligned with its code");
  if (!s.code.is_reduced()) return failwith("code is not reduced");
  if (!(s.perm_of[0] == Perm::identity())) return failwith("element at the zero word is not the identity");
  // Every element must map the code onto itself.
  for (std::size_t i = 0; i < s.order(); ++i) {
    Auto a = s.element(i);
    for (word_t w : s.code.words())
      if (!s.code.contains(apply(a, w)))
        return failwith("element at word " + word_to_string(a.x, s.code.length()) + " does not preserve the code");
  }
  // Group closure with matching permutation assignment.
  for (std::size_t i = 0; i < s.order(); ++i) {
    Auto a = s.element(i);
    for (std::size_t j = 0; j < s.order(); ++j) {
      Auto b = s.element(j);
      Auto c = compose(a, b);
      const Perm* p = s.perm_for(c.x);
      if (p == nullptr)
        return failwith("product leaves the code at words " + word_to_string(a.x, s.code.length()) + ", " +
                        word_to_string(b.x, s.code.length()));
      if (!(*p == c.p)) return failwith("product permutation mismatch at word " + word_to_string(c.x, s.code.length()));
    }
  }
  // Closure plus one element per codeword makes the action regular.
  return rep;
}

bool is_normalized(const PropStructure& s) {
  Code ker = kernel_of(s.code);
  return s.distinct_perms().size() * ker.size() == s.code.size();
}

// ---- generators and fingerprints --------------------------------------------

namespace {

struct AutoHash {
  std::size_t operator()(const Auto& a) const {
    return static_cast<std::size_t>(hash_bytes(a.p.img, 16, a.x));
  }
};

std::vector<Auto> close_set(const std::vector<Auto>& gens) {
  std::unordered_set<Auto, AutoHash> seen{Auto::identity()};
  std::vector<Auto> frontier{Auto::identity()};
  while (!frontier.empty()) {
    std::vector<Auto> next;
    for (const Auto& f : frontier)
      for (const Auto& g : gens) {
        Auto h = compose(f, g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<Auto> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Auto> minimal_generators_of(const std::vector<Auto>& sorted_elements) {
  std::vector<Auto> gens;
  std::vector<Auto> have{Auto::identity()};
  for (const Auto& e : sorted_elements) {
    if (std::binary_search(have.begin(), have.end(), e)) continue;
    gens.push_back(e);
    have = close_set(gens);
    if (have.size() == sorted_elements.size()) break;
  }
  return gens;
}

int order_of(const Auto& a) {
  Auto p = a;
  int n = 1;
  while (!(p == Auto::identity())) {
    p = compose(p, a);
    ++n;
    require(n <= 1 << 20, errc::internal, "element order runaway");
  }
  return n;
}

}  // namespace

std::vector<Auto> PropStructure::minimal_generators() const { return minimal_generators_of(elements()); }

GroupFingerprint fingerprint_of_elements(const std::vector<Auto>& elements) {
  std::vector<Auto> elems = elements;
  std::sort(elems.begin(), elems.end());
  std::vector<Auto> gens = minimal_generators_of(elems);
  std::vector<Auto> gen_inv;
  gen_inv.reserve(gens.size());
  for (const Auto& g : gens) gen_inv.push_back(inverse(g));
  auto index_of = [&](const Auto& a) {
    auto it = std::lower_bound(elems.begin(), elems.end(), a);
    require(it != elems.end() && *it == a, errc::internal, "conjugate escaped the group");
    return static_cast<std::size_t>(it - elems.begin());
  };
  // Conjugacy classes by orbit search; centralizer order = |G| / |class|.
  const std::size_t n = elems.size();
  std::vector<bool> seen(n, false);
  GroupFingerprint fp;
  fp.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls{i};
    seen[i] = true;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Auto c = compose(compose(gens[gi], elems[cls[head]]), gen_inv[gi]);
        std::size_t ci = index_of(c);
        if (!seen[ci]) {
          seen[ci] = true;
          cls.push_back(ci);
        }
      }
    const int ord = order_of(elems[i]);
    const int centralizer = static_cast<int>(n / cls.size());
    for (std::size_t k = 0; k < cls.size(); ++k) fp.emplace_back(ord, centralizer);
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

GroupFingerprint fingerprint(const PropStructure& s) { return fingerprint_of_elements(s.elements()); }

std::string fingerprint_to_string(const GroupFingerprint& fp) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fp.size();) {
    std::size_t j = i;
    while (j < fp.size() && fp[j] == fp[i]) ++j;
    if (i) os << ' ';
    os << fp[i].first << ':' << fp[i].second << 'x' << (j - i);
    i = j;
  }
  return os.str();
}

// ---- abstract isomorphism ---------------------------------------------------

namespace {

struct GroupTable {
  std::vector<Auto> elems;                 // sorted
  std::vector<std::uint16_t> mul;          // n * n products, row-major
  std::vector<int> order;                  // element orders
  std::vector<int> centralizer;            // centralizer orders
  std::size_t n = 0;

  std::size_t index_of(const Auto& a) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), a);
    require(it != elems.end() && *it == a, errc::internal, "product escaped the group");
    return static_cast<std::size_t>(it - elems.begin());
  }

  std::uint16_t at(std::size_t i, std::size_t j) const { return mul[i * n + j]; }
};

GroupTable build_table(const std::vector<Auto>& elements) {
  GroupTable t;
  t.elems = elements;
  std::sort(t.elems.begin(), t.elems.end());
  t.n = t.elems.size();
  t.mul.resize(t.n * t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      t.mul[i * t.n + j] = static_cast<std::uint16_t>(t.index_of(compose(t.elems[i], t.elems[j])));
  t.order.resize(t.n);
  t.centralizer.assign(t.n, 0);
  const std::size_t id = t.index_of(Auto::identity());
  for (std::size_t i = 0; i < t.n; ++i) {
    std::size_t p = i;
    int o = 1;
    while (p != id) {
      p = t.at(p, i);
      ++o;
    }
    t.order[i] = o;
    for (std::size_t j = 0; j < t.n; ++j)
      if (t.at(i, j) == t.at(j, i)) ++t.centralizer[i];
  }
  return t;
}

struct IsoSearch {
  const GroupTable& s;
  const GroupTable& t;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> s_gens;              // generator indices in s
  std::vector<std::vector<std::size_t>> s_chain;  // elements of <g_1..g_i>, in discovery order

  // Builds the subgroup generated by the images and the determined partial
  // map; returns false on any conflict.
  bool try_images(const std::vector<std::size_t>& images, std::vector<std::uint16_t>& map_out,
                  std::vector<std::size_t>& t_sub_out) {
    std::vector<std::uint16_t> map(s.n, static_cast<std::uint16_t>(0xFFFF));
    std::vector<bool> used(t.n, false);
    const std::size_t s_id = s.index_of(Auto::identity());
    const std::size_t t_id = t.index_of(Auto::identity());
    map[s_id] = static_cast<std::uint16_t>(t_id);
    used[t_id] = true;
    std::vector<std::size_t> sub{s_id};
    std::vector<std::size_t> t_sub{t_id};
    for (std::size_t head = 0; head < sub.size(); ++head) {
      for (std::size_t gi = 0; gi < images.size(); ++gi) {
        if (++nodes > budget) return false;
        std::size_t a = s.at(sub[head], s_gens[gi]);
        std::size_t fa = t.at(map[sub[head]], images[gi]);
        if (map[a] == 0xFFFF) {
          if (used[fa]) return false;
          if (s.order[a] != t.order[fa] || s.centralizer[a] != t.centralizer[fa]) return false;
          map[a] = static_cast<std::uint16_t>(fa);
          used[fa] = true;
          sub.push_back(a);
          t_sub.push_back(fa);
        } else if (map[a] != fa) {
          return false;
        }
      }
    }
    map_out = std::move(map);
    t_sub_out = std::move(t_sub);
    return true;
  }

  bool full_check(const std::vector<std::uint16_t>& map) {
    for (std::size_t i = 0; i < s.n; ++i)
      for (std::size_t j = 0; j < s.n; ++j)
        if (map[s.at(i, j)] != t.at(map[i], map[j])) return false;
    return true;
  }

  IsoResult run() {
    std::vector<std::size_t> images;
    return extend(images);
  }

  IsoResult extend(std::vector<std::size_t>& images) {
    if (nodes > budget) return IsoResult::unknown;
    if (images.size() == s_gens.size()) {
      std::vector<std::uint16_t> map;
      std::vector<std::size_t> t_sub;
      if (!try_images(images, map, t_sub)) return IsoResult::not_isomorphic;
      if (t_sub.size() != s.n) return IsoResult::not_isomorphic;
      return full_check(map) ? IsoResult::isomorphic : IsoResult::not_isomorphic;
    }
    const std::size_t gi = images.size();
    const std::size_t g = s_gens[gi];
    bool undecided = false;
    for (std::size_t cand = 0; cand < t.n; ++cand) {
      if (t.order[cand] != s.order[g] || t.centralizer[cand] != s.centralizer[g]) continue;
      images.push_back(cand);
      std::vector<std::uint16_t> map;
      std::vector<std::size_t> t_sub;
      bool consistent = try_images(images, map, t_sub);
      if (nodes > budget) {
        images.pop_back();
        return IsoResult::unknown;
      }
      if (consistent && t_sub.size() == s_chain[gi].size()) {
        IsoResult r = extend(images);
        if (r == IsoResult::isomorphic) {
          images.pop_back();
          return r;
        }
        if (r == IsoResult::unknown) undecided = true;
      }
      images.pop_back();
    }
    return undecided ? IsoResult::unknown : IsoResult::not_isomorphic;
  }
};

}  // namespace

IsoResult groups_isomorphic(const PropStructure& s, const PropStructure& t, std::uint64_t node_budget) {
  if (s.order() != t.order()) return IsoResult::not_isomorphic;
  if (fingerprint(s) != fingerprint(t)) return IsoResult::not_isomorphic;
  GroupTable ts = build_table(s.elements());
  GroupTable tt = build_table(t.elements());
  IsoSearch search{ts, tt, node_budget, 0, {}, {}};
  std::vector<Auto> gens = minimal_generators_of(ts.elems);
  std::vector<Auto> partial;
  for (const Auto& g : gens) {
    search.s_gens.push_back(ts.index_of(g));
    partial.push_back(g);
    std::vector<Auto> sub = close_set(partial);
    std::vector<std::size_t> idx;
    idx.reserve(sub.size());
    for (const Auto& e : sub) idx.push_back(ts.index_of(e));
    search.s_chain.push_back(std::move(idx));
  }
  return search.run();
}

// ---- conjugacy -------------------------------------------------------------

namespace {

// Reusable word -> slot map with O(1) reset.
struct WordSlots {
  std::vector<std::uint32_t> stamp;
  std::vector<std::uint16_t> slot;
  std::uint32_t epoch = 0;

  WordSlots() : stamp(1u << 16, 0), slot(1u << 16, 0) {}

  void reset() { ++epoch; }
  void put(word_t w, std::uint16_t v) {
    stamp[w] = epoch;
    slot[w] = v;
  }
  bool has(word_t w) const { return stamp[w] == epoch; }
  std::uint16_t get(word_t w) const { return slot[w]; }
};

thread_local WordSlots tls_slots_a;
thread_local WordSlots tls_slots_b;

bool conjugates_into(const std::vector<Auto>& gens, const Perm& sigma, const Perm& sigma_inv,
                     const WordSlots& target_words, const std::vector<Auto>& target) {
  for (const Auto& g : gens) {
    const word_t w = act(sigma, g.x);
    if (!target_words.has(w)) return false;
    const Perm p = compose(compose(sigma, g.p), sigma_inv);
    if (!(target[target_words.get(w)].p == p)) return false;
  }
  return true;
}

}  // namespace

bool conjugate_in(const std::vector<Auto>& s, const std::vector<Auto>& t,
                  const std::vector<Perm>& stab_perms) {
  if (s.size() != t.size()) return false;
  std::vector<Auto> ss = s, tt = t;
  std::sort(ss.begin(), ss.end());
  std::sort(tt.begin(), tt.end());
  if (ss == tt) return true;
  std::vector<Auto> gens = minimal_generators_of(ss);
  WordSlots& slots = tls_slots_a;
  slots.reset();
  for (std::size_t i = 0; i < tt.size(); ++i) slots.put(tt[i].x, static_cast<std::uint16_t>(i));
  for (const Perm& sigma : stab_perms) {
    const Perm sigma_inv = inverse(sigma);
    if (conjugates_into(gens, sigma, sigma_inv, slots, tt)) return true;
  }
  return false;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<PropStructure>& structures,
                                                        const PermGroupSet& stab) {
  std::vector<Perm> perms;
  perms.reserve(stab.order());
  for (const Auto& a : stab.elements) {
    require(a.x == 0, errc::invalid_argument, "conjugacy stabilizer must consist of pure permutations");
    perms.push_back(a.p);
  }
  // Bucket by fingerprint first; only equal fingerprints can be conjugate.
  std::map<GroupFingerprint, std::vector<std::size_t>> buckets;
  std::vector<GroupFingerprint> fps(structures.size());
  for (std::size_t i = 0; i < structures.size(); ++i) {
    fps[i] = fingerprint(structures[i]);
    buckets[fps[i]].push_back(i);
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(structures.size(), false);
  for (std::size_t i = 0; i < structures.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls{i};
    assigned[i] = true;
    const std::vector<Auto> ei = structures[i].elements();
    for (std::size_t j : buckets[fps[i]]) {
      if (assigned[j]) continue;
      if (conjugate_in(ei, structures[j].elements(), perms)) {
        cls.push_back(j);
        assigned[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---- regular-subgroup enumeration -------------------------------------------

namespace {

struct LevelGroup {
  std::vector<Auto> elems;  // sorted, first element is the identity

  bool operator<(const LevelGroup& o) const { return elems < o.elems; }
  bool operator==(const LevelGroup& o) const { return elems == o.elems; }
};

std::uint64_t perm_cycle_type_hash(const Perm& p) {
  std::uint8_t cyc[17] = {};
  bool seen[16] = {};
  for (int i = 0; i < 16; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = true;
      j = p.img[j];
      ++len;
    } while (j != i);
    ++cyc[len];
  }
  return hash_bytes(cyc, 17, 0x51ab);
}

// Conjugation-invariant signature of a subgroup under coordinate
// permutations stabilizing the code: multiset over the elements of
// (order, centralizer order, word weight, permutation cycle type), plus
// the count of distinct permutation parts.
std::uint64_t invariant_key(const std::vector<Auto>& elems, const std::vector<Auto>& gens) {
  const std::size_t n = elems.size();
  std::vector<Auto> gen_inv;
  gen_inv.reserve(gens.size());
  for (const Auto& g : gens) gen_inv.push_back(inverse(g));
  auto index_of = [&](const Auto& a) {
    auto it = std::lower_bound(elems.begin(), elems.end(), a);
    require(it != elems.end() && *it == a, errc::internal, "conjugate escaped the group");
    return static_cast<std::size_t>(it - elems.begin());
  };
  std::vector<int> centralizer(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls{i};
    seen[i] = true;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Auto c = compose(compose(gens[gi], elems[cls[head]]), gen_inv[gi]);
        std::size_t ci = index_of(c);
        if (!seen[ci]) {
          seen[ci] = true;
          cls.push_back(ci);
        }
      }
    for (std::size_t ci : cls) centralizer[ci] = static_cast<int>(n / cls.size());
  }
  std::vector<std::uint64_t> parts;
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Auto& a = elems[i];
    std::uint64_t h = perm_cycle_type_hash(a.p);
    int vals[3] = {order_of(a), centralizer[i], weight(a.x)};
    h = hash_bytes(vals, sizeof(vals), h);
    parts.push_back(h);
  }
  std::sort(parts.begin(), parts.end());
  std::vector<Perm> ps;
  ps.reserve(n);
  for (const Auto& a : elems) ps.push_back(a.p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return hash_bytes(parts.data(), parts.size() * sizeof(std::uint64_t), ps.size());
}

struct Engine {
  const Code& nr;
  std::vector<word_t> nwords;
  WordSlots nr_index;                 // word -> index in nwords (persistent)
  std::vector<Perm> base_perm;        // per codeword, from the Z4 structure
  std::vector<Perm> stab;             // Sym(N)
  std::vector<Perm> stab_inv;

  explicit Engine(const Code& code, const PermGroupSet& ambient_stab) : nr(code) {
    nwords = nr.words();
    nr_index.reset();
    for (std::size_t i = 0; i < nwords.size(); ++i)
      nr_index.put(nwords[i], static_cast<std::uint16_t>(i));
    const PropStructure& z4 = nr_structure_z4();
    require(z4.code == nr, errc::invalid_argument,
            "enumeration is specialized to the canonical Nordstrom-Robinson code");
    base_perm = z4.perm_of;
    stab.reserve(ambient_stab.order());
    for (const Auto& a : ambient_stab.elements) {
      require(a.x == 0, errc::invalid_argument, "ambient stabilizer must consist of pure permutations");
      stab.push_back(a.p);
    }
    require(stab.size() == 40320, errc::invalid_argument,
            "ambient stabilizer must be the full symmetry group of the code");
    stab_inv.reserve(stab.size());
    for (const Perm& p : stab) stab_inv.push_back(inverse(p));
  }

  // All extensions <S, a> of index 2, semiregular on the code, one per new
  // subgroup (each found exactly once via one word per S-orbit).
  std::vector<LevelGroup> extend_group(const LevelGroup& S) const {
    const std::size_t q = S.elems.size();
    WordSlots& sidx = tls_slots_b;
    sidx.reset();
    for (std::size_t i = 0; i < q; ++i) sidx.put(S.elems[i].x, static_cast<std::uint16_t>(i));
    std::vector<Auto> gens = minimal_generators_of(S.elems);

    // Orbit representatives: smallest unvisited codeword starts its orbit.
    std::vector<std::uint8_t> visited(nwords.size(), 0);
    for (const Auto& s : S.elems) {
      word_t w0 = apply(s, 0);
      visited[nr_index.get(w0)] = 1;  // orbit of zero = word parts of S
    }
    std::vector<LevelGroup> found;
    for (std::size_t wi = 0; wi < nwords.size(); ++wi) {
      if (visited[wi]) continue;
      const word_t x = nwords[wi];
      for (const Auto& s : S.elems) visited[nr_index.get(apply(s, x))] = 1;

      const Perm& p0 = base_perm[wi];
      for (std::size_t si = 0; si < stab.size(); ++si) {
        const Perm p = compose(p0, stab[si]);
        // square in S
        const word_t w2 = x ^ act(p, x);
        if (!sidx.has(w2)) continue;
        if (!(compose(p, p) == S.elems[sidx.get(w2)].p)) continue;
        const Auto a{x, p};
        const Auto ai = inverse(a);
        // a normalizes S
        bool norm = true;
        for (const Auto& g : gens) {
          Auto c = compose(compose(a, g), ai);
          if (!sidx.has(c.x) || !(S.elems[sidx.get(c.x)].p == c.p)) {
            norm = false;
            break;
          }
        }
        if (!norm) continue;
        // all elements of the new coset fixed-point-free on the code
        bool fpf = true;
        for (const Auto& s : S.elems) {
          const Auto e = compose(a, s);
          for (word_t v : nwords)
            if ((e.x ^ act(e.p, v)) == v) {
              fpf = false;
              break;
            }
          if (!fpf) break;
        }
        if (!fpf) continue;
        LevelGroup g2;
        g2.elems.reserve(2 * q);
        g2.elems = S.elems;
        for (const Auto& s : S.elems) g2.elems.push_back(compose(a, s));
        std::sort(g2.elems.begin(), g2.elems.end());
        found.push_back(std::move(g2));
      }
    }
    return found;
  }

  // Sym(N)-conjugacy test between groups of equal order.
  bool conjugate_groups(const std::vector<Auto>& gens_s, word_t probe1, word_t probe2,
                        const WordSlots& tidx, const std::vector<Auto>& t) const {
    for (std::size_t si = 0; si < stab.size(); ++si) {
      const Perm& sigma = stab[si];
      if (!tidx.has(act(sigma, probe1))) continue;
      if (!tidx.has(act(sigma, probe2))) continue;
      if (conjugates_into(gens_s, sigma, stab_inv[si], tidx, t)) return true;
    }
    return false;
  }
};

std::string format_group_line(const LevelGroup& g) {
  static const char* hex = "0123456789abcdef";
  std::string line;
  line.reserve(g.elems.size() * 22);
  for (std::size_t i = 0; i < g.elems.size(); ++i) {
    if (i) line.push_back(' ');
    const Auto& a = g.elems[i];
    for (int k = 12; k >= 0; k -= 4) line.push_back(hex[(a.x >> k) & 15u]);
    line.push_back(':');
    for (int k = 0; k < 16; ++k) line.push_back(hex[a.p.img[k]]);
  }
  return line;
}

LevelGroup parse_group_line(const std::string& line) {
  LevelGroup g;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    require(tok.size() == 21 && tok[4] == ':', errc::io_failure, "malformed checkpoint token");
    Auto a{};
    a.x = static_cast<word_t>(std::stoul(tok.substr(0, 4), nullptr, 16));
    for (int k = 0; k < 16; ++k) {
      char c = tok[static_cast<std::size_t>(5 + k)];
      int v = (c >= 'a') ? (c - 'a' + 10) : (c - '0');
      require(v >= 0 && v < 16, errc::io_failure, "malformed checkpoint permutation");
      a.p.img[k] = static_cast<std::uint8_t>(v);
    }
    g.elems.push_back(a);
  }
  std::sort(g.elems.begin(), g.elems.end());
  return g;
}

}  // namespace

EnumerationResult enumerate_structures(const Code& c, const PermGroupSet& ambient_stab,
                                       const EnumerationOptions& opts) {
  require(c == nordstrom_robinson(), errc::invalid_argument,
          "enumeration is specialized to the canonical Nordstrom-Robinson code");
  Engine eng(c, ambient_stab);
  auto progress = [&](const std::string& msg) {
    if (opts.progress) opts.progress(msg);
  };

  namespace fs = std::filesystem;
  const bool cache = !opts.cache_dir.empty();
  if (cache) fs::create_directories(fs::path(opts.cache_dir) / "levels");
  auto level_path = [&](int k) {
    return (fs::path(opts.cache_dir) / "levels" / ("level_" + std::to_string(k) + ".txt")).string();
  };

  std::vector<LevelGroup> reps;
  reps.push_back(LevelGroup{{Auto::identity()}});
  EnumerationResult result;
  result.classes_per_level.push_back(1);

  for (int level = 1; level <= 8; ++level) {
    std::vector<LevelGroup> accepted;
    bool loaded = false;
    if (cache && fs::exists(level_path(level))) {
      std::ifstream in(level_path(level));
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        LevelGroup g = parse_group_line(line);
        require(g.elems.size() == (std::size_t{1} << level), errc::io_failure,
                "checkpoint group has wrong order");
        accepted.push_back(std::move(g));
      }
      loaded = true;
      progress("level " + std::to_string(level) + ": " + std::to_string(accepted.size()) +
               " classes (from checkpoint)");
    }
    if (!loaded) {
      // Extend representatives in fixed-size blocks: generation may run on
      // several threads, deduplication walks the block in index order, so
      // the outcome never depends on scheduling.
      std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
      const int jobs = std::max(1, opts.jobs);
      const std::size_t block = static_cast<std::size_t>(jobs) * 16;
      for (std::size_t lo = 0; lo < reps.size(); lo += block) {
        const std::size_t hi = std::min(reps.size(), lo + block);
        std::vector<std::vector<LevelGroup>> raw(hi - lo);
        if (jobs == 1 || hi - lo < 2) {
          for (std::size_t i = lo; i < hi; ++i) raw[i - lo] = eng.extend_group(reps[i]);
        } else {
          std::vector<std::thread> pool;
          std::atomic<std::size_t> cursor{lo};
          for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
              for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= hi) return;
                raw[i - lo] = eng.extend_group(reps[i]);
              }
            });
          for (auto& th : pool) th.join();
        }
        for (auto& from_rep : raw) {
          for (LevelGroup& g : from_rep) {
            std::vector<Auto> gens = minimal_generators_of(g.elems);
            const std::uint64_t key = invariant_key(g.elems, gens);
            auto& bucket = buckets[key];
            bool dup = false;
            const word_t probe1 = g.elems.size() > 1 ? g.elems[1].x : 0;
            const word_t probe2 = g.elems.back().x;
            for (std::size_t bi : bucket) {
              WordSlots& tidx = tls_slots_a;
              tidx.reset();
              for (std::size_t e = 0; e < accepted[bi].elems.size(); ++e)
                tidx.put(accepted[bi].elems[e].x, static_cast<std::uint16_t>(e));
              if (eng.conjugate_groups(gens, probe1, probe2, tidx, accepted[bi].elems)) {
                dup = true;
                break;
              }
            }
            if (!dup) {
              bucket.push_back(accepted.size());
              accepted.push_back(std::move(g));
            }
          }
        }
        if (opts.progress && (hi % 256 == 0 || hi == reps.size()))
          progress("level " + std::to_string(level) + ": extended " + std::to_string(hi) + "/" +
                   std::to_string(reps.size()) + " reps, " + std::to_string(accepted.size()) + " classes so far");
      }
      if (cache) {
        std::ofstream out(level_path(level) + ".tmp");
        out << "# order " << (1 << level) << " classes " << accepted.size() << "\n";
        for (const LevelGroup& g : accepted) out << format_group_line(g) << "\n";
        out.close();
        fs::rename(level_path(level) + ".tmp", level_path(level));
      }
      progress("level " + std::to_string(level) + ": " + std::to_string(accepted.size()) + " classes");
    }
    result.classes_per_level.push_back(accepted.size());
    reps = std::move(accepted);
  }

  result.representatives.reserve(reps.size());
  for (const LevelGroup& g : reps)
    result.representatives.push_back(structure_from_elements(c, g.elems));
  return result;
}

}  // namespace nrprop
