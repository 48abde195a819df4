#include "nrprop/partition.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>

#include "nrprop/constructions.hpp"

namespace nrprop {

namespace {

std::vector<std::uint8_t> all_triples() {
  std::vector<std::uint8_t> t;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) t.push_back(static_cast<std::uint8_t>((1 << a) | (1 << b) | (1 << c)));
  return t;
}

void search_planes(const std::vector<std::uint8_t>& triples, std::size_t next, unsigned pairs_covered,
                   std::array<std::uint8_t, 7>& chosen, int depth, std::vector<FanoPlane>& out) {
  if (depth == 7) {
    FanoPlane p;
    p.lines = chosen;
    std::sort(p.lines.begin(), p.lines.end());
    out.push_back(p);
    return;
  }
  for (std::size_t i = next; i < triples.size(); ++i) {
    const std::uint8_t line = triples[i];
    // pair mask: bit index for the pair {a,b} is 7*a+b (a < b)
    unsigned pm = 0;
    bool clash = false;
    for (int a = 0; a < 7 && !clash; ++a)
      for (int b = a + 1; b < 7; ++b)
        if ((line >> a & 1) && (line >> b & 1)) {
          unsigned bit = 1u << (7 * a + b - ((a + 2) * (a + 1)) / 2);
          if (pairs_covered & bit) {
            clash = true;
            break;
          }
          pm |= bit;
        }
    if (clash) continue;
    chosen[static_cast<std::size_t>(depth)] = line;
    search_planes(triples, i + 1, pairs_covered | pm, chosen, depth + 1, out);
  }
}

}  // namespace

std::vector<FanoPlane> all_fano_planes() {
  static const std::vector<FanoPlane> planes = [] {
    std::vector<FanoPlane> out;
    std::array<std::uint8_t, 7> chosen{};
    search_planes(all_triples(), 0, 0, chosen, 0, out);
    require(out.size() == 30, errc::verification_failed, "there must be exactly 30 Fano planes on 7 points");
    std::sort(out.begin(), out.end());
    return out;
  }();
  return planes;
}

FanoPlane relabel_plane(const FanoPlane& p, const std::array<int, 7>& point_images) {
  FanoPlane q{};
  for (std::size_t i = 0; i < 7; ++i) {
    std::uint8_t line = 0;
    for (int b = 0; b < 7; ++b)
      if (p.lines[i] >> b & 1) line |= static_cast<std::uint8_t>(1 << point_images[static_cast<std::size_t>(b)]);
    q.lines[i] = line;
  }
  std::sort(q.lines.begin(), q.lines.end());
  return q;
}

std::array<std::vector<std::size_t>, 2> a7_orbits(const std::vector<FanoPlane>& planes) {
  require(planes.size() == 30, errc::invalid_argument, "a7_orbits expects the full plane list");
  std::map<FanoPlane, std::size_t> index;
  for (std::size_t i = 0; i < planes.size(); ++i) index[planes[i]] = i;
  // all even permutations of 7 points
  std::array<int, 7> perm{0, 1, 2, 3, 4, 5, 6};
  std::vector<std::array<int, 7>> even;
  do {
    int inv = 0;
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inv;
    if (inv % 2 == 0) even.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  require(even.size() == 2520, errc::internal, "A7 must have 2520 elements");

  std::vector<int> orbit_of(30, -1);
  int orbit_count = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<std::size_t> frontier{i};
    orbit_of[i] = orbit_count;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t j : frontier)
        for (const auto& g : even) {
          auto it = index.find(relabel_plane(planes[j], g));
          require(it != index.end(), errc::internal, "relabeled plane missing from the plane list");
          if (orbit_of[it->second] < 0) {
            orbit_of[it->second] = orbit_count;
            next.push_back(it->second);
          }
        }
      frontier = std::move(next);
    }
    ++orbit_count;
  }
  require(orbit_count == 2, errc::verification_failed, "even relabelings must split the planes into 2 orbits");
  std::array<std::vector<std::size_t>, 2> orbits;
  for (std::size_t i = 0; i < 30; ++i) orbits[static_cast<std::size_t>(orbit_of[i])].push_back(i);
  require(orbits[0].size() == 15 && orbits[1].size() == 15, errc::verification_failed,
          "both plane orbits must have 15 members");
  return orbits;
}

int CosetAtlas::coset_index(word_t w) const {
  require(w < coset_of_word.size() && coset_of_word[w] != 0xFF, errc::invalid_argument,
          "word lies outside the Hamming code");
  return coset_of_word[w];
}

CosetAtlas coset_atlas(const Code& n) {
  CosetAtlas atlas;
  atlas.base = coset_decomposition(n);
  require(atlas.base.reps.size() == 7, errc::invalid_argument,
          "coset atlas expects a code with 7 nontrivial kernel cosets");
  SpanInfo span = span_of(n);
  require(span.dimension == 11, errc::invalid_argument, "span of the base code must have dimension 11");
  atlas.hamming = span.code;
  atlas.coset_of_word.assign(1u << 16, 0xFF);
  const auto& ker = atlas.base.kernel.words();
  std::size_t covered = 0;
  for (unsigned mask = 0; mask < 128; ++mask) {
    if (std::popcount(mask) > 3) continue;
    word_t xr = 0;
    for (int i = 0; i < 7; ++i)
      if (mask >> i & 1) xr ^= atlas.base.reps[static_cast<std::size_t>(i)];
    word_t min_rep = ~word_t{0};
    for (word_t k : ker) min_rep = std::min(min_rep, xr ^ k);
    const std::uint8_t idx = static_cast<std::uint8_t>(atlas.subset_of_coset.size());
    atlas.subset_of_coset.push_back(static_cast<std::uint8_t>(mask));
    atlas.rep_of_coset.push_back(min_rep);
    for (word_t k : ker) {
      word_t w = xr ^ k;
      require(atlas.hamming.contains(w), errc::verification_failed, "kernel coset leaves the Hamming code");
      require(atlas.coset_of_word[w] == 0xFF, errc::verification_failed, "kernel cosets must be pairwise disjoint");
      atlas.coset_of_word[w] = idx;
      ++covered;
    }
  }
  require(atlas.subset_of_coset.size() == 64, errc::internal, "subset count must be 64");
  require(covered == atlas.hamming.size(), errc::verification_failed,
          "the 64 kernel cosets must cover the Hamming code exactly");
  return atlas;
}

bool translates_disjoint(word_t a, word_t b, const CosetAtlas& atlas) {
  return atlas.subset_size(a ^ b) == 3;
}

std::vector<Partition> partitions_containing(const Code& n, const CosetAtlas& atlas) {
  const std::vector<FanoPlane>& planes = all_fano_planes();
  std::vector<Partition> out;
  out.reserve(planes.size());
  std::bitset<65536> base_mask;
  for (word_t w : n.words()) base_mask.set(w);
  for (const FanoPlane& plane : planes) {
    Partition part;
    part.base = n;
    part.plane = plane;
    for (std::size_t i = 0; i < 7; ++i) {
      word_t t = 0;
      for (int b = 0; b < 7; ++b)
        if (plane.lines[i] >> b & 1) t ^= atlas.base.reps[static_cast<std::size_t>(b)];
      // canonical translator: minimal word of its kernel coset
      word_t min_t = ~word_t{0};
      for (word_t k : atlas.base.kernel.words()) min_t = std::min(min_t, t ^ k);
      part.translators[i] = min_t;
    }
    std::sort(part.translators.begin(), part.translators.end());
    // verify: 8 pairwise-disjoint blocks covering H16
    std::bitset<65536> cover = base_mask;
    std::size_t total = n.size();
    for (word_t t : part.translators) {
      for (word_t w : n.words()) {
        require(!cover.test(w ^ t), errc::verification_failed, "partition blocks overlap");
        cover.set(w ^ t);
        ++total;
      }
    }
    require(total == atlas.hamming.size(), errc::verification_failed, "partition blocks must cover H16");
    for (word_t w : atlas.hamming.words())
      require(cover.test(w), errc::verification_failed, "partition misses a Hamming codeword");
    out.push_back(std::move(part));
  }
  require(out.size() == 30, errc::verification_failed, "there must be one partition per Fano plane");
  return out;
}

std::vector<std::array<word_t, 7>> partitions_by_exhaustion(const Code& n, const CosetAtlas& atlas) {
  // Candidate blocks: translates by the 35 triple-subset cosets (any block
  // of a partition containing n must be one, by the disjointness
  // criterion, which is itself checked exhaustively elsewhere).
  std::vector<word_t> cands;
  for (std::size_t ci = 0; ci < 64; ++ci)
    if (std::popcount(static_cast<unsigned>(atlas.subset_of_coset[ci])) == 3)
      cands.push_back(atlas.rep_of_coset[ci]);
  require(cands.size() == 35, errc::internal, "expected 35 triple cosets");
  std::sort(cands.begin(), cands.end());
  // pairwise compatibility by actual set disjointness
  std::vector<std::bitset<65536>> masks(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (word_t w : n.words()) masks[i].set(w ^ cands[i]);
  std::bitset<65536> base_mask;
  for (word_t w : n.words()) base_mask.set(w);
  std::vector<std::vector<bool>> compat(cands.size(), std::vector<bool>(cands.size(), false));
  for (std::size_t i = 0; i < cands.size(); ++i) {
    require((masks[i] & base_mask).none(), errc::verification_failed, "candidate block intersects the base code");
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if ((masks[i] & masks[j]).none()) compat[i][j] = compat[j][i] = true;
  }
  std::vector<std::array<word_t, 7>> found;
  std::array<std::size_t, 7> pick{};
  auto dfs = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == 7) {
      std::array<word_t, 7> t{};
      for (int i = 0; i < 7; ++i) t[static_cast<std::size_t>(i)] = cands[pick[static_cast<std::size_t>(i)]];
      found.push_back(t);
      return;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
      bool ok = true;
      for (int d = 0; d < depth; ++d)
        if (!compat[pick[static_cast<std::size_t>(d)]][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick[static_cast<std::size_t>(depth)] = i;
      self(self, i + 1, depth + 1);
    }
  };
  dfs(dfs, 0, 0);
  return found;
}

namespace {

std::size_t plane_orbit_id(const FanoPlane& plane) {
  static const std::vector<FanoPlane>& planes = all_fano_planes();
  static const std::array<std::vector<std::size_t>, 2> orbits = a7_orbits(planes);
  auto it = std::lower_bound(planes.begin(), planes.end(), plane);
  require(it != planes.end() && *it == plane, errc::invalid_argument, "unknown Fano plane");
  const std::size_t idx = static_cast<std::size_t>(it - planes.begin());
  return std::binary_search(orbits[0].begin(), orbits[0].end(), idx) ? 0 : 1;
}

}  // namespace

bool partitions_isomorphic(const Partition& p, const Partition& q) {
  if (p.base == q.base) return plane_orbit_id(p.plane) == plane_orbit_id(q.plane);
  // Direct scan: block-of-word table for q, then look for a symmetry of
  // H16 mapping every p-block onto a distinct q-block.
  std::vector<std::uint8_t> qblock(1u << 16, 0xFF);
  for (word_t w : q.base.words()) qblock[w] = 0;
  for (std::size_t b = 0; b < 7; ++b)
    for (word_t w : q.base.words()) qblock[w ^ q.translators[b]] = static_cast<std::uint8_t>(b + 1);
  std::vector<const Code*> pblocks;
  std::vector<Code> translated;
  translated.reserve(7);
  for (word_t t : p.translators) translated.push_back(translate(p.base, t));
  for (const Auto& a : sym_h16().elements) {
    bool used[8] = {};
    bool ok = true;
    auto check_block = [&](const Code& blk) {
      const std::uint8_t id = qblock[act(a.p, blk[0])];
      if (id == 0xFF || used[id]) return false;
      for (word_t w : blk.words())
        if (qblock[act(a.p, w)] != id) return false;
      used[id] = true;
      return true;
    };
    if (!check_block(p.base)) continue;
    for (const Code& blk : translated)
      if (!check_block(blk)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<Code> reduced_nr_codes_in_h16(const Code& n, const CosetAtlas& atlas) {
  std::vector<Code> out;
  out.push_back(n);
  for (word_t a : atlas.base.reps) out.push_back(translate(n, a));
  std::sort(out.begin(), out.end(), [](const Code& x, const Code& y) { return x.words() < y.words(); });
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    require(!(out[i] == out[i + 1]), errc::verification_failed, "translated codes must be distinct");
  for (const Code& c : out) {
    require(c.is_reduced(), errc::verification_failed, "translated code must contain zero");
    require(c.size() == 256 && min_distance(c) == 6, errc::verification_failed,
            "translated code must have parameters (16, 256, 6)");
  }
  // Cross-check: the orbit of n under sym_h16 is exactly this set.
  std::vector<std::vector<word_t>> orbit;
  for (const Auto& a : sym_h16().elements) {
    std::vector<word_t> img;
    img.reserve(n.size());
    for (word_t w : n.words()) img.push_back(act(a.p, w));
    std::sort(img.begin(), img.end());
    if (!std::binary_search(orbit.begin(), orbit.end(), img)) {
      orbit.insert(std::lower_bound(orbit.begin(), orbit.end(), img), std::move(img));
    }
  }
  require(orbit.size() == out.size(), errc::verification_failed,
          "symmetry orbit count must match the translate count");
  for (std::size_t i = 0; i < out.size(); ++i)
    require(std::binary_search(orbit.begin(), orbit.end(), out[i].words()), errc::verification_failed,
            "symmetry orbit must consist of the kernel-coset translates");
  return out;
}

}  // namespace nrprop
