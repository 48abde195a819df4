#include "nrprop/groups.hpp"

#include <algorithm>
#include <bitset>
#include <unordered_set>

#include "nrprop/constructions.hpp"

namespace nrprop {

bool PermGroupSet::contains(const Auto& a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

bool PermGroupSet::all_pure_perms() const {
  for (const Auto& a : elements)
    if (a.x != 0) return false;
  return true;
}

PermGroupSet make_group_set(int degree, std::vector<Auto> elements, bool closed) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroupSet g;
  g.degree = degree;
  g.closed = closed;
  g.elements = std::move(elements);
  return g;
}

namespace {

// Multiply a 4x4 F2 matrix (4 column nibbles) by the vector v.
inline unsigned mat_apply(const std::array<unsigned, 4>& cols, unsigned v) {
  unsigned r = 0;
  for (int k = 0; k < 4; ++k)
    if ((v >> k) & 1u) r ^= cols[static_cast<std::size_t>(k)];
  return r;
}

Perm affine_perm(const std::array<unsigned, 4>& cols, unsigned b) {
  Perm p;
  for (unsigned i = 0; i < 16; ++i) p.img[i] = static_cast<std::uint8_t>(mat_apply(cols, i) ^ b);
  return p;
}

template <typename F>
void enumerate_gl4(F&& emit) {
  // Choose linearly independent columns in order; spans are point bitsets.
  std::array<unsigned, 4> cols{};
  for (unsigned c0 = 1; c0 < 16; ++c0) {
    cols[0] = c0;
    unsigned span1 = (1u << 0) | (1u << c0);
    for (unsigned c1 = 1; c1 < 16; ++c1) {
      if ((span1 >> c1) & 1u) continue;
      cols[1] = c1;
      unsigned span2 = span1;
      for (unsigned s = 0; s < 16; ++s)
        if ((span1 >> s) & 1u) span2 |= 1u << (s ^ c1);
      for (unsigned c2 = 1; c2 < 16; ++c2) {
        if ((span2 >> c2) & 1u) continue;
        cols[2] = c2;
        unsigned span3 = span2;
        for (unsigned s = 0; s < 16; ++s)
          if ((span2 >> s) & 1u) span3 |= 1u << (s ^ c2);
        for (unsigned c3 = 1; c3 < 16; ++c3) {
          if ((span3 >> c3) & 1u) continue;
          cols[3] = c3;
          emit(cols);
        }
      }
    }
  }
}

struct AutoHash {
  std::size_t operator()(const Auto& a) const {
    return static_cast<std::size_t>(hash_bytes(a.p.img, 16, a.x));
  }
};

}  // namespace

const PermGroupSet& sym_h16() {
  static const PermGroupSet group = [] {
    std::vector<Auto> elems;
    elems.reserve(322560);
    enumerate_gl4([&](const std::array<unsigned, 4>& cols) {
      for (unsigned b = 0; b < 16; ++b) elems.push_back({0, affine_perm(cols, b)});
    });
    PermGroupSet g = make_group_set(16, std::move(elems), true);
    require(g.order() == 322560, errc::internal, "affine group of F2^4 must have order 322560");
    return g;
  }();
  return group;
}

bool is_affine_perm(const Perm& p) {
  const unsigned b = p.img[0];
  std::array<unsigned, 4> cols{};
  for (int k = 0; k < 4; ++k) cols[static_cast<std::size_t>(k)] = p.img[1u << k] ^ b;
  for (unsigned i = 0; i < 16; ++i)
    if ((mat_apply(cols, i) ^ b) != p.img[i]) return false;
  return true;
}

std::vector<Perm> affine_translations() {
  std::vector<Perm> out;
  out.reserve(16);
  const std::array<unsigned, 4> id_cols{1, 2, 4, 8};
  for (unsigned b = 0; b < 16; ++b) out.push_back(affine_perm(id_cols, b));
  return out;
}

PermGroupSet sym_of_subcode(const Code& c) {
  require(c.length() == 16, errc::invalid_argument, "symmetry filter is specialized to length 16");
  SpanInfo span = span_of(c);
  require(span.code == reed_muller(2, 4), errc::span_not_ambient,
          "filter method inapplicable: span of the code is not H16");
  std::bitset<65536> member;
  for (word_t w : c.words()) member.set(w);
  std::vector<Auto> kept;
  for (const Auto& a : sym_h16().elements) {
    bool stabilizes = true;
    for (word_t w : c.words())
      if (!member.test(act(a.p, w))) {
        stabilizes = false;
        break;
      }
    if (stabilizes) kept.push_back(a);
  }
  return make_group_set(16, std::move(kept), true);
}

ClosureResult closure(const std::vector<Auto>& gens, std::size_t bound) {
  require(bound >= 1, errc::invalid_argument, "closure bound must be at least 1");
  ClosureResult res;
  std::unordered_set<Auto, AutoHash> seen{Auto::identity()};
  std::vector<Auto> frontier{Auto::identity()};
  while (!frontier.empty()) {
    std::vector<Auto> next;
    for (const Auto& f : frontier)
      for (const Auto& g : gens) {
        Auto h = compose(f, g);
        if (seen.insert(h).second) {
          next.push_back(h);
          if (seen.size() > bound) {
            res.group = make_group_set(16, std::vector<Auto>(seen.begin(), seen.end()), false);
            res.exceeded_bound = true;
            return res;
          }
        }
      }
    frontier = std::move(next);
  }
  res.group = make_group_set(16, std::vector<Auto>(seen.begin(), seen.end()), true);
  res.group.generators = gens;
  return res;
}

PermGroupSet conjugate_subgroup(const PermGroupSet& s, const Auto& g) {
  require(s.closed, errc::invalid_argument, "conjugate_subgroup requires a closed set");
  const Auto gi = inverse(g);
  std::vector<Auto> out;
  out.reserve(s.order());
  for (const Auto& h : s.elements) out.push_back(compose(compose(g, h), gi));
  return make_group_set(s.degree, std::move(out), true);
}

PermGroupSet action_on_cosets(const PermGroupSet& g, const CosetDecomposition& d) {
  const int k = static_cast<int>(d.reps.size());
  require(k >= 1 && k <= 16, errc::invalid_argument, "coset system too large for label permutations");
  // Word -> label; the kernel coset gets label k and must stay in place.
  std::vector<std::pair<word_t, int>> label_of;
  label_of.reserve(d.base.size());
  for (int i = 0; i < k; ++i)
    for (word_t kw : d.kernel.words()) label_of.emplace_back(d.reps[static_cast<std::size_t>(i)] ^ kw, i);
  for (word_t kw : d.kernel.words()) label_of.emplace_back(kw, k);
  std::sort(label_of.begin(), label_of.end());
  auto label = [&](word_t w) {
    auto it = std::lower_bound(label_of.begin(), label_of.end(), std::make_pair(w, -1));
    require(it != label_of.end() && it->first == w, errc::coset_system_violation,
            "element maps a codeword off the coset system");
    return it->second;
  };
  std::vector<Auto> induced;
  induced.reserve(g.order());
  for (const Auto& a : g.elements) {
    require(a.x == 0, errc::invalid_argument, "coset action expects pure permutations");
    int image[17];
    std::fill(image, image + 17, -1);
    bool hit[17] = {};
    for (const auto& [w, l] : label_of) {
      int m = label(act(a.p, w));
      if (image[l] == -1) {
        require(!hit[m], errc::coset_system_violation, "two cosets map into one");
        image[l] = m;
        hit[m] = true;
      } else {
        require(image[l] == m, errc::coset_system_violation, "element splits a kernel coset");
      }
    }
    require(image[k] == k, errc::coset_system_violation, "kernel coset is not stabilized");
    Perm q = Perm::identity();
    for (int i = 0; i < k; ++i) q.img[i] = static_cast<std::uint8_t>(image[i]);
    induced.push_back({0, q});
  }
  return make_group_set(k, std::move(induced), g.closed);
}

bool is_two_transitive(const PermGroupSet& g, int npoints) {
  // Orbit of the ordered pair (0, 1); for a group this covers all pairs
  // exactly when the action is 2-transitive.
  std::vector<bool> seen(static_cast<std::size_t>(npoints) * static_cast<std::size_t>(npoints), false);
  std::size_t count = 0;
  for (const Auto& a : g.elements) {
    if (a.p.img[0] == a.p.img[1]) continue;
    std::size_t key = static_cast<std::size_t>(a.p.img[0]) * static_cast<std::size_t>(npoints) + a.p.img[1];
    if (!seen[key]) {
      seen[key] = true;
      ++count;
    }
  }
  return count == static_cast<std::size_t>(npoints) * static_cast<std::size_t>(npoints - 1);
}

std::vector<word_t> orbit_of_word(const std::vector<Auto>& elements, word_t start) {
  std::vector<word_t> orbit{start};
  std::unordered_set<word_t> seen{start};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Auto& a : elements) {
      word_t y = apply(a, orbit[i]);
      if (seen.insert(y).second) orbit.push_back(y);
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace nrprop
