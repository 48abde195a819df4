#include "nrprop/constructions.hpp"

#include <algorithm>
#include <bitset>
#include <set>

#include "nrprop/groups.hpp"

namespace nrprop {

Z4Word z4_add(const Z4Word& a, const Z4Word& b) {
  require(a.length == b.length, errc::length_mismatch, "Z4 word lengths differ");
  Z4Word r = a;
  for (int i = 0; i < a.length; ++i)
    r.digits[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((a.digits[static_cast<std::size_t>(i)] + b.digits[static_cast<std::size_t>(i)]) & 3);
  return r;
}

bool Z4Code::contains(const Z4Word& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

Z4Code z4_span(int length, const std::vector<Z4Word>& generators) {
  std::set<Z4Word> elems;
  Z4Word zero;
  zero.length = length;
  zero.digits.assign(static_cast<std::size_t>(length), 0);
  elems.insert(zero);
  std::vector<Z4Word> frontier{zero};
  while (!frontier.empty()) {
    std::vector<Z4Word> next;
    for (const Z4Word& f : frontier)
      for (const Z4Word& g : generators) {
        Z4Word h = z4_add(f, g);
        if (elems.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  Z4Code c;
  c.length = length;
  c.generators = generators;
  c.elements.assign(elems.begin(), elems.end());
  return c;
}

word_t gray(const Z4Word& z) {
  require(2 * z.length <= 32, errc::invalid_argument, "Gray image longer than 32 bits");
  // digit -> (bit 2i, bit 2i+1): 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10
  static constexpr word_t pair_bits[4] = {0b00, 0b10, 0b11, 0b01};
  word_t w = 0;
  for (int i = 0; i < z.length; ++i)
    w |= pair_bits[z.digits[static_cast<std::size_t>(i)]] << (2 * i);
  return w;
}

Z4Word gray_inverse(word_t w, int z4_length) {
  static constexpr std::uint8_t digit_of[4] = {0, 3, 1, 2};  // indexed by bit2i + 2*bit2i1
  Z4Word z;
  z.length = z4_length;
  z.digits.resize(static_cast<std::size_t>(z4_length));
  for (int i = 0; i < z4_length; ++i) z.digits[static_cast<std::size_t>(i)] = digit_of[(w >> (2 * i)) & 3u];
  return z;
}

Code reed_muller(int r, int m) {
  require(0 <= r && r <= m && m <= 5, errc::invalid_argument, "reed_muller requires 0 <= r <= m <= 5");
  const unsigned npoints = 1u << m;
  // Monomial evaluation vectors x_S = prod_{k in S} x_k of degree <= r.
  std::vector<word_t> monomials;
  for (unsigned s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) > r) continue;
    word_t v = 0;
    for (unsigned pt = 0; pt < npoints; ++pt)
      if ((pt & s) == s) v |= word_t{1} << pt;
    monomials.push_back(v);
  }
  const std::size_t dim = monomials.size();
  require(dim <= 26, errc::invalid_argument, "reed_muller dimension too large");
  std::vector<word_t> all(std::size_t{1} << dim, 0);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t half = std::size_t{1} << k;
    for (std::size_t i = 0; i < half; ++i) all[half + i] = all[i] ^ monomials[k];
  }
  return Code(static_cast<int>(npoints), std::move(all));
}

namespace {

int z4_dot(const Z4Word& a, const Z4Word& b) {
  int s = 0;
  for (int i = 0; i < a.length; ++i)
    s += static_cast<int>(a.digits[static_cast<std::size_t>(i)]) * static_cast<int>(b.digits[static_cast<std::size_t>(i)]);
  return s & 3;
}

Z4Code build_octacode() {
  // Coefficients of x^3 + 2x^2 + x + 3, lowest degree first.
  const std::uint8_t lift[4] = {3, 1, 2, 1};
  std::vector<Z4Word> gens;
  for (int shift = 0; shift < 4; ++shift) {
    Z4Word g;
    g.length = 8;
    g.digits.assign(8, 0);
    int sum = 0;
    for (int d = 0; d < 4; ++d) {
      g.digits[static_cast<std::size_t>(shift + d)] = lift[d];
      sum += lift[d];
    }
    g.digits[7] = static_cast<std::uint8_t>((4 - (sum & 3)) & 3);  // mod-4 check digit
    gens.push_back(g);
  }
  Z4Code c = z4_span(8, gens);
  require(c.elements.size() == 256, errc::verification_failed, "octacode must have 256 elements");
  for (const Z4Word& a : c.elements)
    for (const Z4Word& b : c.elements)
      require(z4_dot(a, b) == 0, errc::verification_failed, "octacode must be self-dual");
  std::vector<word_t> image;
  image.reserve(256);
  for (const Z4Word& z : c.elements) image.push_back(gray(z));
  Code g16(16, image);
  require(g16.size() == 256, errc::verification_failed, "Gray image of the octacode must have 256 words");
  require(min_distance(g16) == 6, errc::verification_failed, "Gray image of the octacode must have distance 6");
  return c;
}

}  // namespace

const Z4Code& octacode() {
  static const Z4Code c = build_octacode();
  return c;
}

const Code& nordstrom_robinson_raw() {
  static const Code c = [] {
    std::vector<word_t> image;
    image.reserve(256);
    for (const Z4Word& z : octacode().elements) image.push_back(gray(z));
    return Code(16, std::move(image));
  }();
  return c;
}

namespace {

// A coordinate relabeling carrying the span of the raw Gray image onto
// RM(2,4). Found by matching the dual of the span to RM(1,4): pick four
// dual words that separate the 16 coordinates into all 16 bit patterns;
// sending coordinate j to the pattern it carries maps those words to the
// four coordinate functions, hence the dual onto RM(1,4) and the span onto
// its dual RM(2,4).
Perm find_relabeling() {
  SpanInfo span = span_of(nordstrom_robinson_raw());
  require(span.dimension == 11, errc::verification_failed, "raw Gray image must span an 11-dimensional code");
  std::vector<word_t> dual;
  for (word_t v = 0; v < (1u << 16); ++v) {
    bool ok = true;
    for (word_t b : span.basis)
      if (dot_gf2(v, b)) {
        ok = false;
        break;
      }
    if (ok) dual.push_back(v);
  }
  require(dual.size() == 32, errc::verification_failed, "dual of the span must have 32 words");
  const std::size_t m = dual.size();
  for (std::size_t i0 = 1; i0 < m; ++i0)
    for (std::size_t i1 = i0 + 1; i1 < m; ++i1)
      for (std::size_t i2 = i1 + 1; i2 < m; ++i2)
        for (std::size_t i3 = i2 + 1; i3 < m; ++i3) {
          const word_t g[4] = {dual[i0], dual[i1], dual[i2], dual[i3]};
          unsigned seen = 0;
          unsigned pattern[16];
          for (int j = 0; j < 16; ++j) {
            unsigned pat = 0;
            for (int k = 0; k < 4; ++k) pat |= ((g[k] >> j) & 1u) << k;
            pattern[j] = pat;
            seen |= 1u << pat;
          }
          if (seen != 0xFFFFu) continue;
          // canonical_word = act(p, raw_word) with p(i) = the raw
          // coordinate carrying pattern i.
          Perm p;
          for (int j = 0; j < 16; ++j) p.img[pattern[j]] = static_cast<std::uint8_t>(j);
          return p;
        }
  fail(errc::verification_failed, "no separating dual basis found for the raw Gray image");
}

}  // namespace

const Perm& canonical_relabeling() {
  static const Perm p = find_relabeling();
  return p;
}

const Code& nordstrom_robinson() {
  static const Code c = [] {
    const Perm& p = canonical_relabeling();
    std::vector<word_t> words;
    words.reserve(256);
    for (word_t w : nordstrom_robinson_raw().words()) words.push_back(act(p, w));
    Code nr(16, std::move(words));
    require(nr.is_reduced() && nr.size() == 256, errc::verification_failed,
            "Nordstrom-Robinson code must be reduced with 256 words");
    require(min_distance(nr) == 6, errc::verification_failed, "Nordstrom-Robinson distance must be 6");
    SpanInfo span = span_of(nr);
    require(span.dimension == 11 && span.code == reed_muller(2, 4), errc::verification_failed,
            "span of the relabeled code must be RM(2,4)");
    require(kernel_of(nr) == reed_muller(1, 4), errc::verification_failed,
            "kernel of the relabeled code must be RM(1,4)");
    return nr;
  }();
  return c;
}

PropStructure z4_structure(const Z4Code& c) {
  std::vector<Auto> elems;
  elems.reserve(c.elements.size());
  for (const Z4Word& z : c.elements) {
    Perm p = Perm::identity();
    for (int i = 0; i < c.length; ++i)
      if (z.digits[static_cast<std::size_t>(i)] & 1) {
        p.img[2 * i] = static_cast<std::uint8_t>(2 * i + 1);
        p.img[2 * i + 1] = static_cast<std::uint8_t>(2 * i);
      }
    elems.push_back({gray(z), p});
  }
  std::vector<word_t> words;
  words.reserve(elems.size());
  for (const Auto& a : elems) words.push_back(a.x);
  PropStructure s = structure_from_elements(Code(2 * c.length, std::move(words)), elems);
  ValidationReport rep = validate_structure(s);
  require(rep.ok, errc::verification_failed, "Z4 structure is not a regular group: " + rep.diagnostic);
  return s;
}

namespace {

Z4Code build_z4_hamming_supercode() {
  SpanInfo span = span_of(nordstrom_robinson_raw());
  std::bitset<65536> in_span;
  for (word_t w : span.code.words()) in_span.set(w);

  std::set<Z4Word> elems(octacode().elements.begin(), octacode().elements.end());
  std::vector<Z4Word> gens = octacode().generators;
  // Greedy absorption of Gray preimages of span words; each accepted
  // generator must keep the whole subgroup inside the preimage set.
  for (word_t w = 0; w < (1u << 16) && elems.size() < 2048; ++w) {
    if (!in_span.test(w)) continue;
    Z4Word z = gray_inverse(w, 8);
    if (elems.count(z)) continue;
    std::vector<Z4Word> trial = gens;
    trial.push_back(z);
    Z4Code closed = z4_span(8, trial);
    bool ok = true;
    for (const Z4Word& e : closed.elements)
      if (!in_span.test(gray(e))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    gens = std::move(trial);
    elems.clear();
    elems.insert(closed.elements.begin(), closed.elements.end());
  }
  require(elems.size() == 2048, errc::verification_failed,
          "no Z4 supergroup of the octacode covers the full Hamming span");
  Z4Code c;
  c.length = 8;
  c.generators = gens;
  c.elements.assign(elems.begin(), elems.end());
  for (const Z4Word& o : octacode().elements)
    require(c.contains(o), errc::verification_failed, "supercode must contain the octacode");
  return c;
}

PropStructure relabel_structure(const PropStructure& s, const Perm& p) {
  const Perm pi = inverse(p);
  std::vector<Auto> elems;
  elems.reserve(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) {
    Auto a = s.element(i);
    elems.push_back({act(p, a.x), compose(compose(p, a.p), pi)});
  }
  std::vector<word_t> words;
  words.reserve(elems.size());
  for (const Auto& a : elems) words.push_back(a.x);
  return structure_from_elements(Code(s.code.length(), std::move(words)), elems);
}

}  // namespace

const Z4Code& z4_hamming_supercode() {
  static const Z4Code c = build_z4_hamming_supercode();
  return c;
}

const PropStructure& nr_structure_z4() {
  static const PropStructure s = [] {
    PropStructure t = relabel_structure(z4_structure(octacode()), canonical_relabeling());
    require(t.code == nordstrom_robinson(), errc::internal, "relabeled Z4 structure must live on the canonical code");
    ValidationReport rep = validate_structure(t);
    require(rep.ok, errc::internal, "relabeled Z4 structure invalid: " + rep.diagnostic);
    return t;
  }();
  return s;
}

const PropStructure& h16_structure_z4() {
  static const PropStructure s = [] {
    PropStructure t = relabel_structure(z4_structure(z4_hamming_supercode()), canonical_relabeling());
    require(t.code == reed_muller(2, 4), errc::internal, "relabeled Z4 supercode structure must live on RM(2,4)");
    ValidationReport rep = validate_structure(t);
    require(rep.ok, errc::internal, "relabeled Z4 supercode structure invalid: " + rep.diagnostic);
    return t;
  }();
  return s;
}

}  // namespace nrprop
