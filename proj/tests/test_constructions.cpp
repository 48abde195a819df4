#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "nrprop/constructions.hpp"
#include "nrprop/structure.hpp"

using namespace nrprop;

TEST_CASE("reed_muller") {
  Code rm24 = reed_muller(2, 4);
  CHECK(rm24.size() == 2048);
  CHECK(min_distance(rm24) == 4);
  CHECK(rm24.is_linear());

  Code rm14 = reed_muller(1, 4);
  CHECK(rm14.size() == 32);
  CHECK(span_of(rm14).dimension == 5);

  for (int m = 1; m <= 4; ++m) {
    Code rm0(reed_muller(0, m));
    CHECK(rm0.words() == std::vector<word_t>{0, (m == 5 ? ~word_t{0} : ((word_t{1} << (1 << m)) - 1))});
  }

  // nesting
  for (int r = 0; r < 4; ++r) {
    Code lo = reed_muller(r, 4), hi = reed_muller(r + 1, 4);
    for (word_t w : lo.words()) CHECK(hi.contains(w));
  }

  CHECK_THROWS_AS(reed_muller(3, 2), error);
  CHECK_THROWS_AS(reed_muller(1, 6), error);
}

TEST_CASE("gray map") {
  Z4Word zero{8, std::vector<std::uint8_t>(8, 0)};
  CHECK(gray(zero) == 0);

  // digit pairs: 0->00, 1->01, 2->11, 3->10 on coordinates (2i, 2i+1)
  for (int d = 0; d < 4; ++d) {
    Z4Word z{1, {static_cast<std::uint8_t>(d)}};
    const word_t expect[4] = {0b00, 0b10, 0b11, 0b01};
    CHECK(gray(z) == expect[d]);
  }

  // injective on all of Z4^8, and gray_inverse is its inverse
  std::set<word_t> seen;
  for (unsigned v = 0; v < (1u << 16); ++v) {
    Z4Word z{8, {}};
    z.digits.resize(8);
    for (int i = 0; i < 8; ++i) z.digits[static_cast<std::size_t>(i)] = (v >> (2 * i)) & 3u;
    word_t w = gray(z);
    CHECK(seen.insert(w).second);
    CHECK(gray_inverse(w, 8) == z);
  }
  CHECK(seen.size() == 65536);
}

TEST_CASE("octacode") {
  const Z4Code& o = octacode();
  CHECK(o.elements.size() == 256);
  // self-duality, exhaustively
  for (const Z4Word& a : o.elements)
    for (const Z4Word& b : o.elements) {
      int dot = 0;
      for (int i = 0; i < 8; ++i) dot += a.digits[static_cast<std::size_t>(i)] * b.digits[static_cast<std::size_t>(i)];
      CHECK(dot % 4 == 0);
    }
  CHECK(min_distance(nordstrom_robinson_raw()) == 6);
}

TEST_CASE("nordstrom_robinson canonical embedding") {
  const Code& nr = nordstrom_robinson();
  CHECK(nr.is_reduced());
  CHECK(nr.size() == 256);
  CHECK(min_distance(nr) == 6);
  CHECK(span_of(nr).code == reed_muller(2, 4));
  CHECK(kernel_of(nr) == reed_muller(1, 4));
  for (word_t w : nr.words()) CHECK(reed_muller(2, 4).contains(w));
}

TEST_CASE("z4_structure of the octacode") {
  PropStructure s = z4_structure(octacode());
  CHECK(s.order() == 256);
  CHECK(validate_structure(s).ok);
  CHECK(s.perm_of[0] == Perm::identity());
  CHECK(s.distinct_perms().size() == 16);

  // group law closure including the Gray carry interaction, exhaustively
  for (std::size_t i = 0; i < s.order(); ++i)
    for (std::size_t j = 0; j < s.order(); ++j) {
      word_t prod = s.star(s.code[i], s.code[j]);
      CHECK(s.code.contains(prod));
      CHECK(*s.perm_for(prod) == compose(s.perm_of[i], s.perm_of[j]));
    }

  // permutations agree exactly on equal doubled preimages
  for (std::size_t i = 0; i < s.order(); ++i)
    for (std::size_t j = i + 1; j < s.order(); ++j) {
      Z4Word zi = gray_inverse(s.code[i], 8), zj = gray_inverse(s.code[j], 8);
      CHECK((z4_add(zi, zi) == z4_add(zj, zj)) == (s.perm_of[i] == s.perm_of[j]));
    }
}

TEST_CASE("Z4 supercode of the octacode") {
  const Z4Code& k = z4_hamming_supercode();
  CHECK(k.elements.size() == 2048);
  for (const Z4Word& o : octacode().elements) CHECK(k.contains(o));
  // Gray image is the span of the raw Gray image
  Code span = span_of(nordstrom_robinson_raw()).code;
  for (const Z4Word& z : k.elements) CHECK(span.contains(gray(z)));

  const PropStructure& sup = h16_structure_z4();
  CHECK(sup.order() == 2048);
  CHECK(sup.code == reed_muller(2, 4));
  CHECK(sup.distinct_perms().size() == 16);
}

TEST_CASE("canonical relabeling is a fixed constant") {
  const Perm& p = canonical_relabeling();
  const Perm& q = canonical_relabeling();
  CHECK(p == q);
  std::vector<word_t> relabeled;
  for (word_t w : nordstrom_robinson_raw().words()) relabeled.push_back(act(p, w));
  CHECK(Code(16, relabeled) == nordstrom_robinson());
}
