#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nrprop/constructions.hpp"
#include "nrprop/gf2.hpp"

using namespace nrprop;

TEST_CASE("weight counts set coordinates") {
  CHECK(weight(0) == 0);
  CHECK(weight(0xFFFF) == 16);
  std::mt19937 rng(1);
  for (int i = 0; i < 1000; ++i) {
    word_t x = rng() & 0xFFFF, y = rng() & 0xFFFF;
    CHECK(weight(x ^ y) == hamming_distance(x, y));
  }
}

TEST_CASE("min_distance") {
  CHECK(min_distance(Code(4, {0b0000, 0b1111})) == 4);
  CHECK(min_distance(nordstrom_robinson()) == 6);
  CHECK_THROWS_AS(min_distance(Code(4, {0b1010})), error);

  // independent route for H16: a linear code's distance is its minimum
  // nonzero weight
  Code h16 = reed_muller(2, 4);
  int min_weight = 16;
  for (word_t w : h16.words())
    if (w != 0) min_weight = std::min(min_weight, weight(w));
  CHECK(min_weight == 4);
  CHECK(min_distance(h16) == min_weight);
}

TEST_CASE("span") {
  SpanInfo nr_span = span_of(nordstrom_robinson());
  CHECK(nr_span.dimension == 11);
  CHECK(nr_span.code == reed_muller(2, 4));

  CHECK(span_of(Code(8, {0})).code == Code(8, {0}));

  // idempotence
  SpanInfo twice = span_of(nr_span.code);
  CHECK(twice.code == nr_span.code);

  // the span of 5 kernel cosets has dimension at most 10
  CosetDecomposition dec = coset_decomposition(nordstrom_robinson());
  for (auto [skip1, skip2] : {std::pair{0, 1}, std::pair{2, 5}}) {
    std::vector<word_t> words;
    for (int i = 0; i < 7; ++i) {
      if (i == skip1 || i == skip2) continue;
      for (word_t k : dec.kernel.words()) words.push_back(dec.reps[static_cast<std::size_t>(i)] ^ k);
    }
    CHECK(gf2_rank(words) <= 10);
  }
}

TEST_CASE("kernel") {
  Code nr = nordstrom_robinson();
  Code ker = kernel_of(nr);
  CHECK(ker == reed_muller(1, 4));
  CHECK(ker.is_linear());
  CHECK(ker.size() == 32);

  Code h16 = reed_muller(2, 4);
  CHECK(kernel_of(h16) == h16);

  Code rm14 = reed_muller(1, 4);
  CHECK(kernel_of(rm14) == rm14);

  CHECK_THROWS_AS(kernel_of(Code(4, {0b0001, 0b0010})), error);

  // kernel is contained in the code and respects cosets, for random subcodes
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<word_t> words{0};
    for (word_t w : h16.words())
      if (rng() % 4 == 0) words.push_back(w);
    Code sub(16, std::move(words));
    Code k = kernel_of(sub);
    CHECK(k.is_linear());
    for (word_t x : k.words()) CHECK(sub.contains(x));
    for (word_t x : sub.words())
      for (word_t k1 : k.words()) CHECK(sub.contains(x ^ k1));
  }
}

TEST_CASE("coset decomposition of the Nordstrom-Robinson code") {
  Code nr = nordstrom_robinson();
  CosetDecomposition dec = coset_decomposition(nr);
  CHECK(dec.kernel.size() == 32);
  CHECK(dec.reps.size() == 7);

  // reconstruction
  std::vector<word_t> rebuilt = dec.kernel.words();
  for (word_t r : dec.reps)
    for (word_t k : dec.kernel.words()) rebuilt.push_back(r ^ k);
  CHECK(Code(16, rebuilt) == nr);

  // sum of the representatives lies in the kernel
  word_t sum = 0;
  for (word_t r : dec.reps) sum ^= r;
  CHECK(dec.kernel.contains(sum));

  // a linear code decomposes into its kernel alone
  CosetDecomposition lin = coset_decomposition(reed_muller(1, 4));
  CHECK(lin.reps.empty());
  CHECK(lin.kernel == reed_muller(1, 4));
}

TEST_CASE("translate") {
  Code nr = nordstrom_robinson();
  CHECK(translate(nr, 0) == nr);
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    word_t v = rng() & 0xFFFF;
    CHECK(translate(translate(nr, v), v) == nr);
  }
  CHECK_THROWS_AS(translate(Code(8, {0, 3}), 0x100), error);
}

TEST_CASE("code invariants") {
  Code c(5, {3, 1, 3, 2, 1});
  CHECK(c.size() == 3);  // sorted, duplicate-free
  CHECK(c.words() == std::vector<word_t>{1, 2, 3});
  CHECK_THROWS_AS(Code(4, {0x10}), error);
}
