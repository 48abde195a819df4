#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nrprop/groups.hpp"
#include "nrprop/perm.hpp"

using namespace nrprop;

namespace {

Perm random_perm(std::mt19937& rng) {
  Perm p = Perm::identity();
  for (int i = 15; i > 0; --i) std::swap(p.img[i], p.img[rng() % (i + 1)]);
  return p;
}

}  // namespace

TEST_CASE("identity behavior") {
  Auto id = Auto::identity();
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    word_t y = rng() & 0xFFFF;
    CHECK(apply(id, y) == y);
  }
  Auto shift{0x1234, Perm::identity()};
  CHECK(apply(shift, 0) == 0x1234);
}

TEST_CASE("composition matches sequential application") {
  std::mt19937 rng(42);
  for (int i = 0; i < 10000; ++i) {
    Auto a{static_cast<word_t>(rng() & 0xFFFF), random_perm(rng)};
    Auto b{static_cast<word_t>(rng() & 0xFFFF), random_perm(rng)};
    word_t y = rng() & 0xFFFF;
    CHECK(apply(compose(a, b), y) == apply(a, apply(b, y)));
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(17);
  for (int i = 0; i < 1000; ++i) {
    Auto a{static_cast<word_t>(rng() & 0xFFFF), random_perm(rng)};
    CHECK(compose(a, inverse(a)) == Auto::identity());
    CHECK(compose(inverse(a), a) == Auto::identity());
  }
}

TEST_CASE("compose identity laws") {
  std::mt19937 rng(5);
  Auto a{static_cast<word_t>(rng() & 0xFFFF), random_perm(rng)};
  CHECK(compose(Auto::identity(), a) == a);
  CHECK(compose(a, Auto::identity()) == a);
}

TEST_CASE("conjugating a translation by any automorphism yields a translation") {
  std::mt19937 rng(23);
  for (int i = 0; i < 1000; ++i) {
    Auto g{static_cast<word_t>(rng() & 0xFFFF), random_perm(rng)};
    word_t t = rng() & 0xFFFF;
    Auto trans{t, Perm::identity()};
    Auto c = compose(compose(g, trans), inverse(g));
    CHECK(c.p == Perm::identity());
    CHECK(c.x == act(g.p, t));
  }
}

TEST_CASE("act matches the scalar definition") {
  std::mt19937 rng(29);
  for (int i = 0; i < 2000; ++i) {
    Perm p = random_perm(rng);
    word_t y = rng() & 0xFFFF;
    word_t expect = 0;
    for (int k = 0; k < 16; ++k) expect |= ((y >> p.img[k]) & 1u) << k;
    CHECK(act(p, y) == expect);
  }
}

TEST_CASE("permutation strings round-trip") {
  std::mt19937 rng(31);
  for (int i = 0; i < 50; ++i) {
    Perm p = random_perm(rng);
    CHECK(perm_from_string(perm_to_string(p, 16), 16) == p);
  }
  CHECK_THROWS_AS(perm_from_string("0 1 2", 16), error);
  CHECK_THROWS_AS(perm_from_string("0 0 1 3", 4), error);
}
