#ifndef NRPROP_CONSTRUCTIONS_HPP
#define NRPROP_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "nrprop/gf2.hpp"
#include "nrprop/perm.hpp"
#include "nrprop/structure.hpp"

namespace nrprop {

// A word over Z4. Addition is componentwise mod 4.
struct Z4Word {
  int length = 0;
  std::vector<std::uint8_t> digits;

  bool operator==(const Z4Word&) const = default;
  bool operator<(const Z4Word& o) const { return digits < o.digits; }
};

Z4Word z4_add(const Z4Word& a, const Z4Word& b);

// An additive subgroup of Z4^n, fully enumerated.
struct Z4Code {
  int length = 0;
  std::vector<Z4Word> generators;
  std::vector<Z4Word> elements;  // sorted, contains zero

  bool contains(const Z4Word& w) const;
};

Z4Code z4_span(int length, const std::vector<Z4Word>& generators);

// Digit-wise Gray substitution 0->00, 1->01, 2->11, 3->10; digit i occupies
// coordinates 2i (first listed bit) and 2i+1.
word_t gray(const Z4Word& z);
Z4Word gray_inverse(word_t w, int z4_length);

// Evaluations over all 2^m points of the Boolean functions of degree <= r;
// coordinate i is the evaluation at the binary expansion of i.
Code reed_muller(int r, int m);

// The self-dual Z4 code of length 8 with 256 elements whose Gray image has
// parameters (16, 256, 6): the cyclic code of length 7 generated by the
// Hensel lift x^3 + 2x^2 + x + 3 of x^3 + x + 1, extended by a mod-4 check
// digit. Parameters and self-duality are verified at construction.
const Z4Code& octacode();

// Gray image of the octacode in raw Gray coordinates (before relabeling).
const Code& nordstrom_robinson_raw();

// The coordinate relabeling that carries the raw Gray image into RM(2,4)
// coordinates; canonical = act(perm, raw). Found once, deterministically.
const Perm& canonical_relabeling();

// The Nordstrom-Robinson code in canonical coordinates: reduced, parameters
// (16, 256, 6), span RM(2,4), kernel RM(1,4) as sets.
const Code& nordstrom_robinson();

// For each codeword x = gray(z) the permutation swapping coordinate pair
// (2i, 2i+1) exactly when digit z_i is odd. The resulting automorphisms
// form a group acting regularly on gray(c).
PropStructure z4_structure(const Z4Code& c);

// An additive supergroup of the octacode in Z4^8 whose Gray image is the
// full span of the raw Nordstrom-Robinson code (2048 elements).
const Z4Code& z4_hamming_supercode();

// z4_structure of octacode / supercode transported to canonical
// coordinates by canonical_relabeling().
const PropStructure& nr_structure_z4();
const PropStructure& h16_structure_z4();

}  // namespace nrprop

#endif
