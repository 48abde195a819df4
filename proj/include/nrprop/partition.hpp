#ifndef NRPROP_PARTITION_HPP
#define NRPROP_PARTITION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "nrprop/gf2.hpp"
#include "nrprop/groups.hpp"

namespace nrprop {

// A Steiner triple system on the points 1..7: 7 lines of 3 points, every
// pair of points on exactly one line. Lines are stored sorted, each line as
// a 7-bit mask over points 1..7 (bit p-1 for point p).
struct FanoPlane {
  std::array<std::uint8_t, 7> lines;

  bool operator==(const FanoPlane&) const = default;
  bool operator<(const FanoPlane& o) const { return lines < o.lines; }
};

// All Fano planes on {1..7}, by exhaustive backtracking over line sets in
// lexicographic order. Exactly 30.
std::vector<FanoPlane> all_fano_planes();

FanoPlane relabel_plane(const FanoPlane& p, const std::array<int, 7>& point_images);

// The two orbits of the even permutations of {1..7} on all Fano planes,
// each of size 15. Returned as two sorted index lists into `planes`.
std::array<std::vector<std::size_t>, 2> a7_orbits(const std::vector<FanoPlane>& planes);

// Indexed decomposition of H16 = span(n) into the 64 cosets of Ker(n),
// one per subset of the coset labels {1..7} of size <= 3.
struct CosetAtlas {
  Code hamming;                       // span of the base code
  CosetDecomposition base;            // n = kernel + reps a_1..a_7
  std::vector<std::uint8_t> subset_of_coset;   // 64 label subsets, as 7-bit masks
  std::vector<word_t> rep_of_coset;            // coset representatives, index-aligned
  std::vector<std::uint8_t> coset_of_word;     // 2^16 lookup: word -> coset index, 0xFF outside H16

  int coset_index(word_t w) const;             // errors if w outside H16
  int subset_size(word_t w) const { return std::popcount(static_cast<unsigned>(subset_of_coset[coset_index(w)])); }
};

// Builds the atlas and verifies the 64 cosets are pairwise disjoint and
// cover H16 exactly.
CosetAtlas coset_atlas(const Code& n);

// Disjointness criterion: a+N and b+N are disjoint iff a+b lies in a coset
// labeled by a 3-element subset. Errors if a+b is outside H16.
bool translates_disjoint(word_t a, word_t b, const CosetAtlas& atlas);

// A partition of H16 into 8 pairwise-disjoint translates of a reduced
// Nordstrom-Robinson code: the base itself plus 7 translated blocks.
struct Partition {
  Code base;
  std::array<word_t, 7> translators;  // sorted; block i is translators[i] + base
  FanoPlane plane;                    // lines = label subsets of the translators

  bool operator==(const Partition&) const = default;
};

// All partitions of H16 into translates of n that contain n as a block:
// exactly one per Fano plane, 30 total, each verified disjoint-and-covering.
std::vector<Partition> partitions_containing(const Code& n, const CosetAtlas& atlas);

// Independent route: search all 7-subsets of the 35 triple-label cosets,
// testing pairwise disjointness of the actual translated codes.
std::vector<std::array<word_t, 7>> partitions_by_exhaustion(const Code& n, const CosetAtlas& atlas);

// True iff some element of sym_h16 maps the block set of p onto q's. When
// both partitions share the same base the test reduces to comparing the
// A7-orbits of the derived planes.
bool partitions_isomorphic(const Partition& p, const Partition& q);

// The 8 reduced Nordstrom-Robinson codes inside H16: {a + n} over the
// kernel-coset representatives (including 0). Cross-checked against the
// orbit {act(s, n) : s in sym_h16}.
std::vector<Code> reduced_nr_codes_in_h16(const Code& n, const CosetAtlas& atlas);

}  // namespace nrprop

#endif
