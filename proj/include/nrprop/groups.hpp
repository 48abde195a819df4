#ifndef NRPROP_GROUPS_HPP
#define NRPROP_GROUPS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nrprop/gf2.hpp"
#include "nrprop/perm.hpp"

namespace nrprop {

// A set of automorphisms (pure permutations are stored as (0, p)), kept
// sorted so that set equality is list equality. `closed` marks a set known
// to be closed under composition and inverse.
struct PermGroupSet {
  int degree = 16;
  bool closed = false;
  std::vector<Auto> elements;
  std::vector<Auto> generators;  // optional

  std::size_t order() const { return elements.size(); }
  bool contains(const Auto& a) const;
  bool all_pure_perms() const;
};

PermGroupSet make_group_set(int degree, std::vector<Auto> elements, bool closed);

// The 322,560 coordinate permutations of 16 points induced by affine maps
// v -> Av + b of F2^4, where coordinate i is identified with the binary
// expansion of i. This is the full symmetry group of the length-16
// Reed-Muller codes.
const PermGroupSet& sym_h16();

// Is p induced by some affine map of F2^4?
bool is_affine_perm(const Perm& p);

// The 16 permutations induced by the translations v -> v + b.
std::vector<Perm> affine_translations();

// Symmetry group of a subcode c with span(c) = H16, computed by filtering
// sym_h16. Errors if the span precondition fails.
PermGroupSet sym_of_subcode(const Code& c);

struct ClosureResult {
  PermGroupSet group;
  bool exceeded_bound = false;  // if set, `group` holds a partial closure
};

// Closure of `gens` under composition, abandoned once the order would
// exceed `bound`. Early exit is a distinguished result, not an error.
ClosureResult closure(const std::vector<Auto>& gens, std::size_t bound);

PermGroupSet conjugate_subgroup(const PermGroupSet& s, const Auto& g);

// The permutation group induced on the labels 1..k of the nontrivial
// kernel cosets of d by a group of coordinate permutations. Errors if some
// element maps a coset off the coset system.
PermGroupSet action_on_cosets(const PermGroupSet& g, const CosetDecomposition& d);

bool is_two_transitive(const PermGroupSet& g, int npoints);

// Orbit of a word under a set of automorphisms (closure not required).
std::vector<word_t> orbit_of_word(const std::vector<Auto>& elements, word_t start);

}  // namespace nrprop

#endif
