#ifndef NRPROP_STRUCTURE_HPP
#define NRPROP_STRUCTURE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nrprop/gf2.hpp"
#include "nrprop/groups.hpp"
#include "nrprop/perm.hpp"

namespace nrprop {

// A regular group of automorphisms of a reduced code, stored as one
// permutation per codeword: the group elements are (code[i], perm_of[i]).
// Regularity makes the word part a complete index.
struct PropStructure {
  Code code;
  std::vector<Perm> perm_of;  // parallel to code.words()

  std::size_t order() const { return perm_of.size(); }
  Auto element(std::size_t i) const { return {code[i], perm_of[i]}; }
  const Perm* perm_for(word_t x) const;

  // x * y = x + act(perm_for(x), y)
  word_t star(word_t x, word_t y) const;

  std::vector<Auto> elements() const;
  std::vector<Auto> minimal_generators() const;
  std::vector<Perm> distinct_perms() const;

  bool operator==(const PropStructure&) const = default;
};

PropStructure structure_from_elements(const Code& code, const std::vector<Auto>& elements);

// Translation group of a linear code: every permutation is the identity.
PropStructure translation_structure(const Code& linear_code);

struct ValidationReport {
  bool ok = true;
  std::string diagnostic;  // which invariant failed, when !ok
};

// Checks the full set of structure invariants: identity at 0, every element
// an automorphism of the code, group closure, and regularity.
ValidationReport validate_structure(const PropStructure& s);

// True iff the number of distinct permutations equals |C| / |Ker(C)|.
bool is_normalized(const PropStructure& s);

// Sorted multiset of (element order, centralizer order) pairs, one per
// group element. Invariant under group isomorphism.
using GroupFingerprint = std::vector<std::pair<int, int>>;

GroupFingerprint fingerprint(const PropStructure& s);
GroupFingerprint fingerprint_of_elements(const std::vector<Auto>& elements);
std::string fingerprint_to_string(const GroupFingerprint& fp);

enum class IsoResult { isomorphic, not_isomorphic, unknown };

// Abstract group isomorphism by backtracking over images of a minimal
// generating set, pruned by element order and centralizer order. Returns
// `unknown` when the node budget is exhausted, never a wrong boolean.
IsoResult groups_isomorphic(const PropStructure& s, const PropStructure& t,
                            std::uint64_t node_budget = 50'000'000);

// ---- Regular-subgroup enumeration -----------------------------------------

struct EnumerationOptions {
  std::string cache_dir;  // empty: no checkpoints
  int jobs = 1;
  std::function<void(const std::string&)> progress;  // optional
};

struct EnumerationResult {
  std::vector<PropStructure> representatives;       // one per conjugacy class
  std::vector<std::size_t> classes_per_level;       // index k: classes of order 2^k
};

// One representative per conjugacy class of regular subgroups of Aut(c),
// for c the canonical Nordstrom-Robinson code, by a level-by-level 2-group
// chain search; conjugacy is normalized to the stabilizer of zero
// (= sym_of_subcode(c)). `ambient_stab` must be that stabilizer.
EnumerationResult enumerate_structures(const Code& c, const PermGroupSet& ambient_stab,
                                       const EnumerationOptions& opts = {});

// Partition of `structures` into conjugacy classes under `stab` (elements
// used as conjugators). Returns one vector of input indices per class.
std::vector<std::vector<std::size_t>> conjugacy_classes(
    const std::vector<PropStructure>& structures, const PermGroupSet& stab);

// True iff some conjugator in `stab` maps the element set of s onto t's.
bool conjugate_in(const std::vector<Auto>& s, const std::vector<Auto>& t,
                  const std::vector<Perm>& stab_perms);

}  // namespace nrprop

#endif
