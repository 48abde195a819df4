#ifndef NRPROP_EXTENSION_HPP
#define NRPROP_EXTENSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nrprop/partition.hpp"
#include "nrprop/structure.hpp"

namespace nrprop {

// A narrow extension of a structure on the Nordstrom-Robinson code to the
// extended Hamming code: same permutation set, order 2048, restriction to
// the subcode equal to the source.
struct ExtensionResult {
  const PropStructure* source = nullptr;  // not owned
  Partition partition;
  std::array<word_t, 3> generators;       // translator triple spanning the new cosets
  PropStructure extended;
};

// All distinct narrow extensions of s to H16: iterate the 30 partitions
// containing the base code, then independent translator triples drawn from
// the partition's translator cosets, and keep the triples whose elementary
// abelian group of order 8 joins with s to a group of order exactly 2048.
// Groups are deduplicated; an empty result is a valid outcome.
std::vector<ExtensionResult> extend_structure(const PropStructure& s, const CosetAtlas& atlas,
                                              const std::vector<Partition>& partitions);

struct SubgroupChainReport {
  bool identity_words_extend = false;   // translations extend the source's identity-perm words with index 8
  bool identity_words_abelian = false;  // ...and form an elementary abelian group
  bool identity_set_normal = false;     // identity-perm elements are normal in the extension
  bool cosets_are_translates = false;   // every left coset x*(C,*) equals x + C
  bool ok() const {
    return identity_words_extend && identity_words_abelian && identity_set_normal && cosets_are_translates;
  }
  std::string diagnostic;
};

// Structural facts about a narrow extension: the identity-permutation part
// is an elementary abelian normal complement and the left cosets of the
// source are exactly the translate blocks.
SubgroupChainReport narrow_extension_report(const ExtensionResult& e);

struct Z4ExtensionReport {
  bool supercode_order_ok = false;      // 2048 Z4-hamming elements
  bool contains_subcode_structure = false;
  bool same_perm_set = false;           // 16 shared permutations
  bool perm_rule_ok = false;            // perm equality <=> doubled Z4 preimages equal
  bool found_by_search = false;         // the analytic extension appears among extend_structure outputs
  bool ok() const {
    return supercode_order_ok && contains_subcode_structure && same_perm_set && perm_rule_ok && found_by_search;
  }
};

// Builds the Z4-linear structures on the Nordstrom-Robinson code and on
// H16 and confirms the former extends narrowly to the latter, cross-checked
// against the search-based extension of the same source.
Z4ExtensionReport z4_extension_report(const CosetAtlas& atlas, const std::vector<Partition>& partitions);

struct ExtensionClassification {
  std::size_t conjugacy_classes = 0;
  std::size_t fingerprint_distinct = 0;
  std::vector<std::size_t> sources_without_extension;  // indices into the source list
  // One representative per conjugacy class: (source index, translator triple).
  std::vector<std::pair<std::size_t, std::array<word_t, 3>>> class_reps;
};

// Conjugacy classes (under the automorphism group of H16, conjugators
// normalized to sym_h16) of all narrow extensions over all source classes,
// plus the fingerprint-distinct count.
ExtensionClassification classify_extensions(
    const std::vector<PropStructure>& sources, const CosetAtlas& atlas,
    const std::vector<Partition>& partitions, const std::string& cache_dir = {}, int jobs = 1,
    const std::function<void(const std::string&)>& progress = {});

// Rebuilds the extended structure for a classification representative.
PropStructure build_extension(const PropStructure& source, const std::array<word_t, 3>& generators,
                              const Code& h16);

}  // namespace nrprop

#endif
