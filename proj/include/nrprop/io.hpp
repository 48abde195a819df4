#ifndef NRPROP_IO_HPP
#define NRPROP_IO_HPP

#include <string>
#include <vector>

#include "nrprop/constructions.hpp"
#include "nrprop/gf2.hpp"
#include "nrprop/partition.hpp"
#include "nrprop/perm.hpp"
#include "nrprop/structure.hpp"

namespace nrprop {

// Code file: first line "n M", then M lines of n characters over {0,1} in
// coordinate order. Load/save round-trips are bit-exact.
void save_code(const Code& c, const std::string& path);
Code load_code(const std::string& path);

// Z4 code file: "n M", then M lines of n space-separated digits 0..3.
void save_z4_code(const Z4Code& c, const std::string& path);
Z4Code load_z4_code(const std::string& path);

// Permutation file: one line per permutation, n space-separated images.
void save_perms(const std::vector<Perm>& perms, int n, const std::string& path);
std::vector<Perm> load_perms(const std::string& path, int n);

// Structure file: "n M", then M records of word line followed by
// permutation line.
void save_structure(const PropStructure& s, const std::string& path);
PropStructure load_structure(const std::string& path);

// Partition file: "blocks=8", then one translator word line per non-base
// block; the base code is referenced by file path in the manifest line
// "base=<path>".
void save_partition(const Partition& p, const std::string& base_path, const std::string& path);
Partition load_partition(const std::string& path, const CosetAtlas& atlas);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace nrprop

#endif
