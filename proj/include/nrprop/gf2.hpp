#ifndef NRPROP_GF2_HPP
#define NRPROP_GF2_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "nrprop/error.hpp"

namespace nrprop {

// A word is a binary vector of length n <= 32, stored little-endian by
// coordinate: bit i of the integer is coordinate i. Bits beyond the length
// are kept zero; the surrounding Code (or an explicit length argument)
// carries n. Addition is XOR.
using word_t = std::uint32_t;

inline int weight(word_t w) { return std::popcount(w); }
inline int hamming_distance(word_t a, word_t b) { return std::popcount(a ^ b); }

// Parity of <a, b> over F2.
inline int dot_gf2(word_t a, word_t b) { return std::popcount(a & b) & 1; }

std::string word_to_string(word_t w, int n);
word_t word_from_string(const std::string& s, int* n_out = nullptr);

// A set of words of common length, kept sorted and duplicate-free so that
// equality of codes is equality of the element lists.
class Code {
public:
  Code() = default;
  Code(int n, std::vector<word_t> words);

  int length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<word_t>& words() const { return words_; }
  word_t operator[](std::size_t i) const { return words_[i]; }

  bool contains(word_t w) const;
  bool is_reduced() const { return !words_.empty() && words_.front() == 0; }
  bool is_linear() const;

  bool operator==(const Code&) const = default;

private:
  int n_ = 0;
  std::vector<word_t> words_;
};

struct SpanInfo {
  Code code;
  std::vector<word_t> basis;  // reduced row-echelon, sorted by leading bit
  int dimension = 0;
};

struct CosetDecomposition {
  Code base;
  Code kernel;
  std::vector<word_t> reps;  // minimal word of each nontrivial kernel coset
};

int min_distance(const Code& c);

// Linear span of the words of c, with basis and dimension.
SpanInfo span_of(const Code& c);

// Kernel of a reduced code: {x in c : x + c = c}. Always linear.
Code kernel_of(const Code& c);

CosetDecomposition coset_decomposition(const Code& c);

Code translate(const Code& c, word_t v);

// Rank of an arbitrary word list over F2.
int gf2_rank(std::vector<word_t> words);

}  // namespace nrprop

#endif
