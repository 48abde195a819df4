#include "nrprop/gf2.hpp"

#include <algorithm>

namespace nrprop {

std::string word_to_string(word_t w, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((w >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

word_t word_from_string(const std::string& s, int* n_out) {
  require(!s.empty() && s.size() <= 32, errc::invalid_argument,
          "word string must have between 1 and 32 characters");
  word_t w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      w |= word_t{1} << i;
    else
      require(s[i] == '0', errc::invalid_argument, "word string must be over {0,1}");
  }
  if (n_out) *n_out = static_cast<int>(s.size());
  return w;
}

Code::Code(int n, std::vector<word_t> words) : n_(n), words_(std::move(words)) {
  require(n >= 1 && n <= 32, errc::invalid_argument, "code length must be in 1..32");
  const word_t mask = (n == 32) ? ~word_t{0} : ((word_t{1} << n) - 1);
  for (word_t w : words_)
    require((w & ~mask) == 0, errc::invalid_argument, "word has bits beyond the code length");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(word_t w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool Code::is_linear() const {
  if (!is_reduced()) return false;
  for (word_t a : words_)
    for (word_t b : words_) {
      if (b > a) break;
      if (!contains(a ^ b)) return false;
    }
  return true;
}

int min_distance(const Code& c) {
  require(c.size() >= 2, errc::degenerate_code, "degenerate code: need at least 2 words");
  int best = c.length();
  const auto& w = c.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      best = std::min(best, hamming_distance(w[i], w[j]));
  return best;
}

namespace {

// Row-reduce into a basis indexed by leading (lowest) set bit.
struct Echelon {
  word_t pivot[32] = {};

  // Returns the residue of w after elimination; 0 means dependent.
  word_t reduce(word_t w) const {
    while (w != 0) {
      int lead = std::countr_zero(w);
      if (pivot[lead] == 0) break;
      w ^= pivot[lead];
    }
    return w;
  }

  bool insert(word_t w) {
    w = reduce(w);
    if (w == 0) return false;
    pivot[std::countr_zero(w)] = w;
    return true;
  }

  std::vector<word_t> basis() const {
    std::vector<word_t> b;
    for (word_t p : pivot)
      if (p != 0) b.push_back(p);
    return b;
  }
};

}  // namespace

SpanInfo span_of(const Code& c) {
  require(c.size() >= 1, errc::invalid_argument, "span of an empty code");
  Echelon ech;
  for (word_t w : c.words()) ech.insert(w);
  std::vector<word_t> basis = ech.basis();
  const int dim = static_cast<int>(basis.size());
  require(dim <= 26, errc::invalid_argument, "span too large to enumerate");
  std::vector<word_t> all(std::size_t{1} << dim, 0);
  for (int k = 0; k < dim; ++k) {
    const std::size_t half = std::size_t{1} << k;
    for (std::size_t i = 0; i < half; ++i) all[half + i] = all[i] ^ basis[static_cast<std::size_t>(k)];
  }
  SpanInfo info;
  info.code = Code(c.length(), std::move(all));
  info.basis = std::move(basis);
  info.dimension = dim;
  return info;
}

Code kernel_of(const Code& c) {
  require(c.is_reduced(), errc::not_reduced, "kernel requires reduced code");
  std::vector<word_t> ker;
  for (word_t x : c.words()) {
    bool keeps = true;
    for (word_t w : c.words())
      if (!c.contains(x ^ w)) {
        keeps = false;
        break;
      }
    if (keeps) ker.push_back(x);
  }
  return Code(c.length(), std::move(ker));
}

CosetDecomposition coset_decomposition(const Code& c) {
  CosetDecomposition d;
  d.base = c;
  d.kernel = kernel_of(c);
  std::vector<bool> seen(c.size(), false);
  const auto& words = c.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (seen[i]) continue;
    // words are sorted, so the first unseen word is its coset's minimum
    for (word_t k : d.kernel.words()) {
      word_t y = words[i] ^ k;
      auto it = std::lower_bound(words.begin(), words.end(), y);
      require(it != words.end() && *it == y, errc::internal, "code is not kernel-coset aligned");
      seen[static_cast<std::size_t>(it - words.begin())] = true;
    }
    if (words[i] != 0) d.reps.push_back(words[i]);
  }
  require((d.reps.size() + 1) * d.kernel.size() == c.size(), errc::internal,
          "coset decomposition does not cover the code");
  return d;
}

Code translate(const Code& c, word_t v) {
  const word_t mask = (c.length() == 32) ? ~word_t{0} : ((word_t{1} << c.length()) - 1);
  require((v & ~mask) == 0, errc::length_mismatch, "translation word longer than the code");
  std::vector<word_t> out;
  out.reserve(c.size());
  for (word_t w : c.words()) out.push_back(w ^ v);
  return Code(c.length(), std::move(out));
}

int gf2_rank(std::vector<word_t> words) {
  Echelon ech;
  int rank = 0;
  for (word_t w : words)
    if (ech.insert(w)) ++rank;
  return rank;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::length_mismatch: return "length_mismatch";
    case errc::degenerate_code: return "degenerate_code";
    case errc::not_reduced: return "not_reduced";
    case errc::span_not_ambient: return "span_not_ambient";
    case errc::coset_system_violation: return "coset_system_violation";
    case errc::verification_failed: return "verification_failed";
    case errc::io_failure: return "io_failure";
    case errc::missing_cache: return "missing_cache";
    case errc::unknown_name: return "unknown_name";
    case errc::tier_locked: return "tier_locked";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace nrprop
