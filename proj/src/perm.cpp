#include "nrprop/perm.hpp"

#include <sstream>

#include "nrprop/error.hpp"

namespace nrprop {

std::uint64_t hash_bytes(const void* data, std::size_t len, std::uint64_t seed) {
  // FNV-1a with a splitmix finisher; used only for dedup buckets.
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed ^ 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

std::string perm_to_string(const Perm& p, int n) {
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    if (i) os << ' ';
    os << static_cast<int>(p.img[i]);
  }
  return os.str();
}

Perm perm_from_string(const std::string& line, int n) {
  require(n >= 1 && n <= 16, errc::invalid_argument, "permutation degree must be in 1..16");
  std::istringstream is(line);
  Perm p = Perm::identity();
  bool used[16] = {};
  for (int i = 0; i < n; ++i) {
    int v = -1;
    require(static_cast<bool>(is >> v), errc::io_failure, "permutation line too short");
    require(v >= 0 && v < n && !used[v], errc::invalid_argument, "permutation images must be distinct and in range");
    used[v] = true;
    p.img[i] = static_cast<std::uint8_t>(v);
  }
  int extra = 0;
  require(!(is >> extra), errc::io_failure, "permutation line has trailing tokens");
  return p;
}

}  // namespace nrprop
