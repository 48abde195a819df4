#ifndef NRPROP_PERM_HPP
#define NRPROP_PERM_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

#include "nrprop/gf2.hpp"

#if defined(__SSSE3__)
#include <tmmintrin.h>
#endif

namespace nrprop {

// Permutation of at most 16 points. img[i] is the image of i; points at or
// beyond the working degree are fixed, so one layout serves both degree 16
// (code coordinates) and degree 7 (kernel-coset labels).
//
// The product convention is tied to the action on words,
//   act(p, y)_i = y_{p(i)},
// and is chosen so that act(compose(p, q), y) = act(p, act(q, y)).
struct Perm {
  alignas(16) std::uint8_t img[16];

  static Perm identity() {
    Perm p;
    for (int i = 0; i < 16; ++i) p.img[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  std::uint8_t operator[](int i) const { return img[i]; }

  bool operator==(const Perm& o) const { return std::memcmp(img, o.img, 16) == 0; }
  bool operator<(const Perm& o) const { return std::memcmp(img, o.img, 16) < 0; }
};

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r;
#if defined(__SSSE3__)
  __m128i vp = _mm_load_si128(reinterpret_cast<const __m128i*>(p.img));
  __m128i vq = _mm_load_si128(reinterpret_cast<const __m128i*>(q.img));
  _mm_store_si128(reinterpret_cast<__m128i*>(r.img), _mm_shuffle_epi8(vq, vp));
#else
  for (int i = 0; i < 16; ++i) r.img[i] = q.img[p.img[i]];
#endif
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r;
  for (int i = 0; i < 16; ++i) r.img[p.img[i]] = static_cast<std::uint8_t>(i);
  return r;
}

inline word_t act(const Perm& p, word_t y) {
#if defined(__SSSE3__)
  // Expand the 16 bits of y into bytes, route them through img with a byte
  // shuffle, and collapse back with movemask (bytes are 0x00 or 0xFF).
  const __m128i lane_byte = _mm_set_epi8(1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0);
  const __m128i lane_bit =
      _mm_set_epi8(static_cast<char>(0x80), 0x40, 0x20, 0x10, 8, 4, 2, 1,
                   static_cast<char>(0x80), 0x40, 0x20, 0x10, 8, 4, 2, 1);
  __m128i w = _mm_set1_epi16(static_cast<short>(y));
  __m128i bytes = _mm_shuffle_epi8(w, lane_byte);
  __m128i bits = _mm_cmpeq_epi8(_mm_and_si128(bytes, lane_bit), lane_bit);
  __m128i vp = _mm_load_si128(reinterpret_cast<const __m128i*>(p.img));
  __m128i routed = _mm_shuffle_epi8(bits, vp);
  return static_cast<word_t>(_mm_movemask_epi8(routed));
#else
  word_t r = 0;
  for (int i = 0; i < 16; ++i) r |= ((y >> p.img[i]) & 1u) << i;
  return r;
#endif
}

// An isometry of F2^n: y -> x + act(p, y). Identity is (0, id).
struct Auto {
  word_t x;
  Perm p;

  static Auto identity() { return {0, Perm::identity()}; }

  bool operator==(const Auto& o) const { return x == o.x && p == o.p; }
  bool operator<(const Auto& o) const { return x != o.x ? x < o.x : p < o.p; }
};

inline word_t apply(const Auto& a, word_t y) { return a.x ^ act(a.p, y); }

// Composition law: apply(compose(a, b), y) == apply(a, apply(b, y)).
inline Auto compose(const Auto& a, const Auto& b) {
  return {static_cast<word_t>(a.x ^ act(a.p, b.x)), compose(a.p, b.p)};
}

inline Auto inverse(const Auto& a) {
  Perm pi = inverse(a.p);
  return {act(pi, a.x), pi};
}

std::uint64_t hash_bytes(const void* data, std::size_t len, std::uint64_t seed = 0x9e3779b97f4a7c15ull);

inline std::uint64_t hash_perm(const Perm& p) { return hash_bytes(p.img, 16); }

std::string perm_to_string(const Perm& p, int n);
Perm perm_from_string(const std::string& line, int n);

}  // namespace nrprop

#endif
