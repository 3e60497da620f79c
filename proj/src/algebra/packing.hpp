#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cpl/algebra/error.hpp"
#include "cpl/algebra/laurent.hpp"

namespace cpl::algebra::detail {

using u128 = unsigned __int128;

// Mixed-radix encoding of exponent vectors inside a box. Digit i holds
// e[i] - lo[i] in [0, width[i]); variable 0 is the most significant digit, so
// key order equals lexicographic exponent order and keys add like vectors.
template <class Key>
struct Packer {
  std::vector<std::uint64_t> width;
  std::vector<Key> stride;

  explicit Packer(const std::vector<std::uint64_t>& w) : width(w), stride(w.size()) {
    Key s = 1;
    for (std::size_t i = w.size(); i-- > 0;) {
      stride[i] = s;
      s *= static_cast<Key>(w[i]);
    }
  }

  Key encode(std::span<const Exponent> e, std::span<const Exponent> lo) const {
    Key k = 0;
    for (std::size_t i = 0; i < width.size(); ++i)
      k += static_cast<Key>(static_cast<std::int64_t>(e[i]) - lo[i]) * stride[i];
    return k;
  }

  void decode(Key k, std::span<const Exponent> lo, Exponent* out) const {
    for (std::size_t i = width.size(); i-- > 0;) {
      out[i] = static_cast<Exponent>(lo[i] + static_cast<std::int64_t>(k % width[i]));
      k /= width[i];
    }
  }
};

enum class KeyWidth { Bits64, Bits128 };

// Chooses the narrowest key type holding prod(width); throws if none does.
inline KeyWidth choose_key_width(const std::vector<std::uint64_t>& width) {
  u128 total = 1;
  const u128 limit64 = static_cast<u128>(UINT64_MAX);
  bool fits64 = true;
  for (auto w : width) {
    u128 next;
    if (__builtin_mul_overflow(total, static_cast<u128>(w), &next) || (next >> 126) != 0)
      throw Error(Errc::ExponentOverflow, "exponent box too large for packed keys");
    total = next;
    if (total > limit64) fits64 = false;
  }
  return fits64 ? KeyWidth::Bits64 : KeyWidth::Bits128;
}

struct KeyHash {
  static std::size_t mix(std::uint64_t k) noexcept {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
  std::size_t operator()(std::uint64_t k) const noexcept { return mix(k); }
  std::size_t operator()(u128 k) const noexcept {
    return mix(static_cast<std::uint64_t>(k) ^ (static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL));
  }
};

inline Exponent checked_exponent(std::int64_t v) {
  if (v > INT32_MAX || v < INT32_MIN) throw Error(Errc::ExponentOverflow, "exponent exceeds 32 bits");
  return static_cast<Exponent>(v);
}

}  // namespace cpl::algebra::detail
