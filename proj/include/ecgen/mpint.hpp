#pragma once

// Fixed-capacity unsigned multiprecision integers.
//
// MpInt<Limbs> stores a nonnegative value below 2^(64 * Limbs) in
// little-endian 64-bit limbs. There is no heap allocation and no sign.
// Arithmetic that would leave the representable range throws instead of
// wrapping: add/mul overflow raises RangeError, sub underflow raises
// UnderflowError.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ecgen/error.hpp"

namespace ecgen {

using Limb = std::uint64_t;
inline constexpr std::size_t kLimbBits = 64;

template <std::size_t Limbs>
class MpInt {
  static_assert(Limbs > 0, "MpInt needs at least one limb");

 public:
  static constexpr std::size_t limb_count = Limbs;
  static constexpr std::size_t capacity_bits = Limbs * kLimbBits;

  constexpr MpInt() = default;
  constexpr explicit MpInt(std::uint64_t v) { limbs_[0] = v; }

  // Big-endian hex digits, case-insensitive, no prefix.
  static MpInt from_hex(std::string_view text) {
    if (text.empty()) throw ParseError("empty hex string");
    MpInt r;
    std::size_t pos = 0;  // bit position of the next digit from the right
    for (auto it = text.rbegin(); it != text.rend(); ++it, pos += 4) {
      const int d = hex_digit_value(*it);
      if (d < 0) {
        throw ParseError(std::string("invalid hex digit '") + *it + "'");
      }
      if (d == 0) continue;
      if (pos >= capacity_bits) throw RangeError("hex value exceeds capacity");
      r.limbs_[pos / kLimbBits] |= Limb(d) << (pos % kLimbBits);
    }
    return r;
  }

  // Lowercase, left-padded with zeros to exactly `width` digits.
  std::string to_hex(std::size_t width) const {
    const std::size_t needed = hex_digits();
    if (width < needed) {
      throw RangeError("hex width " + std::to_string(width) + " too small for " +
                       std::to_string(needed) + " digits");
    }
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(width, '0');
    for (std::size_t i = 0; i < needed; ++i) {
      const std::size_t pos = 4 * i;
      out[width - 1 - i] = kDigits[(limbs_[pos / kLimbBits] >> (pos % kLimbBits)) & 0xf];
    }
    return out;
  }

  // Minimal-width form; zero is "0".
  std::string to_hex() const { return to_hex(std::max<std::size_t>(1, hex_digits())); }

  std::size_t hex_digits() const { return (bit_length() + 3) / 4; }

  std::size_t bit_length() const {
    for (std::size_t i = Limbs; i-- > 0;) {
      if (limbs_[i] != 0) {
        return i * kLimbBits + (kLimbBits - static_cast<std::size_t>(__builtin_clzll(limbs_[i])));
      }
    }
    return 0;
  }

  int bit(std::size_t i) const {
    if (i >= capacity_bits) throw RangeError("bit index out of range");
    return static_cast<int>((limbs_[i / kLimbBits] >> (i % kLimbBits)) & 1u);
  }

  constexpr bool is_zero() const {
    return std::all_of(limbs_.begin(), limbs_.end(), [](Limb l) { return l == 0; });
  }
  constexpr bool is_odd() const { return (limbs_[0] & 1u) != 0; }

  constexpr Limb limb(std::size_t i) const { return limbs_[i]; }
  constexpr Limb& limb(std::size_t i) { return limbs_[i]; }
  std::span<const Limb, Limbs> limbs() const { return limbs_; }
  std::span<Limb, Limbs> limbs() { return limbs_; }

  static MpInt power_of_two(std::size_t e) {
    if (e >= capacity_bits) throw RangeError("power of two exceeds capacity");
    MpInt r;
    r.limbs_[e / kLimbBits] = Limb(1) << (e % kLimbBits);
    return r;
  }

  // Big-endian bytes; value must fit.
  static MpInt from_bytes(std::span<const std::uint8_t> bytes) {
    MpInt r;
    std::size_t pos = 0;
    for (auto it = bytes.rbegin(); it != bytes.rend(); ++it, pos += 8) {
      if (*it == 0) continue;
      if (pos >= capacity_bits) throw RangeError("byte string exceeds capacity");
      r.limbs_[pos / kLimbBits] |= Limb(*it) << (pos % kLimbBits);
    }
    return r;
  }

  // Width conversion; throws if the value does not fit the target.
  template <std::size_t Other>
  MpInt<Other> resize() const {
    MpInt<Other> r;
    for (std::size_t i = 0; i < Limbs; ++i) {
      if (i < Other) {
        r.limb(i) = limbs_[i];
      } else if (limbs_[i] != 0) {
        throw RangeError("value does not fit narrower integer");
      }
    }
    return r;
  }

  friend constexpr bool operator==(const MpInt&, const MpInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const MpInt& a, const MpInt& b) {
    for (std::size_t i = Limbs; i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  static int hex_digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  }

  std::array<Limb, Limbs> limbs_{};
};

template <std::size_t N>
std::strong_ordering compare(const MpInt<N>& a, const MpInt<N>& b) {
  return a <=> b;
}

namespace detail {

// r = a + b, returns the carry out of the top limb.
template <std::size_t N>
constexpr Limb add_carry(MpInt<N>& r, const MpInt<N>& a, const MpInt<N>& b) {
  Limb carry = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const unsigned __int128 s = static_cast<unsigned __int128>(a.limb(i)) + b.limb(i) + carry;
    r.limb(i) = static_cast<Limb>(s);
    carry = static_cast<Limb>(s >> kLimbBits);
  }
  return carry;
}

// r = a - b mod 2^capacity, returns the borrow.
template <std::size_t N>
constexpr Limb sub_borrow(MpInt<N>& r, const MpInt<N>& a, const MpInt<N>& b) {
  Limb borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const Limb ai = a.limb(i);
    const Limb d = ai - b.limb(i);
    const Limb nb = (ai < b.limb(i)) | (d < borrow);
    r.limb(i) = d - borrow;
    borrow = nb;
  }
  return borrow;
}

// Shift left by one bit, returns the bit shifted out.
template <std::size_t N>
constexpr Limb shl1(MpInt<N>& a) {
  Limb out = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const Limb next = a.limb(i) >> (kLimbBits - 1);
    a.limb(i) = (a.limb(i) << 1) | out;
    out = next;
  }
  return out;
}

// Shift right by one bit; `top` becomes the new most significant bit.
template <std::size_t N>
constexpr void shr1(MpInt<N>& a, Limb top = 0) {
  for (std::size_t i = 0; i < N; ++i) {
    const Limb hi = i + 1 < N ? a.limb(i + 1) : top;
    a.limb(i) = (a.limb(i) >> 1) | (hi << (kLimbBits - 1));
  }
}

}  // namespace detail

template <std::size_t N>
MpInt<N> add(const MpInt<N>& a, const MpInt<N>& b) {
  MpInt<N> r;
  if (detail::add_carry(r, a, b) != 0) throw RangeError("addition overflows capacity");
  return r;
}

template <std::size_t N>
MpInt<N> sub(const MpInt<N>& a, const MpInt<N>& b) {
  MpInt<N> r;
  if (detail::sub_borrow(r, a, b) != 0) throw UnderflowError("subtraction underflow (a < b)");
  return r;
}

// Schoolbook product; the full result must fit in N limbs.
template <std::size_t N>
MpInt<N> mul(const MpInt<N>& a, const MpInt<N>& b) {
  std::array<Limb, 2 * N> t{};
  for (std::size_t i = 0; i < N; ++i) {
    if (a.limb(i) == 0) continue;
    Limb carry = 0;
    for (std::size_t j = 0; j < N; ++j) {
      const unsigned __int128 cur = static_cast<unsigned __int128>(a.limb(i)) * b.limb(j) +
                                    t[i + j] + carry;
      t[i + j] = static_cast<Limb>(cur);
      carry = static_cast<Limb>(cur >> kLimbBits);
    }
    t[i + N] = carry;
  }
  MpInt<N> r;
  for (std::size_t i = 0; i < N; ++i) {
    r.limb(i) = t[i];
    if (t[i + N] != 0) throw RangeError("multiplication overflows capacity");
  }
  return r;
}

// a mod m by binary long division. m must be nonzero.
template <std::size_t N>
MpInt<N> mod(const MpInt<N>& a, const MpInt<N>& m) {
  if (m.is_zero()) throw RangeError("modulus is zero");
  if (a < m) return a;
  MpInt<N> r;
  for (std::size_t i = a.bit_length(); i-- > 0;) {
    const Limb out = detail::shl1(r);
    r.limb(0) |= static_cast<Limb>(a.bit(i));
    if (out != 0 || r >= m) detail::sub_borrow(r, r, m);
  }
  return r;
}

}  // namespace ecgen
