#include <gtest/gtest.h>

#include <random>

#include "ecgen/mpint.hpp"

using ecgen::MpInt;
using U = MpInt<7>;
using U2 = MpInt<2>;
using u128 = unsigned __int128;

namespace {

U2 from_u128(u128 v) {
  U2 r;
  r.limb(0) = static_cast<std::uint64_t>(v);
  r.limb(1) = static_cast<std::uint64_t>(v >> 64);
  return r;
}

u128 to_u128(const U2& v) { return (u128(v.limb(1)) << 64) | v.limb(0); }

U random_bits(std::mt19937_64& rng, std::size_t bits) {
  U r;
  for (std::size_t i = 0; i * 64 < bits; ++i) r.limb(i) = rng();
  const std::size_t top = bits % 64;
  if (top != 0) r.limb(bits / 64) &= (std::uint64_t(1) << top) - 1;
  return r;
}

}  // namespace

TEST(MpInt, FromHex) {
  EXPECT_EQ(U::from_hex("ff"), U(255));
  EXPECT_EQ(U::from_hex("FF"), U(255));
  EXPECT_EQ(U::from_hex("0"), U(0));
  EXPECT_EQ(U::from_hex("000000000000000000000000000000001"), U(1));
  // 2^192 - 2^64 - 1
  U p;
  p.limb(0) = ~0ull;
  p.limb(1) = ~0ull - 1;
  p.limb(2) = ~0ull;
  EXPECT_EQ(U::from_hex("fffffffffffffffffffffffffffffffeffffffffffffffff"), p);
}

TEST(MpInt, FromHexErrors) {
  EXPECT_THROW(U::from_hex(""), ecgen::ParseError);
  EXPECT_THROW(U::from_hex("12g4"), ecgen::ParseError);
  EXPECT_THROW(U::from_hex("0x12"), ecgen::ParseError);
  EXPECT_THROW(U2::from_hex("1" + std::string(32, '0')), ecgen::RangeError);
  EXPECT_EQ(U2::from_hex(std::string(32, 'f')), from_u128(~u128(0)));
  // Leading zeros beyond capacity are harmless.
  EXPECT_EQ(U2::from_hex(std::string(40, '0') + "7"), U2(7));
}

TEST(MpInt, ToHex) {
  EXPECT_EQ(U(255).to_hex(4), "00ff");
  EXPECT_EQ(U(0).to_hex(2), "00");
  EXPECT_EQ(U::power_of_two(64).to_hex(17), "10000000000000000");
  EXPECT_EQ(U(0).to_hex(), "0");
  EXPECT_EQ(U(0xabc).to_hex(), "abc");
  EXPECT_THROW(U(256).to_hex(2), ecgen::RangeError);
}

TEST(MpInt, Compare) {
  EXPECT_EQ(ecgen::compare(U(5), U(7)), std::strong_ordering::less);
  EXPECT_EQ(ecgen::compare(U(7), U(7)), std::strong_ordering::equal);
  EXPECT_EQ(ecgen::compare(U::power_of_two(64), U(~0ull)), std::strong_ordering::greater);
}

TEST(MpInt, BitLengthAndBit) {
  EXPECT_EQ(U(0).bit_length(), 0u);
  EXPECT_EQ(U(1).bit_length(), 1u);
  EXPECT_EQ(U(256).bit_length(), 9u);
  EXPECT_EQ(U::power_of_two(447).bit_length(), 448u);
  EXPECT_EQ(U(5).bit(0), 1);
  EXPECT_EQ(U(5).bit(1), 0);
  EXPECT_EQ(U(5).bit(2), 1);
  EXPECT_EQ(U(5).bit(447), 0);
  EXPECT_THROW(U(5).bit(448), ecgen::RangeError);
}

TEST(MpInt, Add) {
  EXPECT_EQ(add(U(2), U(3)), U(5));
  const U x = U::from_hex("123456789abcdef0123456789");
  EXPECT_EQ(add(U(0), x), x);
  EXPECT_EQ(add(U(~0ull), U(1)), U::power_of_two(64));
  EXPECT_THROW(add(from_u128(~u128(0)), U2(1)), ecgen::RangeError);
}

TEST(MpInt, Sub) {
  EXPECT_EQ(sub(U(16), U(1)), U(15));
  const U x = U::from_hex("fedcba9876543210fedcba98765");
  EXPECT_EQ(sub(x, x), U(0));
  EXPECT_THROW(sub(U(5), U(7)), ecgen::UnderflowError);
  EXPECT_EQ(sub(U::power_of_two(64), U(1)), U(~0ull));
}

TEST(MpInt, Mul) {
  EXPECT_EQ(mul(U(2), U(3)), U(6));
  EXPECT_EQ(mul(U::from_hex("abcdef"), U(0)), U(0));
  EXPECT_EQ(mul(U(255), U(255)), U(65025));
  EXPECT_EQ(mul(U(~0ull), U(~0ull)), U::from_hex("fffffffffffffffe0000000000000001"));
  EXPECT_THROW(mul(U::power_of_two(300), U::power_of_two(200)), ecgen::RangeError);
}

TEST(MpInt, Mod) {
  EXPECT_EQ(mod(U(21), U(17)), U(4));
  EXPECT_EQ(mod(U(37), U(18)), U(1));
  EXPECT_EQ(mod(U(3), U(18)), U(3));
  EXPECT_THROW(mod(U(3), U(0)), ecgen::RangeError);
}

TEST(MpInt, FromBytes) {
  const std::uint8_t bytes[] = {0x01, 0x02, 0x03};
  EXPECT_EQ(U::from_bytes(bytes), U(0x010203));
}

// Two-limb values checked against native 128-bit arithmetic.
TEST(MpIntProperty, AgreesWithNative128) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20000; ++i) {
    const u128 a = (u128(rng()) << 64) | rng();
    const u128 b = (u128(rng() >> (rng() % 64)) << 64) | rng();
    const U2 A = from_u128(a), B = from_u128(b);
    ASSERT_EQ(A < B, a < b);
    ASSERT_EQ(A == B, a == b);
    if (a >= b) {
      ASSERT_EQ(to_u128(sub(A, B)), a - b);
    } else {
      ASSERT_THROW(sub(A, B), ecgen::UnderflowError);
    }
    if (a + b >= a) {
      ASSERT_EQ(to_u128(add(A, B)), a + b);
    } else {
      ASSERT_THROW(add(A, B), ecgen::RangeError);
    }
    const std::uint64_t lo_a = static_cast<std::uint64_t>(a), lo_b = static_cast<std::uint64_t>(b);
    ASSERT_EQ(to_u128(mul(U2(lo_a), U2(lo_b))), u128(lo_a) * lo_b);
    if (b != 0) {
      ASSERT_EQ(to_u128(mod(A, B)), a % b);
    }
    ASSERT_EQ(A.to_hex().size(), std::max<std::size_t>(1, (A.bit_length() + 3) / 4));
  }
}

TEST(MpIntProperty, Invariants) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 5000; ++i) {
    const U a = random_bits(rng, 1 + rng() % 200);
    const U b = random_bits(rng, 1 + rng() % 200);
    const U c = random_bits(rng, 1 + rng() % 200);

    const std::size_t w = 1 + a.hex_digits() + rng() % 4;
    ASSERT_EQ(U::from_hex(a.to_hex(w)), a);

    const U& hi = a < b ? b : a;
    const U& lo = a < b ? a : b;
    ASSERT_EQ(add(sub(hi, lo), lo), hi);
    ASSERT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));

    bool threw = false;
    try {
      (void)sub(a, b);
    } catch (const ecgen::UnderflowError&) {
      threw = true;
    }
    ASSERT_EQ(threw, ecgen::compare(a, b) == std::strong_ordering::less);

    const std::size_t len = a.bit_length();
    if (len > 0) {
      ASSERT_EQ(a.bit(len - 1), 1);
    }
    for (std::size_t j = len; j < U::capacity_bits; j += 7) ASSERT_EQ(a.bit(j), 0);
  }
}
