#include <gtest/gtest.h>

#include <random>

#include "ecgen/curve_file.hpp"
#include "ecgen/scalar_mul.hpp"
#include "small_curve_oracle.hpp"

using namespace ecgen;
using U = MpInt<7>;
using C = Curve<7>;
using P = AffinePoint<7>;

namespace {

const C& smoke17() {
  static const C c = bundled_curve<7>("smoke17");
  return c;
}
const C& p192() {
  static const C c = bundled_curve<7>("p192");
  return c;
}

P to_point(const C& c, const oracle::Pt& pt) {
  if (!pt) return P::infinity();
  return c.point(U(static_cast<std::uint64_t>(pt->first)),
                 U(static_cast<std::uint64_t>(pt->second)));
}

U random_scalar_bits(std::mt19937_64& rng, std::size_t bits) {
  U r;
  for (std::size_t i = 0; i * 64 < bits; ++i) r.limb(i) = rng();
  return r;
}

}  // namespace

TEST(Ladder, SmallCurveExamples) {
  const C& c = smoke17();
  const P g = c.generator();
  EXPECT_EQ(ladder(U(9), g, c), c.point(U(7), U(6)));
  EXPECT_EQ(ladder(U(1), g, c), g);
  EXPECT_EQ(ladder(U(19), g, c), P::infinity());
  EXPECT_EQ(ladder(U(0), g, c), P::infinity());
  EXPECT_EQ(ladder(U(5), P::infinity(), c), P::infinity());
}

TEST(DoubleAndAdd, SmallCurveExamples) {
  const C& c = smoke17();
  const P g = c.generator();
  EXPECT_EQ(double_and_add(U(9), g, c), c.point(U(7), U(6)));
  EXPECT_EQ(double_and_add(U(0), g, c), P::infinity());
  EXPECT_EQ(double_and_add(U(2), g, c), c.dbl(g));
}

TEST(Ladder, RejectsOffCurvePoint) {
  const C& c = smoke17();
  EXPECT_THROW(ladder(U(3), c.point(U(5), U(2)), c), DomainError);
  EXPECT_THROW(double_and_add(U(3), c.point(U(5), U(2)), c), DomainError);
}

// Both methods against repeated addition in the brute-force oracle.
TEST(Ladder, ExhaustiveSmallCurve) {
  const C& c = smoke17();
  for (const auto& raw : oracle::kSmoke17.enumerate()) {
    const P pt = to_point(c, raw);
    for (std::uint64_t k = 0; k <= 38; ++k) {
      const P expected = to_point(c, oracle::kSmoke17.times(k, raw));
      ASSERT_EQ(ladder(U(k), pt, c), expected) << k;
      ASSERT_EQ(double_and_add(U(k), pt, c), expected) << k;
    }
  }
}

TEST(Ladder, P192KnownMultiples) {
  const C& c = p192();
  const P g = c.generator();
  // 2G and the 160-bit test scalar times G from an arbitrary-precision reference computation.
  EXPECT_EQ(ladder(U(2), g, c),
            c.point(U::from_hex("dafebf5828783f2ad35534631588a3f629a70fb16982a888"),
                    U::from_hex("dd6bda0d993da0fa46b27bbc141b868f59331afa5c7e93ab")));
  const U test_k160 = U::from_hex("800000000000001000000000000400000000046b");
  const P expected = c.point(U::from_hex("7534fb292140abab97bf5fe2af87bdcff62feb182f10f3cd"),
                             U::from_hex("92ad7a4b50d99eefd1b2acda368bd85695f7627533e60c9b"));
  EXPECT_EQ(ladder(test_k160, g, c), expected);
  EXPECT_EQ(double_and_add(test_k160, g, c), expected);
  EXPECT_EQ(ladder(c.order(), g, c), P::infinity());
  EXPECT_EQ(ladder(sub(c.order(), U(1)), g, c), c.negate(g));
}

TEST(LadderProperty, MatchesDoubleAndAddOnP192) {
  const C& c = p192();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const U k = random_scalar_bits(rng, 192);
    ASSERT_EQ(ladder(k, c.generator(), c), double_and_add(k, c.generator(), c));
  }
}

TEST(LadderProperty, Linearity) {
  std::mt19937_64 rng(6);
  for (const C* c : {&smoke17(), &p192()}) {
    for (int i = 0; i < 20; ++i) {
      const U k1 = random_scalar_bits(rng, 190), k2 = random_scalar_bits(rng, 190);
      const P g = c->generator();
      ASSERT_EQ(ladder(add(k1, k2), g, *c), c->add(ladder(k1, g, *c), ladder(k2, g, *c)));
    }
  }
}

TEST(LadderProperty, Periodicity) {
  const C& c = smoke17();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const U k = random_scalar_bits(rng, 64);
    ASSERT_EQ(ladder(add(k, c.order()), c.generator(), c), ladder(k, c.generator(), c));
  }
}

TEST(LadderProperty, UniformStepCount) {
  const C& c = smoke17();
  for (std::uint64_t k = 2; k < 1024; ++k) {
    LadderStats stats;
    ladder(U(k), c.generator(), c, &stats);
    const std::size_t expected = U(k).bit_length() - 1;
    ASSERT_EQ(stats.steps, expected);
    ASSERT_EQ(stats.additions, expected);
    ASSERT_EQ(stats.doublings, expected);
  }
  LadderStats stats;
  ladder(U(1), c.generator(), c, &stats);
  EXPECT_EQ(stats.steps, 0u);
}
