#pragma once

// Curve files shipped with the library. The text is kept byte-identical to
// data/*.curve; a unit test enforces that.

#include <array>
#include <string_view>

namespace ecgen {

struct BundledCurve {
  std::string_view name;
  std::string_view text;
};

inline constexpr BundledCurve kP192Curve{"p192", R"(# NIST P-192: y^2 = x^3 - 3x + b over p = 2^192 - 2^64 - 1
name=p192
p=fffffffffffffffffffffffffffffffeffffffffffffffff
a=fffffffffffffffffffffffffffffffefffffffffffffffc
b=64210519e59c80e70fa7e9ab72243049feb8deecc146b9b1
gx=188da80eb03090f67cbf20eb43a18800f4ff0afd82ff1012
gy=07192b95ffc8da78631011ed6b24cdd573f977a11e794811
n=ffffffffffffffffffffffff99def836146bc9b1b4d22831
h=1
)"};

inline constexpr BundledCurve kSmoke17Curve{"smoke17", R"(# y^2 = x^3 + 2x + 2 over GF(17); 19 points, G = (5,1) generates all of them.
name=smoke17
p=11
a=2
b=2
gx=5
gy=1
n=13
h=1
)"};

inline constexpr std::array kBundledCurves{kP192Curve, kSmoke17Curve};

}  // namespace ecgen
