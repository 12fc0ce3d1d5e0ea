#pragma once

// Canonical text forms: fixed-width lowercase hex per curve, points as
// "x,y" or the literal "infinity".

#include <cstddef>
#include <string>
#include <string_view>

#include "ecgen/curve.hpp"
#include "ecgen/error.hpp"
#include "ecgen/mpint.hpp"

namespace ecgen {

inline constexpr std::string_view kInfinityText = "infinity";

// ceil(bits(p) / 4)
template <std::size_t N>
std::size_t hex_width(const Curve<N>& curve) {
  return (curve.modulus().bits() + 3) / 4;
}

template <std::size_t N>
std::string format_point(const AffinePoint<N>& P, const Curve<N>& curve) {
  if (P.is_infinity()) return std::string(kInfinityText);
  const std::size_t w = hex_width(curve);
  return P.x().value().to_hex(w) + "," + P.y().value().to_hex(w);
}

// Parses "x,y" or "infinity". Coordinates must be below p (DomainError);
// membership is left to the caller.
template <std::size_t N>
AffinePoint<N> parse_point(std::string_view text, const Curve<N>& curve) {
  if (text == kInfinityText) return AffinePoint<N>::infinity();
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("point must be \"x,y\" or \"infinity\": " + std::string(text));
  }
  return curve.point(MpInt<N>::from_hex(text.substr(0, comma)),
                     MpInt<N>::from_hex(text.substr(comma + 1)));
}

}  // namespace ecgen
