#pragma once

// Curve parameter files: one "key=value" per line, '#' comments, keys
// name, p, a, b, gx, gy, n, h (all but name in hex). Parsed curves are fully
// validated, including n * G = O.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ecgen/bundled_curves.hpp"
#include "ecgen/curve.hpp"
#include "ecgen/error.hpp"
#include "ecgen/mpint.hpp"
#include "ecgen/scalar_mul.hpp"

namespace ecgen {

inline constexpr std::array<std::string_view, 8> kCurveFileKeys{"name", "p",  "a", "b",
                                                                "gx",   "gy", "n", "h"};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

template <std::size_t N>
Curve<N> parse_curve_file(std::string_view text) {
  struct Entry {
    std::string value;
    std::size_t line;
  };
  std::map<std::string, Entry, std::less<>> entries;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (std::find(kCurveFileKeys.begin(), kCurveFileKeys.end(), key) == kCurveFileKeys.end()) {
      throw FormatError("line " + std::to_string(line_no) + ": unknown key " + key);
    }
    if (!entries.emplace(key, Entry{std::string(value), line_no}).second) {
      throw FormatError("duplicate key " + key);
    }
  }
  for (std::string_view key : kCurveFileKeys) {
    if (entries.find(key) == entries.end()) throw FormatError("missing key " + std::string(key));
  }

  auto number = [&entries](std::string_view key) {
    const Entry& e = entries.find(key)->second;
    try {
      return MpInt<N>::from_hex(e.value);
    } catch (const Error& ex) {
      throw ParseError("line " + std::to_string(e.line) + ": " + std::string(key) + ": " +
                       ex.what());
    }
  };
  const std::string& name = entries.find("name")->second.value;
  if (name.empty()) throw FormatError("empty curve name");

  const MpInt<N> p = number("p");
  const MpInt<N> a = number("a"), b = number("b");
  const MpInt<N> gx = number("gx"), gy = number("gy");
  const MpInt<N> n = number("n"), h = number("h");

  std::optional<Curve<N>> curve;
  try {
    curve.emplace(name, p, a, b, gx, gy, n, h);
  } catch (const RangeError& ex) {
    throw ValidationError(ex.what());
  }
  if (!ladder(n, curve->generator(), *curve).is_infinity()) {
    throw ValidationError("n * G is not the point at infinity");
  }
  return *std::move(curve);
}

// Inverse of parse_curve_file; numbers use the curve's fixed hex width.
template <std::size_t N>
std::string format_curve_file(const Curve<N>& curve) {
  const std::size_t w = (curve.modulus().bits() + 3) / 4;
  auto hex = [w](const MpInt<N>& v) { return v.to_hex(std::max(w, v.hex_digits())); };
  std::string out;
  out += "name=" + curve.name() + "\n";
  out += "p=" + hex(curve.p()) + "\n";
  out += "a=" + hex(curve.a().value()) + "\n";
  out += "b=" + hex(curve.b().value()) + "\n";
  out += "gx=" + hex(curve.generator().x().value()) + "\n";
  out += "gy=" + hex(curve.generator().y().value()) + "\n";
  out += "n=" + hex(curve.order()) + "\n";
  out += "h=" + hex(curve.cofactor()) + "\n";
  return out;
}

// Throws FormatError for an unknown name.
template <std::size_t N>
Curve<N> bundled_curve(std::string_view name) {
  for (const BundledCurve& c : kBundledCurves) {
    if (c.name == name) return parse_curve_file<N>(c.text);
  }
  throw FormatError("unknown curve " + std::string(name));
}

}  // namespace ecgen
