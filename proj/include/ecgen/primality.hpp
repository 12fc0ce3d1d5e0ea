#pragma once

// Miller-Rabin probable-prime test with fixed small-prime bases. Used by the
// command-line `check` verb; the arithmetic layers trust p and n as given.

#include <array>
#include <cstddef>
#include <cstdint>

#include "ecgen/field.hpp"
#include "ecgen/mpint.hpp"

namespace ecgen {

template <std::size_t N>
bool is_probable_prime(const MpInt<N>& n) {
  static constexpr std::array<std::uint64_t, 24> kBases{
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  if (n < MpInt<N>(2)) return false;
  for (std::uint64_t b : kBases) {
    if (n == MpInt<N>(b)) return true;
    if (mod(n, MpInt<N>(b)).is_zero()) return false;
  }

  // n - 1 = d * 2^s with d odd
  const MpInt<N> n_minus_1 = sub(n, MpInt<N>(1));
  MpInt<N> d = n_minus_1;
  std::size_t s = 0;
  while (!d.is_odd()) {
    detail::shr1(d);
    ++s;
  }

  const ModulusPtr<N> m = make_modulus(n);
  const FieldElement<N> one(MpInt<N>(1), m);
  const FieldElement<N> minus_one(n_minus_1, m);
  for (std::uint64_t b : kBases) {
    FieldElement<N> x = fpow(FieldElement<N>(MpInt<N>(b), m), d);
    if (x == one || x == minus_one) continue;
    bool witness = true;
    for (std::size_t r = 1; r < s && witness; ++r) {
      x = fmul(x, x);
      if (x == minus_one) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace ecgen
