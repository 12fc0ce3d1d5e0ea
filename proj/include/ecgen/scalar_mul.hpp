#pragma once

// Scalar multiplication k * P.
//
// ladder() is the Montgomery ladder: it keeps (P1, P2) with P2 - P1 = P and
// performs exactly one addition and one doubling per scalar bit below the
// leading one. double_and_add() is the textbook left-to-right method and
// serves as an independent reference.

#include <cstddef>

#include "ecgen/curve.hpp"
#include "ecgen/error.hpp"
#include "ecgen/mpint.hpp"

namespace ecgen {

// Instrumentation for ladder(); counts exclude the initial P2 = 2P.
struct LadderStats {
  std::size_t steps = 0;
  std::size_t additions = 0;
  std::size_t doublings = 0;
};

template <std::size_t N, std::size_t K>
AffinePoint<N> ladder(const MpInt<K>& k, const AffinePoint<N>& P, const Curve<N>& curve,
                      LadderStats* stats = nullptr) {
  curve.require_on_curve(P);
  const std::size_t len = k.bit_length();
  if (len == 0 || P.is_infinity()) return AffinePoint<N>::infinity();

  AffinePoint<N> p1 = P;
  AffinePoint<N> p2 = curve.dbl(P, Validate::no);
  for (std::size_t i = len - 1; i-- > 0;) {
    auto count = [stats](std::size_t LadderStats::*field) {
      if (stats) ++(stats->*field);
    };
    if (k.bit(i)) {
      p1 = curve.add(p1, p2, Validate::no);
      count(&LadderStats::additions);
      p2 = curve.dbl(p2, Validate::no);
      count(&LadderStats::doublings);
    } else {
      p2 = curve.add(p2, p1, Validate::no);
      count(&LadderStats::additions);
      p1 = curve.dbl(p1, Validate::no);
      count(&LadderStats::doublings);
    }
    count(&LadderStats::steps);
  }
  return p1;
}

template <std::size_t N, std::size_t K>
AffinePoint<N> double_and_add(const MpInt<K>& k, const AffinePoint<N>& P,
                              const Curve<N>& curve) {
  curve.require_on_curve(P);
  AffinePoint<N> q = AffinePoint<N>::infinity();
  for (std::size_t i = k.bit_length(); i-- > 0;) {
    q = curve.dbl(q, Validate::no);
    if (k.bit(i)) q = curve.add(q, P, Validate::no);
  }
  return q;
}

}  // namespace ecgen
