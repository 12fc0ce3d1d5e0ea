#pragma once

// Key generation: private scalar d in [1, n-1], public point Q = d * G.

#include <algorithm>
#include <array>
#include <cerrno>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <sys/random.h>

#include "ecgen/curve.hpp"
#include "ecgen/error.hpp"
#include "ecgen/mpint.hpp"
#include "ecgen/point_format.hpp"
#include "ecgen/scalar_mul.hpp"

namespace ecgen {

// Anything that can fill a byte buffer with random data.
template <class S>
concept EntropySource = requires(S& s, std::span<std::uint8_t> out) { s.fill(out); };

// The operating system CSPRNG (getrandom(2)).
class SystemEntropy {
 public:
  void fill(std::span<std::uint8_t> out) {
    std::size_t done = 0;
    while (done < out.size()) {
      const ssize_t got = ::getrandom(out.data() + done, out.size() - done, 0);
      if (got < 0) {
        if (errno == EINTR) continue;
        throw RandomnessError("getrandom failed: errno " + std::to_string(errno));
      }
      done += static_cast<std::size_t>(got);
    }
  }
};

// Reproducible test mode: d = (seed mod (n - 1)) + 1. Not uniform and not
// secret; never use it for real keys.
template <std::size_t N>
struct DeterministicSeed {
  MpInt<N> seed;
};

// Rejection sampling gives up after this many draws. With n > 2^(bits-1)
// each draw is accepted with probability > 1/2.
inline constexpr std::size_t kMaxSamplingAttempts = 256;

template <std::size_t N, EntropySource S>
MpInt<N> random_scalar(const MpInt<N>& n, S& entropy, std::size_t* attempts = nullptr) {
  if (n < MpInt<N>(2)) throw RangeError("group order must be at least 2");
  const std::size_t bits = n.bit_length();
  const std::size_t nbytes = (bits + 7) / 8;
  const unsigned excess = static_cast<unsigned>(8 * nbytes - bits);
  std::vector<std::uint8_t> buf(nbytes);
  for (std::size_t i = 1; i <= kMaxSamplingAttempts; ++i) {
    entropy.fill(buf);
    buf[0] &= static_cast<std::uint8_t>(0xffu >> excess);
    const MpInt<N> d = MpInt<N>::from_bytes(buf);
    if (!d.is_zero() && d < n) {
      if (attempts) *attempts = i;
      return d;
    }
  }
  throw RandomnessError("rejection sampling did not produce a scalar in [1, n-1]");
}

template <std::size_t N>
MpInt<N> random_scalar(const MpInt<N>& n, const DeterministicSeed<N>& seed) {
  if (n < MpInt<N>(2)) throw RangeError("group order must be at least 2");
  const MpInt<N> range = sub(n, MpInt<N>(1));
  return add(mod(seed.seed, range), MpInt<N>(1));
}

template <std::size_t N>
struct KeyPair {
  MpInt<N> d;
  AffinePoint<N> Q;
  std::string curve;
};

namespace detail {

template <std::size_t N>
KeyPair<N> derive_keypair(const Curve<N>& curve, const MpInt<N>& d) {
  return KeyPair<N>{d, ladder(d, curve.generator(), curve), curve.name()};
}

}  // namespace detail

template <std::size_t N, EntropySource S>
KeyPair<N> generate_keypair(const Curve<N>& curve, S& entropy) {
  return detail::derive_keypair(curve, random_scalar(curve.order(), entropy));
}

template <std::size_t N>
KeyPair<N> generate_keypair(const Curve<N>& curve, const DeterministicSeed<N>& seed) {
  return detail::derive_keypair(curve, random_scalar(curve.order(), seed));
}

// Q != O, Q on the curve, and n * Q = O.
template <std::size_t N>
bool validate_public_key(const AffinePoint<N>& Q, const Curve<N>& curve) {
  if (Q.is_infinity() || !curve.on_curve(Q)) return false;
  return ladder(curve.order(), Q, curve).is_infinity();
}

// "private=<hex>\npublic=<x>,<y>\n"; the private key uses the field width,
// widened only when n has more hex digits than p.
template <std::size_t N>
std::string format_keypair(const KeyPair<N>& kp, const Curve<N>& curve) {
  const std::size_t width = std::max(hex_width(curve), curve.order().hex_digits());
  return "private=" + kp.d.to_hex(width) + "\npublic=" + format_point(kp.Q, curve) + "\n";
}

}  // namespace ecgen
