#pragma once

// Prime-field arithmetic over GF(p) on top of MpInt.
//
// A Modulus is an immutable, shareable context; every FieldElement keeps a
// reference to the one it was reduced against and mixing contexts throws
// ContextError. Elements are always canonical residues in [0, p).

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <utility>

#include "ecgen/error.hpp"
#include "ecgen/mpint.hpp"

namespace ecgen {

template <std::size_t N>
class Modulus {
 public:
  // p = 2^192 - 2^64 - 1
  static MpInt<N> p192() {
    MpInt<N> p;
    p.limb(0) = ~Limb(0);
    p.limb(1) = ~Limb(0) - 1;
    p.limb(2) = ~Limb(0);
    return p;
  }

  explicit Modulus(const MpInt<N>& p) : p_(p), bits_(p.bit_length()) {
    if (p < MpInt<N>(2)) throw RangeError("modulus must be at least 2");
    if (2 * bits_ + kLimbBits > MpInt<N>::capacity_bits) {
      throw RangeError("modulus of " + std::to_string(bits_) +
                       " bits is too wide for this integer capacity");
    }
    if constexpr (N >= 6) fast_p192_ = (p == p192());
  }

  const MpInt<N>& value() const { return p_; }
  std::size_t bits() const { return bits_; }
  bool uses_p192_reduction() const { return fast_p192_; }

  // x mod p for any representable x.
  MpInt<N> reduce(const MpInt<N>& x) const {
    if (x < p_) return x;
    if (fast_p192_ && x.bit_length() <= 384) return reduce_p192(x);
    return reduce_generic(x);
  }

  // Shift-and-subtract remainder, independent of the shape of p.
  MpInt<N> reduce_generic(const MpInt<N>& x) const {
    MpInt<N> r;
    for (std::size_t i = x.bit_length(); i-- > 0;) {
      detail::shl1(r);
      r.limb(0) |= static_cast<Limb>(x.bit(i));
      if (r >= p_) detail::sub_borrow(r, r, p_);
    }
    return r;
  }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.p_ == b.p_; }

 private:
  // Folding with 2^192 = 2^64 + 1 (mod p). Requires x < 2^384.
  MpInt<N> reduce_p192(const MpInt<N>& x) const {
    const Limb c0 = x.limb(0), c1 = x.limb(1), c2 = x.limb(2);
    const Limb c3 = x.limb(3), c4 = x.limb(4), c5 = x.limb(5);
    using u128 = unsigned __int128;
    u128 acc = u128(c0) + c3 + c5;
    MpInt<N> r;
    r.limb(0) = static_cast<Limb>(acc);
    acc = (acc >> 64) + c1 + c3 + c4 + c5;
    r.limb(1) = static_cast<Limb>(acc);
    acc = (acc >> 64) + c2 + c4 + c5;
    r.limb(2) = static_cast<Limb>(acc);
    Limb top = static_cast<Limb>(acc >> 64);
    while (top != 0) {
      acc = u128(r.limb(0)) + top;
      r.limb(0) = static_cast<Limb>(acc);
      acc = (acc >> 64) + r.limb(1) + top;
      r.limb(1) = static_cast<Limb>(acc);
      acc = (acc >> 64) + r.limb(2);
      r.limb(2) = static_cast<Limb>(acc);
      top = static_cast<Limb>(acc >> 64);
    }
    while (r >= p_) detail::sub_borrow(r, r, p_);
    return r;
  }

  MpInt<N> p_;
  std::size_t bits_;
  bool fast_p192_ = false;
};

template <std::size_t N>
using ModulusPtr = std::shared_ptr<const Modulus<N>>;

template <std::size_t N>
ModulusPtr<N> make_modulus(const MpInt<N>& p) {
  return std::make_shared<const Modulus<N>>(p);
}

template <std::size_t N>
class FieldElement {
 public:
  // `value` must already be a canonical residue; use reduce() otherwise.
  FieldElement(const MpInt<N>& value, ModulusPtr<N> m) : value_(value), mod_(std::move(m)) {
#ifdef ECGEN_CHECK_CANONICAL
    if (!mod_ || !(value_ < mod_->value())) throw std::logic_error("non-canonical field element");
#endif
  }

  const MpInt<N>& value() const { return value_; }
  const Modulus<N>& modulus() const { return *mod_; }
  const ModulusPtr<N>& modulus_ptr() const { return mod_; }
  bool is_zero() const { return value_.is_zero(); }

  bool same_field(const FieldElement& o) const {
    return mod_ == o.mod_ || *mod_ == *o.mod_;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.same_field(b);
  }

 private:
  MpInt<N> value_;
  ModulusPtr<N> mod_;
};

template <std::size_t N>
FieldElement<N> reduce(const MpInt<N>& x, const ModulusPtr<N>& m) {
  return FieldElement<N>(m->reduce(x), m);
}

namespace detail {

template <std::size_t N>
void require_same_field(const FieldElement<N>& a, const FieldElement<N>& b) {
  if (!a.same_field(b)) throw ContextError("field elements have different moduli");
}

}  // namespace detail

template <std::size_t N>
FieldElement<N> fadd(const FieldElement<N>& a, const FieldElement<N>& b) {
  detail::require_same_field(a, b);
  const MpInt<N>& p = a.modulus().value();
  MpInt<N> r;
  detail::add_carry(r, a.value(), b.value());  // < 2p, fits by the capacity rule
  if (r >= p) detail::sub_borrow(r, r, p);
  return FieldElement<N>(r, a.modulus_ptr());
}

template <std::size_t N>
FieldElement<N> fsub(const FieldElement<N>& a, const FieldElement<N>& b) {
  detail::require_same_field(a, b);
  MpInt<N> lhs = a.value();
  if (lhs < b.value()) detail::add_carry(lhs, lhs, a.modulus().value());
  return FieldElement<N>(sub(lhs, b.value()), a.modulus_ptr());
}

template <std::size_t N>
FieldElement<N> fmul(const FieldElement<N>& a, const FieldElement<N>& b) {
  detail::require_same_field(a, b);
  return FieldElement<N>(a.modulus().reduce(mul(a.value(), b.value())), a.modulus_ptr());
}

template <std::size_t N>
FieldElement<N> fneg(const FieldElement<N>& a) {
  if (a.is_zero()) return a;
  return FieldElement<N>(sub(a.modulus().value(), a.value()), a.modulus_ptr());
}

// a^e by left-to-right square-and-multiply.
template <std::size_t N, std::size_t K>
FieldElement<N> fpow(const FieldElement<N>& a, const MpInt<K>& e) {
  FieldElement<N> r(MpInt<N>(1), a.modulus_ptr());
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    r = fmul(r, r);
    if (e.bit(i)) r = fmul(r, a);
  }
  return r;
}

// Inverse by Fermat's little theorem, a^(p-2). Valid only for prime p.
template <std::size_t N>
FieldElement<N> finv_fermat(const FieldElement<N>& a) {
  if (a.is_zero()) throw NoInverseError("zero has no multiplicative inverse");
  return fpow(a, sub(a.modulus().value(), MpInt<N>(2)));
}

// Inverse by the binary extended Euclidean algorithm (odd p).
template <std::size_t N>
FieldElement<N> finv(const FieldElement<N>& a) {
  if (a.is_zero()) throw NoInverseError("zero has no multiplicative inverse");
  const MpInt<N>& p = a.modulus().value();
  if (!p.is_odd()) return finv_fermat(a);

  // Invariants: x1 * a = u, x2 * a = v (mod p).
  MpInt<N> u = a.value(), v = p;
  MpInt<N> x1(1), x2;
  const MpInt<N> one(1);
  auto halve = [&p](MpInt<N>& x) {
    Limb top = 0;
    if (x.is_odd()) top = detail::add_carry(x, x, p);
    detail::shr1(x, top);
  };
  while (u != one && v != one) {
    while (!u.is_odd()) {
      detail::shr1(u);
      halve(x1);
    }
    while (!v.is_odd()) {
      detail::shr1(v);
      halve(x2);
    }
    if (u >= v) {
      detail::sub_borrow(u, u, v);
      if (x1 < x2) detail::add_carry(x1, x1, p);
      detail::sub_borrow(x1, x1, x2);
    } else {
      detail::sub_borrow(v, v, u);
      if (x2 < x1) detail::add_carry(x2, x2, p);
      detail::sub_borrow(x2, x2, x1);
    }
    if (u.is_zero() || v.is_zero()) throw NoInverseError("element is not invertible");
  }
  return FieldElement<N>(u == one ? x1 : x2, a.modulus_ptr());
}

template <std::size_t N>
FieldElement<N> operator+(const FieldElement<N>& a, const FieldElement<N>& b) {
  return fadd(a, b);
}
template <std::size_t N>
FieldElement<N> operator-(const FieldElement<N>& a, const FieldElement<N>& b) {
  return fsub(a, b);
}
template <std::size_t N>
FieldElement<N> operator*(const FieldElement<N>& a, const FieldElement<N>& b) {
  return fmul(a, b);
}
template <std::size_t N>
FieldElement<N> operator-(const FieldElement<N>& a) {
  return fneg(a);
}

}  // namespace ecgen
