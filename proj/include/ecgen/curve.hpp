#pragma once

// Affine short-Weierstrass curves y^2 = x^3 + ax + b over GF(p).
//
// The group law is total: the point at infinity is an ordinary value and
// every exceptional input (identity operand, P = Q, P = -Q, vertical
// tangent) is dispatched explicitly.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "ecgen/error.hpp"
#include "ecgen/field.hpp"
#include "ecgen/mpint.hpp"

namespace ecgen {

template <std::size_t N>
class AffinePoint {
 public:
  static AffinePoint infinity() { return AffinePoint(); }
  static AffinePoint finite(FieldElement<N> x, FieldElement<N> y) {
    if (!x.same_field(y)) throw ContextError("point coordinates have different moduli");
    return AffinePoint(Coordinates{std::move(x), std::move(y)});
  }

  bool is_infinity() const { return !xy_.has_value(); }
  // Precondition: !is_infinity().
  const FieldElement<N>& x() const { return xy_->x; }
  const FieldElement<N>& y() const { return xy_->y; }

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
  }

 private:
  struct Coordinates {
    FieldElement<N> x;
    FieldElement<N> y;
  };

  AffinePoint() = default;
  explicit AffinePoint(Coordinates xy) : xy_(std::move(xy)) {}

  std::optional<Coordinates> xy_;
};

// Whether group operations re-check that their operands lie on the curve.
enum class Validate : bool { no = false, yes = true };

template <std::size_t N>
class Curve {
 public:
  using Int = MpInt<N>;
  using Element = FieldElement<N>;
  using Point = AffinePoint<N>;

  // Throws ValidationError naming the first violated invariant:
  // a or b not reduced, singular curve, G at infinity or off the curve, n < 2.
  Curve(std::string name, const Int& p, const Int& a, const Int& b, const Int& gx,
        const Int& gy, const Int& n, const Int& h)
      : name_(std::move(name)),
        mod_(make_modulus(p)),
        a_(canonical(a, "a")),
        b_(canonical(b, "b")),
        g_(Point::finite(canonical(gx, "gx"), canonical(gy, "gy"))),
        n_(n),
        h_(h) {
    const Element four(mod_->reduce(Int(4)), mod_);
    const Element twenty_seven(mod_->reduce(Int(27)), mod_);
    if ((four * a_ * a_ * a_ + twenty_seven * b_ * b_).is_zero()) {
      throw ValidationError("curve is singular (4a^3 + 27b^2 = 0)");
    }
    if (!on_curve(g_)) throw ValidationError("G not on curve");
    if (n_ < Int(2)) throw ValidationError("order n must be at least 2");
  }

  const std::string& name() const { return name_; }
  const Modulus<N>& modulus() const { return *mod_; }
  const ModulusPtr<N>& modulus_ptr() const { return mod_; }
  const Int& p() const { return mod_->value(); }
  const Element& a() const { return a_; }
  const Element& b() const { return b_; }
  const Point& generator() const { return g_; }
  const Int& order() const { return n_; }
  const Int& cofactor() const { return h_; }

  // Throws DomainError when v >= p.
  Element element(const Int& v) const {
    if (!(v < mod_->value())) throw DomainError("coordinate is not reduced modulo p");
    return Element(v, mod_);
  }

  // Affine point from integer coordinates; both must be below p.
  // Membership is not checked here, see on_curve().
  Point point(const Int& x, const Int& y) const {
    return Point::finite(element(x), element(y));
  }

  bool on_curve(const Point& P) const {
    if (P.is_infinity()) return true;
    if (!belongs(P)) return false;
    const Element& x = P.x();
    return P.y() * P.y() == (x * x + a_) * x + b_;
  }

  // Throws ContextError for a foreign point, DomainError if off the curve.
  void require_on_curve(const Point& P) const { require(P, Validate::yes); }

  Point negate(const Point& P) const {
    if (P.is_infinity()) return P;
    return Point::finite(P.x(), fneg(P.y()));
  }

  Point add(const Point& P, const Point& Q, Validate check = Validate::yes) const {
    require(P, check);
    require(Q, check);
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (P.x() == Q.x()) {
      if (P.y() == fneg(Q.y())) return Point::infinity();
      return dbl(P, Validate::no);
    }
    const Element s = (Q.y() - P.y()) * finv(Q.x() - P.x());
    const Element xr = s * s - P.x() - Q.x();
    return Point::finite(xr, s * (P.x() - xr) - P.y());
  }

  Point dbl(const Point& P, Validate check = Validate::yes) const {
    require(P, check);
    if (P.is_infinity() || P.y().is_zero()) return Point::infinity();
    const Element& x = P.x();
    const Element x2 = x * x;
    const Element s = (x2 + x2 + x2 + a_) * finv(P.y() + P.y());
    const Element xr = s * s - x - x;
    return Point::finite(xr, s * (x - xr) - P.y());
  }

 private:
  Element canonical(const Int& v, const char* what) const {
    if (!(v < mod_->value())) {
      throw ValidationError(std::string(what) + " is not reduced modulo p");
    }
    return Element(v, mod_);
  }

  bool belongs(const Point& P) const {
    return P.x().same_field(a_) && P.y().same_field(a_);
  }

  void require(const Point& P, Validate check) const {
    if (P.is_infinity()) return;
    if (!belongs(P)) throw ContextError("point belongs to a different field than curve " + name_);
    if (check == Validate::yes && !on_curve(P)) throw DomainError("point not on curve");
  }

  std::string name_;
  ModulusPtr<N> mod_;
  Element a_;
  Element b_;
  Point g_;
  Int n_;
  Int h_;
};

}  // namespace ecgen
