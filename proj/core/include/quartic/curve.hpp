#pragma once

#include <vector>

#include "quartic/exact.hpp"

namespace quartic {

/// Point on a curve in affine coordinates, or the point at infinity.
struct CurvePoint {
  BigRat x;
  BigRat y;
  bool infinity = false;

  static CurvePoint at_infinity() { return CurvePoint{BigRat(), BigRat(), true}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

/// y^2 = x^3 + f x^2 + g x + h over the rationals, with the chord-tangent
/// group law. Construction rejects singular models, so every instance has
/// nonzero discriminant.
class WeierstrassCurve {
 public:
  /// Throws SingularCurve when the discriminant vanishes.
  WeierstrassCurve(BigRat f, BigRat g, BigRat h);

  const BigRat& f() const noexcept { return f_; }
  const BigRat& g() const noexcept { return g_; }
  const BigRat& h() const noexcept { return h_; }

  /// 18fgh - 4f^3h + f^2g^2 - 4g^3 - 27h^2, cached at construction.
  const BigRat& discriminant() const noexcept { return disc_; }

  /// x^3 + f x^2 + g x + h, evaluated exactly.
  BigRat cubic_at(const BigRat& x) const;

  bool contains(const CurvePoint& p) const;

  /// Group law. Throws NotOnCurve when an operand is off the curve.
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint negate(const CurvePoint& p) const;
  /// k*p for k >= 0 by repeated doubling; k == 0 gives infinity.
  CurvePoint scalar_mul(std::uint64_t k, const CurvePoint& p) const;

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.f_ == b.f_ && a.g_ == b.g_ && a.h_ == b.h_;
  }

 private:
  CurvePoint double_point(const CurvePoint& p) const;

  BigRat f_, g_, h_;
  BigRat disc_;
};

/// Discriminant of x^3 + f x^2 + g x + h without constructing a curve,
/// so callers can test singularity before committing.
BigRat discriminant(const BigRat& f, const BigRat& g, const BigRat& h);

/// Smallest u >= 1 such that (u^2 f, u^4 g, u^6 h) is integral, of the form
/// u = prod q^e over primes dividing the denominators.
BigInt integral_unit(const BigRat& f, const BigRat& g, const BigRat& h);

/// The model (u^2 f, u^4 g, u^6 h) with u = integral_unit(...). Isomorphic to
/// the input over the rationals; points map via map_point_to_integral.
WeierstrassCurve integral_model(const WeierstrassCurve& curve, BigInt* unit_out = nullptr);

/// (x, y) -> (u^2 x, u^3 y); infinity maps to infinity.
CurvePoint map_point_to_integral(const CurvePoint& p, const BigInt& unit);

}  // namespace quartic
