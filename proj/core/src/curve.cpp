#include "quartic/curve.hpp"

#include <utility>

#include "quartic/error.hpp"

namespace quartic {

BigRat discriminant(const BigRat& f, const BigRat& g, const BigRat& h) {
  // 18fgh - 4f^3h + f^2g^2 - 4g^3 - 27h^2
  BigRat f2 = f * f;
  BigRat g2 = g * g;
  return BigRat(18) * f * g * h - BigRat(4) * f2 * f * h + f2 * g2 -
         BigRat(4) * g2 * g - BigRat(27) * h * h;
}

WeierstrassCurve::WeierstrassCurve(BigRat f, BigRat g, BigRat h)
    : f_(std::move(f)),
      g_(std::move(g)),
      h_(std::move(h)),
      disc_(quartic::discriminant(f_, g_, h_)) {
  if (disc_.is_zero()) {
    raise(errc::singular_curve, "discriminant vanishes for f=" + f_.to_string() +
                                    ", g=" + g_.to_string() +
                                    ", h=" + h_.to_string());
  }
}

BigRat WeierstrassCurve::cubic_at(const BigRat& x) const {
  return ((x + f_) * x + g_) * x + h_;
}

bool WeierstrassCurve::contains(const CurvePoint& p) const {
  if (p.infinity) return true;
  return p.y * p.y == cubic_at(p.x);
}

CurvePoint WeierstrassCurve::negate(const CurvePoint& p) const {
  if (!contains(p)) raise(errc::not_on_curve, "negation operand is off the curve");
  if (p.infinity) return p;
  return CurvePoint{p.x, -p.y};
}

CurvePoint WeierstrassCurve::double_point(const CurvePoint& p) const {
  if (p.infinity) return p;
  if (p.y.is_zero()) return CurvePoint::at_infinity();  // 2-torsion
  BigRat lambda =
      (BigRat(3) * p.x * p.x + BigRat(2) * f_ * p.x + g_) / (BigRat(2) * p.y);
  BigRat x3 = lambda * lambda - f_ - p.x - p.x;
  BigRat y3 = lambda * (p.x - x3) - p.y;
  return CurvePoint{std::move(x3), std::move(y3)};
}

CurvePoint WeierstrassCurve::add(const CurvePoint& p, const CurvePoint& q) const {
  if (!contains(p) || !contains(q)) raise(errc::not_on_curve, "addition operand is off the curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x) {
    if (p.y == q.y) return double_point(p);
    return CurvePoint::at_infinity();  // mirror pair: y1 = -y2
  }
  BigRat lambda = (q.y - p.y) / (q.x - p.x);
  BigRat x3 = lambda * lambda - f_ - p.x - q.x;
  BigRat y3 = lambda * (p.x - x3) - p.y;
  return CurvePoint{std::move(x3), std::move(y3)};
}

CurvePoint WeierstrassCurve::scalar_mul(std::uint64_t k, const CurvePoint& p) const {
  if (!contains(p)) raise(errc::not_on_curve, "multiplication operand is off the curve");
  CurvePoint acc = CurvePoint::at_infinity();
  CurvePoint base = p;
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    k >>= 1;
    if (k > 0) base = double_point(base);
  }
  return acc;
}

namespace {

// Multiplicity of q in n; n must not be divisible by q^64.
unsigned long remove_factor(BigInt& n, const BigInt& q) {
  BigInt quotient;
  unsigned long e = mpz_remove(quotient.raw(), n.raw(), q.raw());
  n = std::move(quotient);
  return e;
}

// ceil(e / k)
unsigned long ceil_div(unsigned long e, unsigned long k) {
  return (e + k - 1) / k;
}

}  // namespace

BigInt integral_unit(const BigRat& f, const BigRat& g, const BigRat& h) {
  // u must satisfy den(f) | u^2, den(g) | u^4, den(h) | u^6. Factor the
  // denominators (they are tiny in practice) and take, for each prime q,
  // the largest of the three ceilinged exponent quotas.
  BigInt df = f.den(), dg = g.den(), dh = h.den();
  BigInt unit(1);
  BigInt trial(2);
  const BigInt bound(100000);
  auto all_one = [&] { return df.is_one() && dg.is_one() && dh.is_one(); };
  while (!all_one() && trial <= bound) {
    unsigned long e = std::max({ceil_div(remove_factor(df, trial), 2),
                                ceil_div(remove_factor(dg, trial), 4),
                                ceil_div(remove_factor(dh, trial), 6)});
    if (e > 0) unit *= pow(trial, e);
    mpz_nextprime(trial.raw(), trial.raw());
  }
  // Any cofactor beyond the trial bound is kept whole: u picks up its first
  // power, which always clears a squarefree-ish tail at worst oversized.
  for (BigInt* rest : {&df, &dg, &dh}) {
    if (!rest->is_one()) {
      unit = lcm(unit, *rest);
    }
  }
  return unit;
}

WeierstrassCurve integral_model(const WeierstrassCurve& curve, BigInt* unit_out) {
  BigInt u = integral_unit(curve.f(), curve.g(), curve.h());
  if (unit_out) *unit_out = u;
  BigRat u2(u * u);
  return WeierstrassCurve(curve.f() * u2, curve.g() * u2 * u2,
                          curve.h() * u2 * u2 * u2);
}

CurvePoint map_point_to_integral(const CurvePoint& p, const BigInt& unit) {
  if (p.infinity) return p;
  BigRat u2(unit * unit);
  BigRat u3(unit * unit * unit);
  return CurvePoint{p.x * u2, p.y * u3};
}

}  // namespace quartic
