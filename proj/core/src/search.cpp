#include "quartic/search.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "quartic/error.hpp"

namespace quartic {

std::vector<CurvePoint> search_points(const WeierstrassCurve& curve,
                                      const SearchBounds& bounds) {
  if (bounds.numerator_bound < 1 || bounds.denominator_bound < 1) {
    raise(errc::invalid_input, "search bounds must be positive");
  }
  if (!curve.f().is_integer() || !curve.g().is_integer() ||
      !curve.h().is_integer()) {
    raise(errc::non_integral_model, "search requires integer f, g, h");
  }
  const BigInt f = curve.f().num();
  const BigInt g = curve.g().num();
  const BigInt h = curve.h().num();

  std::vector<CurvePoint> found;
  for (std::uint64_t s = 1; s <= bounds.denominator_bound; ++s) {
    const std::uint64_t s2 = s * s;
    unsigned __int128 span =
        static_cast<unsigned __int128>(bounds.numerator_bound) * s2;
    if (span > static_cast<unsigned __int128>(INT64_MAX)) {
      raise(errc::invalid_input, "search window exceeds 2^63");
    }
    const std::int64_t r_bound = static_cast<std::int64_t>(span);
    const BigInt s2b(static_cast<long>(s2));
    // v = s^6 * cubic(r/s^2) = r^3 + f s^2 r^2 + g s^4 r + h s^6, an
    // integer; the point exists exactly when v is a perfect square.
    const BigInt fs2 = f * s2b;
    const BigInt gs4 = g * s2b * s2b;
    const BigInt hs6 = h * s2b * s2b * s2b;
    const BigInt s3b(static_cast<long>(s2 * s));
    for (std::int64_t r = -r_bound; r <= r_bound; ++r) {
      if (std::gcd(r, static_cast<std::int64_t>(s)) != 1) continue;
      const BigInt rb(static_cast<long>(r));
      BigInt v = ((rb + fs2) * rb + gs4) * rb + hs6;
      auto t = int_sqrt_exact(v);
      if (!t) continue;
      found.push_back(CurvePoint{BigRat(rb, s2b), BigRat(*t, s3b)});
    }
  }
  std::sort(found.begin(), found.end(), [](const CurvePoint& a, const CurvePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  return found;
}

std::optional<CurvePoint> pick_candidate_generator(
    const WeierstrassCurve& curve, const std::vector<CurvePoint>& candidates) {
  for (const CurvePoint& p : candidates) {
    if (p.infinity) continue;
    bool torsion = false;
    CurvePoint acc = p;
    for (std::uint64_t k = 2; k <= kMaxTorsionOrder; ++k) {
      acc = curve.add(acc, p);
      if (acc.infinity) {
        torsion = true;
        break;
      }
    }
    if (!torsion) return p;
  }
  return std::nullopt;
}

}  // namespace quartic
