#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quartic/curve.hpp"

namespace quartic {

/// Search window for rational points x = r/s^2: |r| <= numerator_bound * s^2
/// and 1 <= s <= denominator_bound.
struct SearchBounds {
  std::uint32_t numerator_bound = 1;
  std::uint32_t denominator_bound = 1;
};

/// Orders beyond this need no checking: a rational torsion point has order
/// at most 12.
inline constexpr std::uint64_t kMaxTorsionOrder = 12;

/// All curve points with x = r/s^2 in the window and y >= 0, sorted by
/// (x, y) ascending. y is recovered exactly; no floating point involved.
std::vector<CurvePoint> search_points(const WeierstrassCurve& curve,
                                      const SearchBounds& bounds);

/// First listed point whose first kMaxTorsionOrder multiples stay finite,
/// i.e. a point that cannot be rational torsion. Empty when every candidate
/// hits infinity within the bound.
std::optional<CurvePoint> pick_candidate_generator(
    const WeierstrassCurve& curve, const std::vector<CurvePoint>& candidates);

}  // namespace quartic
