#include "quartic/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "quartic/error.hpp"

namespace quartic {

bool verify_identity(const EquationSpec& spec, const std::vector<BigInt>& x,
                     const std::vector<BigInt>& y) {
  return quartic_form(spec, x) == quartic_form(spec, y);
}

namespace {

bool curve_is_integral(const WeierstrassCurve& c) {
  return c.f().is_integer() && c.g().is_integer() && c.h().is_integer();
}

// Searches the construction's curve, rescaling to an integral model first
// when allowed, and reports the chosen candidate on the original curve.
CurvePoint find_generator(const CurveConstruction& cons, const SearchBounds& bounds,
                          bool integral_rescale) {
  if (curve_is_integral(cons.curve) || !integral_rescale) {
    auto points = search_points(cons.curve, bounds);
    auto pick = pick_candidate_generator(cons.curve, points);
    if (!pick) raise(errc::no_generator_found, "within the given bounds");
    return *pick;
  }
  BigInt unit;
  WeierstrassCurve scaled = integral_model(cons.curve, &unit);
  auto points = search_points(scaled, bounds);
  auto pick = pick_candidate_generator(scaled, points);
  if (!pick) raise(errc::no_generator_found, "within the given bounds");
  // Invert (x, y) -> (u^2 x, u^3 y); infinite order is preserved.
  const BigRat u(unit);
  return CurvePoint{pick->x / (u * u), pick->y / (u * u * u)};
}

}  // namespace

SolutionReport solve(const SolveRequest& request) {
  CurveConstruction cons = build_general(request.spec);
  CurvePoint generator = CurvePoint::at_infinity();
  if (request.generator) {
    if (!cons.curve.contains(*request.generator)) {
      raise(errc::not_on_curve, "supplied generator is off the curve");
    }
    generator = *request.generator;
  } else if (request.search_bounds) {
    generator = find_generator(cons, *request.search_bounds, request.integral_rescale);
  } else {
    raise(errc::invalid_input, "need a generator or search bounds");
  }
  if (generator.infinity) raise(errc::point_at_infinity, "generator");

  SolutionReport report{std::move(cons), generator, {}, 0, 0, 0, true, false};
  CurvePoint acc = CurvePoint::at_infinity();
  for (std::uint64_t k = 1; k <= request.multiples; ++k) {
    acc = report.construction.curve.add(acc, generator);
    if (acc.infinity) {
      report.torsion_stop = true;
      break;
    }
    SolutionEntry entry{k, derive(report.construction, acc), false};
    entry.verified =
        verify_identity(report.construction.spec, entry.solution.x, entry.solution.y);
    bool duplicate =
        std::any_of(report.solutions.begin(), report.solutions.end(),
                    [&](const SolutionEntry& e) {
                      return e.solution.x == entry.solution.x &&
                             e.solution.y == entry.solution.y;
                    });
    if (duplicate) continue;
    report.all_verified = report.all_verified && entry.verified;
    switch (entry.solution.cls) {
      case SolutionClass::kNontrivial: ++report.nontrivial_count; break;
      case SolutionClass::kTrivialPermutation: ++report.trivial_count; break;
      case SolutionClass::kDegenerate: ++report.degenerate_count; break;
    }
    report.solutions.push_back(std::move(entry));
  }
  return report;
}

}  // namespace quartic
