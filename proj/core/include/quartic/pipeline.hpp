#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quartic/builder.hpp"
#include "quartic/descent.hpp"
#include "quartic/search.hpp"

namespace quartic {

/// One end-to-end job: build the curve for spec, obtain a generator (given
/// explicitly or found by bounded search), derive solutions from its first
/// `multiples` multiples.
struct SolveRequest {
  EquationSpec spec;
  std::optional<CurvePoint> generator;
  std::optional<SearchBounds> search_bounds;
  std::uint64_t multiples = 1;
  /// Search on the integral model when the constructed curve is not
  /// integral, mapping found points back. No effect on supplied generators.
  bool integral_rescale = false;
};

struct SolutionEntry {
  std::uint64_t k = 0;  // multiple index, solution derived from k*P
  IntegerSolution solution;
  bool verified = false;
};

struct SolutionReport {
  CurveConstruction construction;
  CurvePoint generator;
  std::vector<SolutionEntry> solutions;  // deduped by canonical form
  std::size_t nontrivial_count = 0;
  std::size_t trivial_count = 0;
  std::size_t degenerate_count = 0;
  bool all_verified = false;
  /// Set when k*P hit infinity before `multiples` was exhausted, i.e. the
  /// generator turned out to be torsion.
  bool torsion_stop = false;
};

/// true iff sum a_i x_i^4 == sum a_i y_i^4, evaluated exactly.
/// Throws InvalidInput when either list's length differs from spec.n.
bool verify_identity(const EquationSpec& spec, const std::vector<BigInt>& x,
                     const std::vector<BigInt>& y);

/// Runs the pipeline: construct, find or take the generator, walk k = 1..K
/// deriving and re-verifying each solution, dedupe, count by class. Stops
/// early at k*P = Infinity. Throws NoGeneratorFound when a search turns up
/// no infinite-order candidate.
SolutionReport solve(const SolveRequest& request);

}  // namespace quartic
