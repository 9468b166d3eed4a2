#pragma once

#include <vector>

#include "quartic/builder.hpp"
#include "quartic/curve.hpp"
#include "quartic/exact.hpp"

namespace quartic {

/// The rational preimage of a curve point: the shared offset m and the
/// per-unknown displacements p_1..p_n, so that x_i = m + p_i, y_i = m - p_i.
/// Always satisfies sum a_i p_i = 1 and m^2 = -sum a_i p_i^3.
struct RationalTuple {
  BigRat m;
  std::vector<BigRat> p;
};

enum class SolutionClass {
  kNontrivial,
  kTrivialPermutation,  // sides coincide as multisets within equal coefficients
  kDegenerate,          // every entry is zero
};

/// Lowercase names used in JSON and CLI output: "nontrivial",
/// "trivial_permutation", "degenerate".
const char* to_string(SolutionClass c);

/// Integer solution of sum a_i x_i^4 = sum a_i y_i^4 after clearing
/// denominators: nonnegative entries, jointly coprime. scale records the
/// denominator-clearing multiplier applied before the joint gcd was divided
/// out.
struct IntegerSolution {
  std::vector<BigInt> x;
  std::vector<BigInt> y;
  BigInt scale;
  SolutionClass cls = SolutionClass::kNontrivial;

  bool has_zero_entry() const;
};

/// Pulls a finite curve point back to (m, p_1..p_n) via m = Y/L1,
/// p_n = X/L1, p_1 = G p_n + H and the stored linear parameters.
/// Throws PointAtInfinity for the identity and NotOnCurve for points off
/// the construction's curve.
RationalTuple back_substitute(const CurveConstruction& c, const CurvePoint& point);

/// Clears denominators of x_i = m + p_i, y_i = m - p_i by their lcm, takes
/// absolute values, divides out the joint gcd and canonicalizes: entries
/// sharing a coefficient value are sorted ascending on each side, then the
/// lexicographically smaller side goes to x. Classification included.
IntegerSolution clear_and_reduce(const EquationSpec& spec, const RationalTuple& t);

/// Degenerate when all entries vanish; trivial when, within every group of
/// equal coefficient values, the two sides agree as multisets.
SolutionClass classify(const EquationSpec& spec, const IntegerSolution& s);

/// back_substitute + clear_and_reduce on the construction's spec.
IntegerSolution derive(const CurveConstruction& c, const CurvePoint& point);

/// sum a_i v_i^4, the quantity both sides of the equation evaluate.
BigInt quartic_form(const EquationSpec& spec, const std::vector<BigInt>& v);

}  // namespace quartic
