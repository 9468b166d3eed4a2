#pragma once

#include <cstddef>
#include <vector>

#include "quartic/curve.hpp"
#include "quartic/exact.hpp"

namespace quartic {

/// Linear parametrization p_i = slope * p_n + intercept for one of the
/// middle unknowns (i = 2 .. n-1).
struct ParamPair {
  BigRat slope;      // A_i
  BigRat intercept;  // B_i

  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

/// Input to the general construction: the equation
///   sum a_i x_i^4 = sum a_i y_i^4, i = 1..n,
/// together with the linear parameters tying p_2..p_{n-1} to p_n.
struct EquationSpec {
  std::size_t n = 0;
  std::vector<BigInt> coeffs;     // a_1..a_n, all nonzero
  std::vector<ParamPair> params;  // n-2 entries, for p_2..p_{n-1}

  friend bool operator==(const EquationSpec&, const EquationSpec&) = default;
};

/// Throws InvalidSpec unless n >= 3, coeffs has n nonzero entries and
/// params has n-2 entries.
void validate(const EquationSpec& spec);

/// Result of the general construction. The curve is
///   Y^2 = X^3 + f X^2 + g X + h
/// with f = L2, g = L3*L1, h = L4*L1^2, where L1..L4 are the coefficients of
/// the cubic m^2 = L1 p_n^3 + L2 p_n^2 + L3 p_n + L4 obtained from the
/// substitution x_i = m + p_i, y_i = m - p_i. Rational points pull back to
/// solutions through X = L1 p_n, Y = L1 m.
struct CurveConstruction {
  EquationSpec spec;
  WeierstrassCurve curve;
  BigRat cubic_leading;  // L1, nonzero by construction
  BigRat p1_slope;       // G:  p_1 = G p_n + H
  BigRat p1_intercept;   // H
};

/// Runs the substitution for an arbitrary n >= 3.
/// Throws DegenerateParams when L1 = 0 and SingularCurve when the resulting
/// model has zero discriminant.
CurveConstruction build_general(const EquationSpec& spec);

/// L1..L4 for the spec, in that order. Shares all validation with
/// build_general but never constructs the curve, so it works on inputs the
/// curve constructor would reject.
std::vector<BigRat> cubic_coefficients(const EquationSpec& spec);

/// Output of the closed-form three- and four-term constructions below. These
/// follow their own parameter conventions, so the leading coefficient can
/// differ from the general route even when the curve agrees.
struct SpecializedBuild {
  WeierstrassCurve curve;
  BigRat cubic_leading;
};

/// a x1^4 + b x2^4 + c x3^4 = a y1^4 + b y2^4 + c y3^4 with x2 = A t + B
/// style linear data (A, B) on the second unknown.
SpecializedBuild build_three_term(const BigInt& a, const BigInt& b, const BigInt& c,
                                  const BigRat& A, const BigRat& B);

/// Four-term analogue with data (A, B) on the second unknown and (D, F) on
/// the third.
SpecializedBuild build_four_term(const BigInt& a, const BigInt& b, const BigInt& c,
                                 const BigInt& d, const BigRat& A, const BigRat& B,
                                 const BigRat& D, const BigRat& F);

/// Rewrites three-term data as a general spec producing the same curve.
EquationSpec map_three_term(const BigInt& a, const BigInt& b, const BigInt& c,
                            const BigRat& A, const BigRat& B);

/// Rewrites four-term data as a general spec producing the same curve.
EquationSpec map_four_term(const BigInt& a, const BigInt& b, const BigInt& c,
                           const BigInt& d, const BigRat& A, const BigRat& B,
                           const BigRat& D, const BigRat& F);

}  // namespace quartic
