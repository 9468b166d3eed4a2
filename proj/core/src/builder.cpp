#include "quartic/builder.hpp"

#include <utility>

#include "quartic/error.hpp"

namespace quartic {

void validate(const EquationSpec& spec) {
  if (spec.n < 3) raise(errc::invalid_spec, "need at least three terms");
  if (spec.coeffs.size() != spec.n) {
    raise(errc::invalid_spec, "expected " + std::to_string(spec.n) +
                                  " coefficients, got " +
                                  std::to_string(spec.coeffs.size()));
  }
  if (spec.params.size() != spec.n - 2) {
    raise(errc::invalid_spec, "expected " + std::to_string(spec.n - 2) +
                                  " parameter pairs, got " +
                                  std::to_string(spec.params.size()));
  }
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    if (spec.coeffs[i].is_zero()) {
      raise(errc::invalid_spec, "coefficient " + std::to_string(i + 1) + " is zero");
    }
  }
}

namespace {

struct LinearData {
  BigRat G, H;
};

// p_1 = G p_n + H enforcing sum a_i p_i = 1.
LinearData solve_first_unknown(const EquationSpec& spec) {
  const BigRat a1(spec.coeffs.front());
  const BigRat an(spec.coeffs.back());
  BigRat slope_sum;      // sum a_i A_i over the middle unknowns
  BigRat intercept_sum;  // sum a_i B_i
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    const BigRat ai(spec.coeffs[i + 1]);
    slope_sum += ai * spec.params[i].slope;
    intercept_sum += ai * spec.params[i].intercept;
  }
  return {(-slope_sum - an) / a1, (-intercept_sum + BigRat(1)) / a1};
}

// Coefficients of m^2 = L1 p_n^3 + L2 p_n^2 + L3 p_n + L4, i.e. the
// expansion of -sum a_i p_i^3 with p_1 = G p_n + H, p_i = A_i p_n + B_i,
// p_n = p_n.
std::vector<BigRat> cubic_from(const EquationSpec& spec, const LinearData& lin) {
  const BigRat a1(spec.coeffs.front());
  const BigRat an(spec.coeffs.back());
  const BigRat three(3);
  BigRat L1 = -a1 * lin.G * lin.G * lin.G - an;
  BigRat L2 = -three * a1 * lin.G * lin.G * lin.H;
  BigRat L3 = -three * a1 * lin.G * lin.H * lin.H;
  BigRat L4 = -a1 * lin.H * lin.H * lin.H;
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    const BigRat ai(spec.coeffs[i + 1]);
    const BigRat& A = spec.params[i].slope;
    const BigRat& B = spec.params[i].intercept;
    L1 -= ai * A * A * A;
    L2 -= three * ai * A * A * B;
    L3 -= three * ai * A * B * B;
    L4 -= ai * B * B * B;
  }
  return {std::move(L1), std::move(L2), std::move(L3), std::move(L4)};
}

}  // namespace

std::vector<BigRat> cubic_coefficients(const EquationSpec& spec) {
  validate(spec);
  return cubic_from(spec, solve_first_unknown(spec));
}

CurveConstruction build_general(const EquationSpec& spec) {
  validate(spec);
  LinearData lin = solve_first_unknown(spec);
  std::vector<BigRat> L = cubic_from(spec, lin);
  if (L[0].is_zero()) {
    raise(errc::degenerate_params, "cubic degenerates to a conic (L1 = 0)");
  }
  // Scaling by L1 turns m^2 = L1 p^3 + ... into Y^2 = X^3 + f X^2 + g X + h
  // with X = L1 p, Y = L1 m.
  WeierstrassCurve curve(L[1], L[2] * L[0], L[3] * L[0] * L[0]);
  return CurveConstruction{spec, std::move(curve), std::move(L[0]),
                           std::move(lin.G), std::move(lin.H)};
}

SpecializedBuild build_three_term(const BigInt& a, const BigInt& b, const BigInt& c,
                                  const BigRat& A, const BigRat& B) {
  if (a.is_zero()) raise(errc::invalid_spec, "leading coefficient is zero");
  const BigRat ar(a), br(b), cr(c);
  const BigRat three(3);
  BigRat alpha = (br * A + cr) / ar;
  BigRat beta = (br * B + BigRat(1)) / ar;
  BigRat lead = -ar * alpha * alpha * alpha + br * A * A * A + cr;
  if (lead.is_zero()) {
    raise(errc::degenerate_params, "cubic degenerates to a conic (L1 = 0)");
  }
  BigRat f = -three * ar * alpha * alpha * beta + three * A * A * B * br;
  BigRat g = (-three * ar * alpha * beta * beta + three * A * B * B * br) * lead;
  BigRat h = (-ar * beta * beta * beta + br * B * B * B) * lead * lead;
  return SpecializedBuild{WeierstrassCurve(std::move(f), std::move(g), std::move(h)),
                          std::move(lead)};
}

SpecializedBuild build_four_term(const BigInt& a, const BigInt& b, const BigInt& c,
                                 const BigInt& d, const BigRat& A, const BigRat& B,
                                 const BigRat& D, const BigRat& F) {
  if (a.is_zero()) raise(errc::invalid_spec, "leading coefficient is zero");
  const BigRat ar(a), br(b), cr(c), dr(d);
  const BigRat three(3);
  BigRat alpha = (br * A + cr - dr * D) / ar;
  BigRat beta = (br * B - dr * F + BigRat(1)) / ar;
  BigRat lead = -ar * alpha * alpha * alpha + br * A * A * A + cr - dr * D * D * D;
  if (lead.is_zero()) {
    raise(errc::degenerate_params, "cubic degenerates to a conic (L1 = 0)");
  }
  BigRat f = -three * ar * alpha * alpha * beta + three * A * A * B * br -
             three * dr * D * D * F;
  BigRat g = (-three * ar * alpha * beta * beta + three * A * B * B * br -
              three * D * F * F * dr) *
             lead;
  BigRat h = (-ar * beta * beta * beta + br * B * B * B - dr * F * F * F) * lead * lead;
  return SpecializedBuild{WeierstrassCurve(std::move(f), std::move(g), std::move(h)),
                          std::move(lead)};
}

EquationSpec map_three_term(const BigInt& a, const BigInt& b, const BigInt& c,
                            const BigRat& A, const BigRat& B) {
  // The closed form uses x = m + p, y = m - q, z = m - s with q = A s + B.
  // In the uniform convention (every unknown m + p_i) the free variable
  // becomes p_3 = -s, so the slope keeps its sign and the intercept flips.
  EquationSpec spec;
  spec.n = 3;
  spec.coeffs = {a, b, c};
  spec.params = {ParamPair{A, -B}};
  return spec;
}

EquationSpec map_four_term(const BigInt& a, const BigInt& b, const BigInt& c,
                           const BigInt& d, const BigRat& A, const BigRat& B,
                           const BigRat& D, const BigRat& F) {
  // Free variable p_4 = -s again; the r = D s + F unknown enters the closed
  // form with the opposite side, so its slope flips and intercept keeps.
  // The subtracted-coefficient unknown moves last: (a, b, d, c).
  EquationSpec spec;
  spec.n = 4;
  spec.coeffs = {a, b, d, c};
  spec.params = {ParamPair{A, -B}, ParamPair{-D, F}};
  return spec;
}

}  // namespace quartic
