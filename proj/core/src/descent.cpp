#include "quartic/descent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "quartic/error.hpp"

namespace quartic {

const char* to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::kNontrivial: return "nontrivial";
    case SolutionClass::kTrivialPermutation: return "trivial_permutation";
    case SolutionClass::kDegenerate: return "degenerate";
  }
  return "?";
}

bool IntegerSolution::has_zero_entry() const {
  auto zero = [](const BigInt& v) { return v.is_zero(); };
  return std::any_of(x.begin(), x.end(), zero) ||
         std::any_of(y.begin(), y.end(), zero);
}

RationalTuple back_substitute(const CurveConstruction& c, const CurvePoint& point) {
  if (point.infinity) {
    raise(errc::point_at_infinity, "no affine preimage");
  }
  if (!c.curve.contains(point)) raise(errc::not_on_curve, "point does not satisfy the curve equation");
  RationalTuple t;
  t.m = point.y / c.cubic_leading;
  BigRat pn = point.x / c.cubic_leading;
  t.p.reserve(c.spec.n);
  t.p.push_back(c.p1_slope * pn + c.p1_intercept);
  for (const ParamPair& pp : c.spec.params) {
    t.p.push_back(pp.slope * pn + pp.intercept);
  }
  t.p.push_back(std::move(pn));
  return t;
}

namespace {

// Indices sharing a coefficient value; entries at these indices may be
// permuted without changing the equation.
std::map<BigInt, std::vector<std::size_t>> coefficient_groups(
    const EquationSpec& spec) {
  std::map<BigInt, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    groups[spec.coeffs[i]].push_back(i);
  }
  return groups;
}

void sort_within_groups(const EquationSpec& spec, std::vector<BigInt>& side) {
  for (const auto& [coeff, idx] : coefficient_groups(spec)) {
    std::vector<BigInt> vals;
    vals.reserve(idx.size());
    for (std::size_t i : idx) vals.push_back(side[i]);
    std::sort(vals.begin(), vals.end());
    for (std::size_t j = 0; j < idx.size(); ++j) side[idx[j]] = std::move(vals[j]);
  }
}

}  // namespace

IntegerSolution clear_and_reduce(const EquationSpec& spec, const RationalTuple& t) {
  if (t.p.size() != spec.n) raise(errc::invalid_input, "tuple arity mismatch");
  std::vector<BigRat> entries;
  entries.reserve(2 * spec.n);
  for (const BigRat& pi : t.p) entries.push_back(t.m + pi);
  for (const BigRat& pi : t.p) entries.push_back(t.m - pi);
  BigInt lambda = lcm_of_denominators(entries);
  const BigRat scale(lambda);

  std::vector<BigInt> cleared;
  cleared.reserve(entries.size());
  BigInt common;
  for (const BigRat& e : entries) {
    BigInt v = abs((scale * e).num());  // integral by choice of lambda
    common = gcd(common, v);
    cleared.push_back(std::move(v));
  }
  if (!common.is_zero() && !common.is_one()) {
    for (BigInt& v : cleared) v = divide_exact(v, common);
  }

  IntegerSolution s;
  s.x.assign(cleared.begin(), cleared.begin() + static_cast<long>(spec.n));
  s.y.assign(cleared.begin() + static_cast<long>(spec.n), cleared.end());
  s.scale = std::move(lambda);
  sort_within_groups(spec, s.x);
  sort_within_groups(spec, s.y);
  if (std::lexicographical_compare(s.y.begin(), s.y.end(), s.x.begin(), s.x.end())) {
    s.x.swap(s.y);
  }
  s.cls = classify(spec, s);
  return s;
}

SolutionClass classify(const EquationSpec& spec, const IntegerSolution& s) {
  if (s.x.size() != spec.n || s.y.size() != spec.n) {
    raise(errc::invalid_input, "solution arity mismatch");
  }
  auto zero = [](const BigInt& v) { return v.is_zero(); };
  if (std::all_of(s.x.begin(), s.x.end(), zero) &&
      std::all_of(s.y.begin(), s.y.end(), zero)) {
    return SolutionClass::kDegenerate;
  }
  for (const auto& [coeff, idx] : coefficient_groups(spec)) {
    std::vector<BigInt> xs, ys;
    for (std::size_t i : idx) {
      xs.push_back(s.x[i]);
      ys.push_back(s.y[i]);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (xs != ys) return SolutionClass::kNontrivial;
  }
  return SolutionClass::kTrivialPermutation;
}

IntegerSolution derive(const CurveConstruction& c, const CurvePoint& point) {
  IntegerSolution s = clear_and_reduce(c.spec, back_substitute(c, point));
  if (quartic_form(c.spec, s.x) != quartic_form(c.spec, s.y)) {
    // Unreachable for on-curve points; a failure here is a library bug.
    throw std::logic_error("derived solution does not balance");
  }
  return s;
}

BigInt quartic_form(const EquationSpec& spec, const std::vector<BigInt>& v) {
  if (v.size() != spec.coeffs.size()) {
    raise(errc::invalid_input, "expected " + std::to_string(spec.coeffs.size()) +
                                   " values, got " + std::to_string(v.size()));
  }
  BigInt sum;
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigInt sq = v[i] * v[i];
    sum += spec.coeffs[i] * sq * sq;
  }
  return sum;
}

}  // namespace quartic
