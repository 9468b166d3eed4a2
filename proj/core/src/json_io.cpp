#include "quartic/json_io.hpp"

#include <cstdint>
#include <limits>

#include "quartic/error.hpp"

namespace quartic {

namespace {

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    raise(errc::invalid_input, std::string("missing key \"") + key + "\"");
  }
  return *it;
}

// Counts may arrive as parsed (unsigned) or as programmatically built
// (signed) JSON numbers; both are fine as long as the value is a
// nonnegative integer within range.
std::uint64_t nonnegative_count(const Json& j, const char* key,
                                std::uint64_t max_value) {
  const Json& v = require(j, key);
  const bool integral =
      v.is_number_unsigned() ||
      (v.is_number_integer() && v.get<std::int64_t>() >= 0);
  if (!integral) {
    raise(errc::invalid_input,
          std::string("key \"") + key + "\" must be a nonnegative integer");
  }
  const std::uint64_t value = v.get<std::uint64_t>();
  if (value > max_value) {
    raise(errc::invalid_input, std::string("key \"") + key + "\" is out of range");
  }
  return value;
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) {
    raise(errc::invalid_input, std::string("key \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

Json strings(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const BigInt& v : values) arr.push_back(v.to_string());
  return arr;
}

}  // namespace

Json to_json(const BigInt& v) { return v.to_string(); }
Json to_json(const BigRat& v) { return v.to_string(); }

Json to_json(const CurvePoint& p) {
  if (p.infinity) return Json{{"infinity", true}};
  return Json{{"x", p.x.to_string()}, {"y", p.y.to_string()}};
}

Json to_json(const WeierstrassCurve& c) {
  return Json{{"f", c.f().to_string()},
              {"g", c.g().to_string()},
              {"h", c.h().to_string()}};
}

Json to_json(const EquationSpec& s) {
  Json coeffs = Json::array();
  for (const BigInt& a : s.coeffs) coeffs.push_back(a.to_string());
  Json params = Json::array();
  for (const ParamPair& p : s.params) {
    params.push_back(Json{{"A", p.slope.to_string()}, {"B", p.intercept.to_string()}});
  }
  return Json{{"n", s.n}, {"coeffs", std::move(coeffs)}, {"params", std::move(params)}};
}

Json to_json(const CurveConstruction& c) {
  return Json{{"spec", to_json(c.spec)},
              {"curve", to_json(c.curve)},
              {"L1", c.cubic_leading.to_string()},
              {"G", c.p1_slope.to_string()},
              {"H", c.p1_intercept.to_string()}};
}

Json to_json(const IntegerSolution& s) {
  Json j{{"x", strings(s.x)},
         {"y", strings(s.y)},
         {"scale", s.scale.to_string()},
         {"class", to_string(s.cls)}};
  if (s.has_zero_entry()) j["has_zero"] = true;
  return j;
}

Json to_json(const SolutionEntry& e) {
  Json j{{"k", e.k},
         {"x", strings(e.solution.x)},
         {"y", strings(e.solution.y)},
         {"scale", e.solution.scale.to_string()},
         {"class", to_string(e.solution.cls)},
         {"verified", e.verified}};
  if (e.solution.has_zero_entry()) j["has_zero"] = true;
  return j;
}

Json to_json(const SolutionReport& r) {
  Json solutions = Json::array();
  for (const SolutionEntry& e : r.solutions) solutions.push_back(to_json(e));
  return Json{{"construction", to_json(r.construction)},
              {"generator", to_json(r.generator)},
              {"solutions", std::move(solutions)},
              {"counts", Json{{"nontrivial", r.nontrivial_count},
                              {"trivial_permutation", r.trivial_count},
                              {"degenerate", r.degenerate_count}}},
              {"all_verified", r.all_verified},
              {"torsion_stop", r.torsion_stop}};
}

BigInt bigint_from_json(const Json& j) {
  if (!j.is_string()) {
    raise(errc::invalid_input, "big integers travel as decimal strings");
  }
  return BigInt(j.get<std::string>());
}

BigRat bigrat_from_json(const Json& j) {
  if (!j.is_string()) {
    raise(errc::invalid_input, "rationals travel as \"num\" or \"num/den\" strings");
  }
  return BigRat(j.get<std::string>());
}

CurvePoint point_from_json(const Json& j) {
  if (!j.is_object()) raise(errc::invalid_input, "point must be an object");
  if (j.contains("infinity")) {
    const Json& inf = j["infinity"];
    if (!inf.is_boolean() || !inf.get<bool>()) {
      raise(errc::invalid_input, "\"infinity\" must be true when present");
    }
    return CurvePoint::at_infinity();
  }
  return CurvePoint{BigRat(require_string(j, "x")), BigRat(require_string(j, "y"))};
}

WeierstrassCurve curve_from_json(const Json& j) {
  if (!j.is_object()) raise(errc::invalid_input, "curve must be an object");
  return WeierstrassCurve(BigRat(require_string(j, "f")),
                          BigRat(require_string(j, "g")),
                          BigRat(require_string(j, "h")));
}

EquationSpec spec_from_json(const Json& j) {
  if (!j.is_object()) raise(errc::invalid_input, "spec must be an object");
  EquationSpec spec;
  spec.n = static_cast<std::size_t>(
      nonnegative_count(j, "n", std::numeric_limits<std::size_t>::max()));
  const Json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) raise(errc::invalid_input, "\"coeffs\" must be an array");
  for (const Json& c : coeffs) spec.coeffs.push_back(bigint_from_json(c));
  const Json& params = require(j, "params");
  if (!params.is_array()) raise(errc::invalid_input, "\"params\" must be an array");
  for (const Json& p : params) {
    if (!p.is_object()) raise(errc::invalid_input, "param pair must be an object");
    spec.params.push_back(
        ParamPair{BigRat(require_string(p, "A")), BigRat(require_string(p, "B"))});
  }
  validate(spec);
  return spec;
}

CurveConstruction construction_from_json(const Json& j) {
  if (!j.is_object()) raise(errc::invalid_input, "construction must be an object");
  CurveConstruction rebuilt = build_general(spec_from_json(require(j, "spec")));
  // Stored fields, when present, must agree with what the spec rebuilds to;
  // anything else means the record was edited inconsistently.
  if (j.contains("curve") && !(curve_from_json(j["curve"]) == rebuilt.curve)) {
    raise(errc::invalid_input, "stored curve disagrees with its spec");
  }
  for (auto [key, value] : {std::pair<const char*, const BigRat*>{"L1", &rebuilt.cubic_leading},
                            {"G", &rebuilt.p1_slope},
                            {"H", &rebuilt.p1_intercept}}) {
    if (j.contains(key) && !(BigRat(require_string(j, key)) == *value)) {
      raise(errc::invalid_input, std::string("stored ") + key + " disagrees with its spec");
    }
  }
  return rebuilt;
}

SearchBounds bounds_from_json(const Json& j) {
  if (!j.is_object()) raise(errc::invalid_input, "bounds must be an object");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint32_t>::max();
  return SearchBounds{
      static_cast<std::uint32_t>(nonnegative_count(j, "numerator_bound", kMax)),
      static_cast<std::uint32_t>(nonnegative_count(j, "denominator_bound", kMax))};
}

SolveRequest request_from_json(const Json& j) {
  if (!j.is_object()) raise(errc::invalid_input, "request must be an object");
  SolveRequest req;
  req.spec = spec_from_json(require(j, "spec"));
  if (j.contains("generator")) req.generator = point_from_json(j["generator"]);
  if (j.contains("search_bounds")) req.search_bounds = bounds_from_json(j["search_bounds"]);
  if (j.contains("multiples")) {
    req.multiples = nonnegative_count(
        j, "multiples", std::numeric_limits<std::uint64_t>::max());
  }
  if (j.contains("integral_rescale")) {
    const Json& flag = j["integral_rescale"];
    if (!flag.is_boolean()) raise(errc::invalid_input, "\"integral_rescale\" must be a boolean");
    req.integral_rescale = flag.get<bool>();
  }
  return req;
}

}  // namespace quartic
