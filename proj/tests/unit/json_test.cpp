#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "quartic/error.hpp"
#include "quartic/json_io.hpp"
#include "quartic/pipeline.hpp"

using quartic::BigInt;
using quartic::BigRat;
using quartic::CurvePoint;
using quartic::Error;
using quartic::Json;
using quartic::errc;

namespace {

template <typename Fn>
void expect_invalid(Fn&& fn) {
  try {
    fn();
    FAIL("expected InvalidInput");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_input);
  }
}

}  // namespace

TEST_SUITE_BEGIN("json");

TEST_CASE("big values travel as strings") {
  BigInt n("-123456789012345678901234567890");
  Json jn = quartic::to_json(n);
  REQUIRE(jn.is_string());
  CHECK(quartic::bigint_from_json(jn) == n);

  BigRat q("-355/113");
  Json jq = quartic::to_json(q);
  REQUIRE(jq.is_string());
  CHECK(jq.get<std::string>() == "-355/113");
  CHECK(quartic::bigrat_from_json(jq) == q);

  expect_invalid([] { quartic::bigint_from_json(Json(42)); });
  expect_invalid([] { quartic::bigrat_from_json(Json(1.5)); });
}

TEST_CASE("points round trip, including infinity") {
  CurvePoint p = refs::pt("450", "6210");
  CHECK(quartic::point_from_json(quartic::to_json(p)) == p);

  CurvePoint inf = CurvePoint::at_infinity();
  Json jinf = quartic::to_json(inf);
  CHECK(jinf.dump() == R"({"infinity":true})");
  CHECK(quartic::point_from_json(jinf).infinity);

  expect_invalid([] { quartic::point_from_json(Json{{"infinity", false}}); });
  expect_invalid([] { quartic::point_from_json(Json{{"x", "1"}}); });
}

TEST_CASE("curves round trip with fixed key order") {
  auto cons = quartic::build_general(refs::unit3().spec);
  Json j = quartic::to_json(cons.curve);
  CHECK(j.dump() == R"({"f":"-243","g":"-7290","h":"-72900"})");
  CHECK(quartic::curve_from_json(j) == cons.curve);
}

TEST_CASE("specs round trip for every example") {
  for (const auto& ex : refs::all_examples()) {
    CHECK(quartic::spec_from_json(quartic::to_json(ex.spec)) == ex.spec);
  }
  expect_invalid([] { quartic::spec_from_json(Json{{"n", "three"}}); });
  expect_invalid([] {
    quartic::spec_from_json(Json{{"n", 3}, {"params", Json::array()}});
  });
}

TEST_CASE("constructions rebuild from their spec and reject tampering") {
  auto cons = quartic::build_general(refs::coeff123().spec);
  Json j = quartic::to_json(cons);
  auto back = quartic::construction_from_json(j);
  CHECK(back.curve == cons.curve);
  CHECK(back.cubic_leading == cons.cubic_leading);
  CHECK(back.p1_slope == cons.p1_slope);
  CHECK(back.p1_intercept == cons.p1_intercept);

  Json bad_curve = j;
  bad_curve["curve"]["f"] = "-362";
  expect_invalid([&] { quartic::construction_from_json(bad_curve); });

  Json bad_l1 = j;
  bad_l1["L1"] = "1201";
  expect_invalid([&] { quartic::construction_from_json(bad_l1); });

  Json bad_g = j;
  bad_g["G"] = "11";
  expect_invalid([&] { quartic::construction_from_json(bad_g); });
}

TEST_CASE("solution entries serialize to a frozen shape") {
  auto ex = refs::unit3();
  auto cons = quartic::build_general(ex.spec);
  auto sol = quartic::derive(cons, ex.generator);
  quartic::SolutionEntry entry{1, sol,
                               quartic::verify_identity(ex.spec, sol.x, sol.y)};
  CHECK(quartic::to_json(entry).dump() ==
        R"({"k":1,"x":["19","74","117"],"y":["21","64","119"],)"
        R"("scale":"3","class":"nontrivial","verified":true})");
}

TEST_CASE("zero entries are flagged, and only then") {
  quartic::IntegerSolution with_zero;
  with_zero.x = refs::ints({"0", "1", "2"});
  with_zero.y = refs::ints({"0", "2", "1"});
  with_zero.scale = BigInt(1);
  with_zero.cls = quartic::SolutionClass::kTrivialPermutation;
  Json j = quartic::to_json(with_zero);
  CHECK(j.contains("has_zero"));
  CHECK(j["has_zero"] == true);
  CHECK(j["class"] == "trivial_permutation");

  quartic::IntegerSolution no_zero;
  no_zero.x = refs::ints({"19", "74", "117"});
  no_zero.y = refs::ints({"21", "64", "119"});
  no_zero.scale = BigInt(3);
  no_zero.cls = quartic::SolutionClass::kNontrivial;
  CHECK(!quartic::to_json(no_zero).contains("has_zero"));
}

TEST_CASE("reports serialize deterministically") {
  quartic::SolveRequest req;
  req.spec = refs::unit3().spec;
  req.generator = refs::unit3().generator;
  req.multiples = 2;
  auto report = quartic::solve(req);

  Json j = quartic::to_json(report);
  CHECK(j["solutions"].size() == 2);
  CHECK(j["counts"]["nontrivial"] == 2);
  CHECK(j["counts"]["trivial_permutation"] == 0);
  CHECK(j["all_verified"] == true);
  CHECK(j["torsion_stop"] == false);
  CHECK(j["generator"]["x"] == "450");

  // Identical input must yield byte-identical output.
  CHECK(j.dump(2) == quartic::to_json(quartic::solve(req)).dump(2));
}

TEST_CASE("requests parse with defaults and with every field") {
  Json minimal{{"spec", quartic::to_json(refs::unit3().spec)}};
  auto req = quartic::request_from_json(minimal);
  CHECK(req.spec == refs::unit3().spec);
  CHECK(!req.generator.has_value());
  CHECK(!req.search_bounds.has_value());
  CHECK(req.multiples == 1);
  CHECK(!req.integral_rescale);

  Json full{{"spec", quartic::to_json(refs::unit4().spec)},
            {"generator", quartic::to_json(refs::unit4().generator)},
            {"search_bounds",
             Json{{"numerator_bound", 500}, {"denominator_bound", 2}}},
            {"multiples", 3},
            {"integral_rescale", true}};
  req = quartic::request_from_json(full);
  CHECK(req.generator == refs::unit4().generator);
  REQUIRE(req.search_bounds.has_value());
  CHECK(req.search_bounds->numerator_bound == 500);
  CHECK(req.search_bounds->denominator_bound == 2);
  CHECK(req.multiples == 3);
  CHECK(req.integral_rescale);

  expect_invalid([] {
    quartic::request_from_json(
        Json{{"spec", quartic::to_json(refs::unit3().spec)}, {"multiples", -1}});
  });
  expect_invalid([] {
    quartic::request_from_json(
        Json{{"spec", quartic::to_json(refs::unit3().spec)},
             {"search_bounds", Json{{"numerator_bound", 10}}}});
  });
}

TEST_SUITE_END();
