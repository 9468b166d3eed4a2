// quartic: construct elliptic curves from equal-sums-of-fourth-powers
// equations, find and multiply rational points, and emit verified integer
// solutions. All input and output is JSON with big values as decimal
// strings; identical inputs produce byte-identical output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "quartic/error.hpp"
#include "quartic/json_io.hpp"
#include "quartic/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    quartic::raise(quartic::errc::invalid_input, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

quartic::Json parse(const std::string& path) {
  try {
    return quartic::Json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    quartic::raise(quartic::errc::invalid_input, e.what());
  }
}

void emit(const quartic::Json& j) { std::cout << j.dump(2) << "\n"; }

// A construction record carries a "spec" key; a bare spec is also accepted.
quartic::CurveConstruction load_construction(const quartic::Json& j) {
  if (j.is_object() && j.contains("spec")) {
    return quartic::construction_from_json(j);
  }
  return quartic::build_general(quartic::spec_from_json(j));
}

struct PointFlags {
  std::string x, y;
  bool infinity = false;

  quartic::CurvePoint to_point() const {
    if (infinity) return quartic::CurvePoint::at_infinity();
    if (x.empty() || y.empty()) {
      quartic::raise(quartic::errc::invalid_input,
                     "need --x and --y, or --infinity");
    }
    return quartic::CurvePoint{quartic::BigRat(x), quartic::BigRat(y)};
  }
};

quartic::Json integral_block(const quartic::WeierstrassCurve& curve) {
  quartic::BigInt unit;
  quartic::WeierstrassCurve scaled = quartic::integral_model(curve, &unit);
  return quartic::Json{{"unit", unit.to_string()}, {"curve", quartic::to_json(scaled)}};
}

int run(int argc, char** argv) {
  CLI::App app{"elliptic-curve solutions of sum a_i x_i^4 = sum a_i y_i^4"};
  app.require_subcommand(1);

  std::string input_path = "-";
  bool rescale = false;

  auto* construct = app.add_subcommand(
      "construct", "build the curve and back-substitution data for a spec");
  construct->add_option("file", input_path, "spec JSON (\"-\" for stdin)");
  construct->add_flag("--integral-rescale", rescale,
                      "also report the integral model u^2 f, u^4 g, u^6 h");

  auto* search = app.add_subcommand("search", "list small rational points on a curve");
  std::uint32_t num_bound = 0, den_bound = 1;
  search->add_option("file", input_path, "curve JSON (\"-\" for stdin)");
  search->add_option("--num-bound", num_bound, "numerator bound for x = r/s^2")
      ->required();
  search->add_option("--den-bound", den_bound, "bound on s in x = r/s^2")
      ->capture_default_str();
  search->add_flag("--integral-rescale", rescale,
                   "search the integral model instead of rejecting rational f, g, h");

  auto* derive = app.add_subcommand(
      "derive", "turn one curve point into a reduced integer solution");
  PointFlags pf;
  derive->add_option("file", input_path, "construction or spec JSON (\"-\" for stdin)");
  derive->add_option("--x", pf.x, "point x coordinate (rational string)");
  derive->add_option("--y", pf.y, "point y coordinate (rational string)");
  derive->add_flag("--infinity", pf.infinity, "use the point at infinity");

  auto* solve = app.add_subcommand("solve", "full pipeline from a request file");
  solve->add_option("file", input_path, "request JSON (\"-\" for stdin)");

  auto* verify = app.add_subcommand(
      "verify", "check sum a_i x_i^4 = sum a_i y_i^4 exactly");
  verify->add_option("file", input_path,
                     "JSON with \"spec\", \"x\", \"y\" (\"-\" for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends: print and leave with status 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // report to stderr, but own the exit code
    return kExitInputError;
  }

  if (construct->parsed()) {
    quartic::CurveConstruction cons =
        quartic::build_general(quartic::spec_from_json(parse(input_path)));
    quartic::Json out = quartic::to_json(cons);
    if (rescale) out["integral"] = integral_block(cons.curve);
    emit(out);
    return kExitOk;
  }

  if (search->parsed()) {
    quartic::WeierstrassCurve curve = quartic::curve_from_json(parse(input_path));
    quartic::SearchBounds bounds{num_bound, den_bound};
    quartic::Json out;
    if (rescale) {
      quartic::BigInt unit;
      quartic::WeierstrassCurve scaled = quartic::integral_model(curve, &unit);
      out["unit"] = unit.to_string();
      out["curve"] = quartic::to_json(scaled);
      curve = scaled;
    }
    quartic::Json points = quartic::Json::array();
    for (const quartic::CurvePoint& p : quartic::search_points(curve, bounds)) {
      points.push_back(quartic::to_json(p));
    }
    out["points"] = std::move(points);
    emit(out);
    return kExitOk;
  }

  if (derive->parsed()) {
    quartic::CurveConstruction cons = load_construction(parse(input_path));
    quartic::IntegerSolution s = quartic::derive(cons, pf.to_point());
    quartic::SolutionEntry entry{1, std::move(s), false};
    entry.verified = quartic::verify_identity(cons.spec, entry.solution.x,
                                              entry.solution.y);
    emit(quartic::to_json(entry));
    return entry.verified ? kExitOk : kExitVerifyFailed;
  }

  if (solve->parsed()) {
    quartic::SolutionReport report =
        quartic::solve(quartic::request_from_json(parse(input_path)));
    emit(quartic::to_json(report));
    return report.all_verified ? kExitOk : kExitVerifyFailed;
  }

  if (verify->parsed()) {
    quartic::Json j = parse(input_path);
    quartic::EquationSpec spec = quartic::spec_from_json(j.at("spec"));
    std::vector<quartic::BigInt> x, y;
    for (const quartic::Json& v : j.at("x")) x.push_back(quartic::bigint_from_json(v));
    for (const quartic::Json& v : j.at("y")) y.push_back(quartic::bigint_from_json(v));
    bool ok = quartic::verify_identity(spec, x, y);
    emit(quartic::Json{{"verified", ok}});
    return ok ? kExitOk : kExitVerifyFailed;
  }

  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const quartic::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }
}
