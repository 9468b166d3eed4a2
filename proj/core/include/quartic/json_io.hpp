#pragma once

#include <nlohmann/json.hpp>

#include "quartic/builder.hpp"
#include "quartic/curve.hpp"
#include "quartic/descent.hpp"
#include "quartic/pipeline.hpp"

namespace quartic {

/// JSON encoding used by the CLI and fixtures. Key order is fixed and all
/// big values travel as decimal (or "num/den") strings, so output for a
/// given input is byte-identical across runs.
using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const BigRat& v);
Json to_json(const CurvePoint& p);
Json to_json(const WeierstrassCurve& c);
Json to_json(const EquationSpec& s);
Json to_json(const CurveConstruction& c);
Json to_json(const IntegerSolution& s);
Json to_json(const SolutionEntry& e);
Json to_json(const SolutionReport& r);

BigInt bigint_from_json(const Json& j);
BigRat bigrat_from_json(const Json& j);
CurvePoint point_from_json(const Json& j);
WeierstrassCurve curve_from_json(const Json& j);
EquationSpec spec_from_json(const Json& j);
/// Rebuilds the construction from its embedded spec and cross-checks the
/// stored curve and L1/G/H against the rebuilt values.
CurveConstruction construction_from_json(const Json& j);
SearchBounds bounds_from_json(const Json& j);
SolveRequest request_from_json(const Json& j);

}  // namespace quartic
