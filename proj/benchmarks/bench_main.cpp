// Microbenchmarks for the hot paths: curve construction, the group law,
// point search, back-substitution, and identity verification.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "quartic/builder.hpp"
#include "quartic/curve.hpp"
#include "quartic/descent.hpp"
#include "quartic/pipeline.hpp"
#include "quartic/search.hpp"

namespace {

using quartic::BigInt;
using quartic::BigRat;
using quartic::CurveConstruction;
using quartic::CurvePoint;
using quartic::EquationSpec;
using quartic::ParamPair;

// x1^4 + x2^4 + x3^4 both sides, p_2 = -10 p_3.
EquationSpec three_term_spec() {
  EquationSpec s;
  s.n = 3;
  s.coeffs = {BigInt(1), BigInt(1), BigInt(1)};
  s.params = {ParamPair{BigRat(-10), BigRat(0)}};
  return s;
}

// x1^4 + ... + x4^4 both sides, p_2 = 3 p_4, p_3 = -7 p_4.
EquationSpec four_term_spec() {
  EquationSpec s;
  s.n = 4;
  s.coeffs = {BigInt(1), BigInt(1), BigInt(1), BigInt(1)};
  s.params = {ParamPair{BigRat(3), BigRat(0)}, ParamPair{BigRat(-7), BigRat(0)}};
  return s;
}

CurvePoint three_term_generator() {
  return CurvePoint{BigRat(450), BigRat(6210)};
}

}  // namespace

static void BM_BuildGeneral(benchmark::State& state) {
  const EquationSpec spec = four_term_spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartic::build_general(spec));
  }
}
BENCHMARK(BM_BuildGeneral);

static void BM_PointAdd(benchmark::State& state) {
  const CurveConstruction cons = quartic::build_general(three_term_spec());
  const CurvePoint p = three_term_generator();
  const CurvePoint q = cons.curve.scalar_mul(2, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cons.curve.add(p, q));
  }
}
BENCHMARK(BM_PointAdd);

static void BM_ScalarMul(benchmark::State& state) {
  const CurveConstruction cons = quartic::build_general(three_term_spec());
  const CurvePoint p = three_term_generator();
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cons.curve.scalar_mul(k, p));
  }
}
BENCHMARK(BM_ScalarMul)->Arg(2)->Arg(4)->Arg(8);

static void BM_Derive(benchmark::State& state) {
  const CurveConstruction cons = quartic::build_general(three_term_spec());
  const CurvePoint p3 = cons.curve.scalar_mul(3, three_term_generator());
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartic::derive(cons, p3));
  }
}
BENCHMARK(BM_Derive);

static void BM_Search(benchmark::State& state) {
  const CurveConstruction cons = quartic::build_general(three_term_spec());
  const quartic::SearchBounds bounds{static_cast<std::uint32_t>(state.range(0)), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartic::search_points(cons.curve, bounds));
  }
}
BENCHMARK(BM_Search)->Arg(100)->Arg(500);

static void BM_VerifyIdentity(benchmark::State& state) {
  const EquationSpec spec = three_term_spec();
  const std::vector<BigInt> x{BigInt("8558611539982847"),
                              BigInt("12155858463560286"),
                              BigInt("14828780671704361")};
  const std::vector<BigInt> y{BigInt("8828891360220313"),
                              BigInt("11501813568364388"),
                              BigInt("15099060491941827")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartic::verify_identity(spec, x, y));
  }
}
BENCHMARK(BM_VerifyIdentity);

BENCHMARK_MAIN();
