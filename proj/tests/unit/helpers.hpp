#pragma once

// Shared reference data for the test suites. Every number here was computed
// independently of the library (exact rational arithmetic in a separate
// script) and frozen; tests compare library output against these values
// with exact equality.

#include <initializer_list>
#include <string>
#include <vector>

#include "quartic/builder.hpp"
#include "quartic/curve.hpp"
#include "quartic/descent.hpp"

namespace refs {

inline quartic::EquationSpec make_spec(
    std::initializer_list<const char*> coeffs,
    std::initializer_list<std::pair<const char*, const char*>> params) {
  quartic::EquationSpec s;
  s.n = coeffs.size();
  for (const char* c : coeffs) s.coeffs.emplace_back(c);
  for (auto [a, b] : params) {
    s.params.push_back(quartic::ParamPair{quartic::BigRat(a), quartic::BigRat(b)});
  }
  return s;
}

inline quartic::CurvePoint pt(const char* x, const char* y) {
  return quartic::CurvePoint{quartic::BigRat(x), quartic::BigRat(y)};
}

inline std::vector<quartic::BigInt> ints(std::initializer_list<const char*> v) {
  std::vector<quartic::BigInt> r;
  for (const char* s : v) r.emplace_back(s);
  return r;
}

// One worked example: the equation data, the curve it produces, the
// back-substitution constants, and a known infinite-order point.
struct Example {
  quartic::EquationSpec spec;
  const char* f;
  const char* g;
  const char* h;
  const char* L1;
  const char* G;
  const char* H;
  quartic::CurvePoint generator;
};

// a x1^4 + 2 x2^4 + 3 x3^4 both sides.
inline Example coeff123() {
  return {make_spec({"1", "2", "3"}, {{"4", "0"}}),
          "-363", "39600", "-1440000", "1200", "-11", "1",
          pt("3625/16", "46525/64")};
}

// x1^4 + x2^4 + 61 x3^4; generator far outside naive search range.
inline Example coeff61() {
  return {make_spec({"1", "1", "61"}, {{"2", "0"}}),
          "-11907", "47245842", "-62489000484", "249978", "-63", "1",
          pt("2613213887380271422/612348332222929",
             "-35386313782867169078293498/15152971591283964136217")};
}

// Unit coefficients, n = 3; the smallest of the worked examples.
inline Example unit3() {
  return {make_spec({"1", "1", "1"}, {{"-10", "0"}}),
          "-243", "-7290", "-72900", "270", "9", "1",
          pt("450", "6210")};
}

// x1^4 + x2^4 + 19 x3^4 + x4^4; generator again supplied, not searched.
inline Example coeff19() {
  return {make_spec({"1", "1", "19", "1"}, {{"2", "0"}, {"-4", "0"}}),
          "-15987", "84930390", "-150396596100", "-387810", "73", "1",
          pt("8832851584572306/887637201025",
             "-260518741182457285866354/836282950759698625")};
}

// x1^4 + 1000 (x2^4 + x3^4 + x4^4); curve degenerates to Y^2 = X^3 + h.
inline Example coeff1000() {
  return {make_spec({"1", "1000", "1000", "1000"}, {{"2", "0"}, {"-3", "0"}}),
          "0", "0", "-324000000", "18000", "0", "1",
          pt("1000", "26000")};
}

// Unit coefficients, n = 4.
inline Example unit4() {
  return {make_spec({"1", "1", "1", "1"}, {{"3", "0"}, {"-7", "0"}}),
          "-27", "-2592", "-82944", "288", "3", "1",
          pt("328", "5608")};
}

inline std::vector<Example> all_examples() {
  return {coeff123(), coeff61(), unit3(), coeff19(), coeff1000(), unit4()};
}

// Known multiples of the two searchable generators.
inline quartic::CurvePoint unit3_2p() {
  return pt("606357/2116", "-115780401/97336");
}
inline quartic::CurvePoint unit3_3p() {
  return pt("255306774610/164070481", "-118288360159623370/2101578791129");
}
inline quartic::CurvePoint unit4_2p() {
  return pt("48232180/491401", "203244176836/344472101");
}
inline quartic::CurvePoint unit4_3p() {
  return pt("61771836632004160/797318963764569",
            "-3119953836085429109330528/22513765616829041228253");
}

// A canonical derived identity: k-th multiple of the example's generator
// pulls back to x, y with the recorded denominator-clearing scale.
struct Identity {
  Example example;
  unsigned k;
  const char* scale;
  std::vector<quartic::BigInt> x;
  std::vector<quartic::BigInt> y;
};

inline std::vector<Identity> all_identities() {
  return {
      {coeff123(), 1, "3072",
       ints({"1447", "4181", "2441"}),
       ints({"5169", "459", "1281"})},
      {coeff61(), 1, "2772993801204965436927711",
       ints({"68773908411035781436179", "235298807112488175416275",
             "21434423538289790762638"}),
       ints({"120584031079948181257985", "183488684443575775594469",
             "73244546207202190584444"})},
      {unit3(), 1, "3",
       ints({"19", "74", "117"}),
       ints({"21", "64", "119"})},
      {unit3(), 2, "2920080",
       ints({"9765331", "17948013", "43856069"}),
       ints({"15963647", "18127091", "43676991"})},
      {unit3(), 3, "56742627360483",
       ints({"8558611539982847", "12155858463560286", "14828780671704361"}),
       ints({"8828891360220313", "11501813568364388", "15099060491941827"})},
      {coeff19(), 1, "1743649952333971633125",
       ints({"121805029473902594771", "1311156383172922233299",
             "1579602414016369821569", "1355897388313496831344"}),
       ints({"1445379398594646027434", "1490120403735220625479",
             "1221674372891773037209", "2923081816382045453549"})},
      {coeff1000(), 1, "18",
       ints({"8", "24", "25", "29"}),
       ints({"44", "23", "27", "28"})},
      {unit4(), 1, "18",
       ints({"207", "371", "412", "430"}),
       ints({"271", "289", "330", "494"})},
      {unit4(), 2, "12400995636",
       ints({"325492151", "12726487787", "21179177332", "54989935512"}),
       ints({"4178891303", "29631866877", "38084556422", "50485552058"})},
      {unit4(), 3, "202623890551461371054277",
       ints({"42991017309903083127769", "66024062825630069949851",
             "268647953377091441004128", "479051337852035695438249"}),
       ints({"152006097445436236205389", "261021177580969389283009",
             "284054223096696376105091", "463645068132430760337286"})},
  };
}

// Synthetic spec whose curve has a rational 2-torsion point at the origin:
// coefficients (1, -8, 1) with p_2 = p_3 - 1/6 give f=45, g=560, h=0.
inline quartic::EquationSpec torsion_spec() {
  return make_spec({"1", "-8", "1"}, {{"1", "-1/6"}});
}

// Coefficients (3, 1, 1) produce a curve with non-integral f, g, h.
inline quartic::EquationSpec non_integral_spec() {
  return make_spec({"3", "1", "1"}, {{"1", "0"}});
}

}  // namespace refs
