#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

/// Failure categories surfaced by the library. The CLI maps every one of
/// these to exit code 2 (input error).
enum class errc {
  zero_denominator,
  empty_input,
  invalid_input,
  invalid_spec,
  degenerate_params,
  singular_curve,
  not_on_curve,
  point_at_infinity,
  non_integral_model,
  no_generator_found,
};

constexpr const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::zero_denominator:   return "ZeroDenominator";
    case errc::empty_input:        return "EmptyInput";
    case errc::invalid_input:      return "InvalidInput";
    case errc::invalid_spec:       return "InvalidSpec";
    case errc::degenerate_params:  return "DegenerateParams";
    case errc::singular_curve:     return "SingularCurve";
    case errc::not_on_curve:       return "NotOnCurve";
    case errc::point_at_infinity:  return "PointAtInfinity";
    case errc::non_integral_model: return "NonIntegralModel";
    case errc::no_generator_found: return "NoGeneratorFound";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace quartic
