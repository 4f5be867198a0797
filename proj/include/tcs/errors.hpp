#ifndef TCS_ERRORS_HPP
#define TCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tcs {

// Error categories, each with a stable process exit code for the CLI.
enum class ErrorCode : int {
  config_parse = 2,
  schema = 3,
  invalid_step = 4,
  non_admissible_b = 5,
  caustic_detected = 6,
  division_near_caustic = 7,
  grid_mismatch = 8,
  too_few_points = 9,
  degenerate_symbol = 10,
  zero_norm = 11,
  grid_too_narrow = 12,
  config_invalid = 13,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

#define TCS_DEFINE_ERROR(NAME, CODE)                      \
  class NAME : public Error {                             \
   public:                                                \
    explicit NAME(const std::string& what)                \
        : Error(ErrorCode::CODE, what) {}                 \
  }

TCS_DEFINE_ERROR(ConfigParseError, config_parse);
TCS_DEFINE_ERROR(SchemaError, schema);
TCS_DEFINE_ERROR(InvalidStep, invalid_step);
TCS_DEFINE_ERROR(NonAdmissibleB, non_admissible_b);
TCS_DEFINE_ERROR(CausticDetected, caustic_detected);
TCS_DEFINE_ERROR(DivisionNearCaustic, division_near_caustic);
TCS_DEFINE_ERROR(GridMismatch, grid_mismatch);
TCS_DEFINE_ERROR(TooFewPoints, too_few_points);
TCS_DEFINE_ERROR(DegenerateSymbol, degenerate_symbol);
TCS_DEFINE_ERROR(ZeroNorm, zero_norm);
TCS_DEFINE_ERROR(GridTooNarrow, grid_too_narrow);
TCS_DEFINE_ERROR(ConfigInvalid, config_invalid);

#undef TCS_DEFINE_ERROR

}  // namespace tcs

#endif  // TCS_ERRORS_HPP
