#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace mirrorcat {

// Failure family decides the CLI exit code: bad input exits 2, a failed
// mathematical check exits 1.
enum class ErrorKind { input, math };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define MIRRORCAT_ERROR(Name, Kind)                                              \
  struct Name : Error {                                                          \
    explicit Name(const std::string& w) : Error(ErrorKind::Kind, w) {}           \
  }

MIRRORCAT_ERROR(ParseError, input);
MIRRORCAT_ERROR(SchemaError, input);
MIRRORCAT_ERROR(ResolutionError, input);
MIRRORCAT_ERROR(ShapeError, input);
MIRRORCAT_ERROR(UnknownLabel, input);
MIRRORCAT_ERROR(InvalidInput, input);
MIRRORCAT_ERROR(InvalidLevel, input);
MIRRORCAT_ERROR(InvalidRank, input);
MIRRORCAT_ERROR(BudgetExceeded, input);

MIRRORCAT_ERROR(DualityError, math);
MIRRORCAT_ERROR(ConvergenceError, math);
MIRRORCAT_ERROR(PreconditionError, math);
// A referenced category failed its own validation.
MIRRORCAT_ERROR(CategoryInvalid, math);

#undef MIRRORCAT_ERROR

// Verlinde sum did not land on a nonnegative integer; carries the worst
// offending triple and its residual.
struct IntegralityError : Error {
  IntegralityError(const std::string& w, std::array<int, 3> worst_triple, double worst_residual)
      : Error(ErrorKind::math, w), triple(worst_triple), residual(worst_residual) {}
  std::array<int, 3> triple{};
  double residual = 0.0;
};

}  // namespace mirrorcat
