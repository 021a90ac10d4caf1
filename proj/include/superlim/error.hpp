#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superlim {

enum class ErrorKind {
  ZeroSeries,
  DivergentLimit,
  IncompleteSeries,
  ZeroPolynomial,
  BadMultiplicity,
  UnsupportedSingularAxis,
  BadAngle,
  SingularMatrix,
  SingularPoint,
  UnsupportedPoint,
  UnknownContraction,
  UnknownSystem,
  DegenerateQuadruple,
  DegenerateCrossRatio,
  WrongSignature,
  DegenerateSextuple,
  RankDeficient,
  NoMatch,
  ParseError,
  UnsupportedFormat,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI, the Python bindings) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace superlim
