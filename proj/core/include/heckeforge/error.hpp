#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heckeforge {

enum class ErrorKind {
  // rootdata
  NotGCM,
  NotFiniteType,
  RankMismatch,
  UnknownPreset,
  // affine_weyl
  InfiniteParabolic,
  // exactpoly
  NotDivisible,
  // hecke
  ContextMismatch,
  // bernstein / central
  IntegralityViolation,
  ParityViolation,
  CentralityViolation,
  NotInThetaSpan,
  // parahoric
  BasisEscape,
  NotCentralInput,
  // dual weights
  OracleMismatch,
  NegativeMultiplicity,
  // io
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; `kind()` names the
// violated contract so callers (and the CLI exit-code logic) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace heckeforge
