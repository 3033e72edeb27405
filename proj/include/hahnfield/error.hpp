#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hahn {

/// Domain failures raised by the algebra layer. The CLI maps these to exit code 1.
enum class ErrorKind {
  MixedPresentations,
  ComponentOutOfClass,
  InvalidChainPoint,
  InvalidPresentation,
  NotDivisible,
  DivisionByZero,
  NonPositiveRadicand,
  NoExactRoot,
  CoefficientOutsideField,
  MixedCarriers,
  LeadingOfZero,
  NotDivisibleExponent,
  NonPositive,
  UnreachableBound,
  NotFinite,
  NotIntegerPart,
  ResidueMismatch,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class SyntaxErrorKind { Syntax, UnknownIdent, ExponentOutsideGroup, BadOverride };

const char* to_string(SyntaxErrorKind kind);

/// Failure of one of the text front ends; `position` is a byte offset into the source.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SyntaxErrorKind kind, std::size_t position, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + " at " + std::to_string(position) +
                           ": " + detail),
        kind_(kind),
        position_(position) {}

  SyntaxErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  SyntaxErrorKind kind_;
  std::size_t position_;
};

}  // namespace hahn
