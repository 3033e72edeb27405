#include "hahnfield/error.hpp"

namespace hahn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedPresentations: return "MixedPresentations";
    case ErrorKind::ComponentOutOfClass: return "ComponentOutOfClass";
    case ErrorKind::InvalidChainPoint: return "InvalidChainPoint";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonPositiveRadicand: return "NonPositiveRadicand";
    case ErrorKind::NoExactRoot: return "NoExactRoot";
    case ErrorKind::CoefficientOutsideField: return "CoefficientOutsideField";
    case ErrorKind::MixedCarriers: return "MixedCarriers";
    case ErrorKind::LeadingOfZero: return "LeadingOfZero";
    case ErrorKind::NotDivisibleExponent: return "NotDivisibleExponent";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::UnreachableBound: return "UnreachableBound";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NotIntegerPart: return "NotIntegerPart";
    case ErrorKind::ResidueMismatch: return "ResidueMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "?";
}

const char* to_string(SyntaxErrorKind kind) {
  switch (kind) {
    case SyntaxErrorKind::Syntax: return "SyntaxError";
    case SyntaxErrorKind::UnknownIdent: return "UnknownIdent";
    case SyntaxErrorKind::ExponentOutsideGroup: return "ExponentOutsideGroup";
    case SyntaxErrorKind::BadOverride: return "BadOverride";
  }
  return "?";
}

}  // namespace hahn
