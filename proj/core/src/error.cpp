#include "heckeforge/error.hpp"

namespace heckeforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGCM: return "NotGCM";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::InfiniteParabolic: return "InfiniteParabolic";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::CentralityViolation: return "CentralityViolation";
    case ErrorKind::NotInThetaSpan: return "NotInThetaSpan";
    case ErrorKind::BasisEscape: return "BasisEscape";
    case ErrorKind::NotCentralInput: return "NotCentralInput";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace heckeforge
