#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::MalformedVariable: return "MalformedVariable";
    case ErrorCode::NotAFormula: return "NotAFormula";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnknownPredicate: return "UnknownPredicate";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::OverlappingIntervals: return "OverlappingIntervals";
    case ErrorCode::DuplicateSource: return "DuplicateSource";
    case ErrorCode::CircularReference: return "CircularReference";
    case ErrorCode::VariableClash: return "VariableClash";
    case ErrorCode::FreeSetVariable: return "FreeSetVariable";
    case ErrorCode::ForeignNewVariable: return "ForeignNewVariable";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::DuplicatePredicate: return "DuplicatePredicate";
    case ErrorCode::BadSchemeLine: return "BadSchemeLine";
    case ErrorCode::UncoveredParameter: return "UncoveredParameter";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::PredicateNotExpanded: return "PredicateNotExpanded";
    case ErrorCode::NotASentence: return "NotASentence";
    case ErrorCode::AmbiguousPair: return "AmbiguousPair";
    case ErrorCode::NotASurjection: return "NotASurjection";
    case ErrorCode::InDegreeTooLarge: return "InDegreeTooLarge";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(message), code_(code), position_(position) {}

}  // namespace cantor
