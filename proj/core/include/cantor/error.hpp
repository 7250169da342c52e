#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class ErrorCode {
  // tokenizer / parser
  UnknownToken,
  MalformedVariable,
  NotAFormula,
  ArityMismatch,
  UnknownPredicate,
  // substitution
  IndexOutOfRange,
  EmptyWord,
  OverlappingIntervals,
  DuplicateSource,
  // abbreviation schemes
  CircularReference,
  VariableClash,
  FreeSetVariable,
  ForeignNewVariable,
  InvalidParameters,
  DuplicatePredicate,
  BadSchemeLine,
  UncoveredParameter,
  LengthMismatch,
  // digraphs and evaluation
  BadHeader,
  VertexOutOfRange,
  UnboundVariable,
  PredicateNotExpanded,
  NotASentence,
  AmbiguousPair,
  NotASurjection,
  InDegreeTooLarge,
  SizeGuardExceeded,
  GuardExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `position` is a 1-based symbol index
/// (parser) or line number (file loaders) when one is meaningful.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace cantor
