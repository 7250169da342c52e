#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/formula.hpp"
#include "cantor/scheme.hpp"

namespace cantor {

/// The nine digraph predicates in scheme order.
inline constexpr std::array<std::string_view, 9> kPredicateNames = {
    "SUS", "SI", "SIN", "DO", "DOU", "OPA", "REL", "FUN", "SUR"};

/// Reference lengths |E_1| ... |E_9|; none of the expansions uses a negation.
inline constexpr std::array<std::size_t, 9> kExpansionLengths = {17, 17,  29,  25, 37,
                                                                 117, 165, 325, 485};
inline constexpr std::size_t kPhiLength = 494;
inline constexpr std::size_t kPhiNegations = 1;

/// Positions (1-based) where the printed display of the sentence keeps the
/// new variables ?y and ?x instead of x18 and x19. Everywhere else the
/// printed word and the constructed one agree.
inline constexpr std::array<std::size_t, 2> kPrintedPhiResidualPositions = {165, 203};

/// The scheme in the textual scheme format (also shipped as data/u0.scheme).
std::string_view builtin_scheme_text();

/// Validated (strict mode) scheme of the nine shortcuts SUS ... SUR.
const Scheme& builtin_scheme();

struct NamedExpansion {
  std::string name;
  std::size_t index = 0;  // 1..9
  FormulaTree formula;
  std::size_t expected_length = 0;
  std::size_t expected_negations = 0;
};

/// E_1 ... E_9 with their lengths and negation counts checked; throws
/// Error(LengthMismatch) naming the index on any disagreement.
const std::vector<NamedExpansion>& emit_expansions();

/// (A x18 ! (E x19 E_9[?x := x19, ?y := x18])), checked to have length 494,
/// one negation and no free variable.
const FormulaTree& emit_phi();

/// Free-variable order of each predicate's expansion, e.g. OPA(?x; ?y; ?z).
const std::vector<Symbol>& predicate_params(std::size_t index);

}  // namespace cantor
