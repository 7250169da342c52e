#include "cantor/cantor_sentence.hpp"

#include "cantor/error.hpp"

namespace cantor {

namespace {

constexpr std::string_view kSchemeText =
    R"(# Abbreviation scheme for the Cantor sentence, one shortcut per line.
# Predicates in order: SUS SI SIN DO DOU OPA REL FUN SUR.
SUS ( ?x ; ?y ) := ( A x1 ( ( x1 in ?x ) -> ( x1 in ?y ) ) )
SI ( ?x ; ?y ) := ( A x2 ( ( x2 in ?x ) <-> ( x2 = ?y ) ) )
SIN ( ?x ; ?y ) := ( A x3 ( SI ( x3 ; ?y ) <-> ( x3 = ?x ) ) )
DO ( ?x ; ?y ; ?z ) := ( A x4 ( ( x4 in ?x ) <-> ( ( x4 = ?y ) | ( x4 = ?z ) ) ) )
DOU ( ?x ; ?y ; ?z ) := ( A x5 ( DO ( x5 ; ?y ; ?z ) <-> ( x5 = ?x ) ) )
OPA ( ?x ; ?y ; ?z ) := ( E x6 ( E x7 ( DOU ( ?x ; x6 ; x7 ) & ( SIN ( x6 ; ?y ) & DOU ( x7 ; ?y ; ?z ) ) ) ) )
REL ( ?x ; ?y ) := ( A x8 ( ( x8 in ?x ) -> ( E x9 ( E x10 ( OPA ( x8 ; x9 ; x10 ) & ( ( x9 in ?y ) & SUS ( x10 ; ?y ) ) ) ) ) ) )
FUN ( ?x ; ?y ) := ( REL ( ?x ; ?y ) & ( A x11 ( ( x11 in ?y ) -> ( E x12 ( A x13 ( ( x13 = x12 ) <-> ( ( x13 in ?x ) & ( E x14 OPA ( x13 ; x11 ; x14 ) ) ) ) ) ) ) ) )
SUR ( ?x ; ?y ) := ( FUN ( ?x ; ?y ) & ( A x15 ( SUS ( x15 ; ?y ) -> ( E x16 ( E x17 ( ( x16 in ?x ) & OPA ( x16 ; x17 ; x15 ) ) ) ) ) ) )
)";

std::vector<NamedExpansion> build_expansions() {
  const Scheme& scheme = builtin_scheme();
  std::vector<FormulaTree> trees = expand(scheme);
  std::vector<NamedExpansion> out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    NamedExpansion e{std::string(kPredicateNames[i]), i + 1, std::move(trees[i]),
                     kExpansionLengths[i], 0};
    const std::size_t negations = count_kind(e.formula.word(), SymbolKind::Negation);
    if (e.formula.length() != e.expected_length || negations != e.expected_negations) {
      throw Error(ErrorCode::LengthMismatch,
                  "E_" + std::to_string(e.index) + " (" + e.name + "): length " +
                      std::to_string(e.formula.length()) + " expected " +
                      std::to_string(e.expected_length) + ", negations " +
                      std::to_string(negations) + " expected " +
                      std::to_string(e.expected_negations));
    }
    out.push_back(std::move(e));
  }
  return out;
}

FormulaTree build_phi() {
  const FormulaTree& sur = emit_expansions().back().formula;
  const FormulaTree body =
      instantiate(sur, {{Symbol::new_var('x'), Symbol::set_var(19)},
                        {Symbol::new_var('y'), Symbol::set_var(18)}});

  Word word;
  word.reserve(kPhiLength);
  word.push_back(Symbol::op(SymbolKind::LeftParen));
  word.push_back(Symbol::op(SymbolKind::Forall));
  word.push_back(Symbol::set_var(18));
  word.push_back(Symbol::op(SymbolKind::Negation));
  word.push_back(Symbol::op(SymbolKind::LeftParen));
  word.push_back(Symbol::op(SymbolKind::Exists));
  word.push_back(Symbol::set_var(19));
  word.insert(word.end(), body.word().begin(), body.word().end());
  word.push_back(Symbol::op(SymbolKind::RightParen));
  word.push_back(Symbol::op(SymbolKind::RightParen));

  FormulaTree phi = parse(std::move(word), {}, Dialect::ZF);
  const std::size_t negations = count_kind(phi.word(), SymbolKind::Negation);
  if (phi.length() != kPhiLength || negations != kPhiNegations) {
    throw Error(ErrorCode::LengthMismatch,
                "phi: length " + std::to_string(phi.length()) + " expected " +
                    std::to_string(kPhiLength) + ", negations " + std::to_string(negations) +
                    " expected " + std::to_string(kPhiNegations));
  }
  if (!is_sentence(phi)) {
    throw Error(ErrorCode::NotASentence, "phi has a free variable occurrence");
  }
  return phi;
}

}  // namespace

std::string_view builtin_scheme_text() { return kSchemeText; }

const Scheme& builtin_scheme() {
  static const Scheme scheme = load_scheme(kSchemeText, SchemeMode::Strict);
  return scheme;
}

const std::vector<NamedExpansion>& emit_expansions() {
  static const std::vector<NamedExpansion> expansions = build_expansions();
  return expansions;
}

const FormulaTree& emit_phi() {
  static const FormulaTree phi = build_phi();
  return phi;
}

const std::vector<Symbol>& predicate_params(std::size_t index) {
  return builtin_scheme().shortcut(index).params;
}

}  // namespace cantor
