#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

enum class SymbolKind : std::uint8_t {
  SetVar,
  NewVar,
  Membership,
  Equality,
  Negation,
  Implication,
  Biconditional,
  Conjunction,
  Disjunction,
  Exists,
  Forall,
  LeftParen,
  RightParen,
  Semicolon,
  Predicate,
};

/// One letter of the extended alphabet: set variables x1, x2, ..., the new
/// variables ?x ?y ?z ?a ?b ?c ?y1 ?y2 ..., eleven logical symbols, the
/// argument separator and predicate names.
class Symbol {
 public:
  static Symbol set_var(std::uint64_t index);
  /// `letter` is one of x y z a b c; a positive `subscript` is only valid
  /// with `y` and denotes y_k.
  static Symbol new_var(char letter, std::uint64_t subscript = 0);
  static Symbol predicate(std::string name);
  /// Any kind other than SetVar, NewVar and Predicate.
  static Symbol op(SymbolKind kind);

  SymbolKind kind() const noexcept { return kind_; }
  std::uint64_t index() const noexcept { return index_; }
  char letter() const noexcept { return letter_; }
  const std::string& name() const noexcept { return name_; }

  bool is_variable() const noexcept {
    return kind_ == SymbolKind::SetVar || kind_ == SymbolKind::NewVar;
  }
  bool is_set_var() const noexcept { return kind_ == SymbolKind::SetVar; }
  bool is_new_var() const noexcept { return kind_ == SymbolKind::NewVar; }
  bool is_predicate() const noexcept { return kind_ == SymbolKind::Predicate; }

  /// Token-grammar spelling, e.g. `x12`, `?y3`, `<->`, `SUS`.
  std::string text() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol&, const Symbol&) = default;

 private:
  Symbol() = default;

  SymbolKind kind_ = SymbolKind::LeftParen;
  std::uint64_t index_ = 0;
  char letter_ = 0;
  std::string name_;
};

/// A finite sequence of symbols. Its length is the number of symbols, never
/// the number of characters of its rendering.
using Word = std::vector<Symbol>;

/// |u|_a: number of positions of `word` holding `symbol`.
std::size_t count(std::span<const Symbol> word, const Symbol& symbol);

std::size_t count_kind(std::span<const Symbol> word, SymbolKind kind);

/// Splits `text` into tokens: whitespace separates tokens and `( ) ;` also
/// stand alone. Throws Error(UnknownToken | MalformedVariable) with the
/// 1-based character offset of the bad token.
Word tokenize(std::string_view text);

/// Single-space separated rendering; tokenize(render_text(w)) == w.
std::string render_text(std::span<const Symbol> word);

/// True for names usable as predicates: uppercase identifiers other than the
/// quantifier tokens `E` and `A`.
bool is_predicate_name(std::string_view name);

}  // namespace cantor
