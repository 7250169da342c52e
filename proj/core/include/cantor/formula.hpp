#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantor/symbol.hpp"

namespace cantor {

struct PredicateSignature {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const PredicateSignature&, const PredicateSignature&) = default;
};

using SignatureSet = std::vector<PredicateSignature>;

/// ZF accepts only set variables and the eleven logical symbols. ZFPrime
/// additionally admits new variables, `;` and the predicates of a signature.
enum class Dialect { ZF, ZFPrime };

enum class NodeKind {
  Membership,
  Equality,
  Predicate,
  Not,
  Implies,
  Iff,
  And,
  Or,
  Exists,
  Forall,
};

/// Inclusive 1-based interval [first, last] of positions in a word.
struct Span {
  std::size_t first = 1;
  std::size_t last = 0;

  std::size_t size() const noexcept { return last + 1 - first; }
  bool contains(const Span& other) const noexcept {
    return first <= other.first && other.last <= last;
  }
  bool disjoint(const Span& other) const noexcept {
    return last < other.first || other.last < first;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Node {
  NodeKind kind = NodeKind::Membership;
  Span span;
  /// Operands of an atom in order, or the single bound variable of a
  /// quantifier. Empty for connectives.
  std::vector<Symbol> vars;
  /// Predicate name, only for NodeKind::Predicate.
  std::string predicate;
  std::vector<Node> children;

  bool is_atomic() const noexcept {
    return kind == NodeKind::Membership || kind == NodeKind::Equality ||
           kind == NodeKind::Predicate;
  }
  bool is_quantifier() const noexcept {
    return kind == NodeKind::Exists || kind == NodeKind::Forall;
  }
};

/// Parse tree of a ZF' formula together with the word it was read from.
class FormulaTree {
 public:
  FormulaTree(Word word, Node root) : word_(std::move(word)), root_(std::move(root)) {}

  const Word& word() const noexcept { return word_; }
  const Node& root() const noexcept { return root_; }
  std::size_t length() const noexcept { return word_.size(); }
  std::string text() const { return render_text(word_); }

 private:
  Word word_;
  Node root_;
};

/// Recursive descent over the eight formula cases. Throws
/// Error(NotAFormula) at the earliest position where `word` stops being a
/// prefix of a formula, Error(UnknownPredicate) or Error(ArityMismatch).
FormulaTree parse(Word word, const SignatureSet& signatures = {},
                  Dialect dialect = Dialect::ZFPrime);

FormulaTree parse_text(std::string_view text, const SignatureSet& signatures = {},
                       Dialect dialect = Dialect::ZFPrime);

/// Rebuilds the word of a subtree from its structure alone.
Word render(const Node& node);

enum class CaseLabel {
  Atomic,
  Negation,
  Implication,
  Biconditional,
  Conjunction,
  Disjunction,
  Existential,
  Universal,
};

std::string_view to_string(CaseLabel label);

struct Classification {
  CaseLabel label = CaseLabel::Atomic;
  /// Immediate subformulas: none for atoms, one for negation and
  /// quantifiers, two for binary connectives.
  std::vector<const Node*> constituents;
  std::optional<Symbol> bound;
};

Classification classify(const Node& node);
inline Classification classify(const FormulaTree& tree) { return classify(tree.root()); }

/// The unique non-crossing matching of a word over { ( , ) }, as 1-based
/// (open, close) pairs sorted by the opening position; nullopt when none
/// exists. Throws Error(InvalidArgument) if another symbol occurs.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> good_bracketing(
    std::span<const Symbol> brackets);

/// Subsequence of `word` consisting of its bracket symbols.
Word bracket_subsequence(std::span<const Symbol> word);

struct Occurrence {
  Symbol variable;
  std::size_t position = 0;  // 1-based
  bool bound = false;
};

/// Every variable occurrence in word order. The variable written right after
/// a quantifier counts as a bound occurrence.
std::vector<Occurrence> occurrences(const FormulaTree& tree);

bool is_sentence(const FormulaTree& tree);

/// All subtrees in pre-order (the root first).
std::vector<const Node*> subformulas(const Node& root);

/// Set variables bound by some quantifier anywhere in the subtree.
std::vector<Symbol> quantified_variables(const Node& root);

struct SymbolMismatch {
  std::size_t position = 0;  // 1-based
  std::optional<Symbol> expected;
  std::optional<Symbol> actual;
};

/// Position-wise comparison; a length difference shows up as trailing
/// mismatches with one side absent.
std::vector<SymbolMismatch> word_diff(std::span<const Symbol> expected,
                                      std::span<const Symbol> actual);

}  // namespace cantor
