#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "cantor/digraph.hpp"
#include "cantor/formula.hpp"

namespace cantor {

/// Finite realization of variables by vertices. It must cover every free
/// variable of the formula being evaluated; extra bindings are ignored.
using Environment = std::map<Symbol, Vertex>;

/// Parses `x1=3,x2=1,?x=2`.
Environment parse_environment(std::string_view text);

struct EvalOptions {
  /// Cache the value of each quantified subformula per binding of its free
  /// variables. The cache lives for one evaluation call only.
  bool memoize = false;
};

/// A predicate-free formula lowered to a flat node table with one slot per
/// variable. Immutable and shareable across threads; every evaluation uses
/// its own slot array.
class CompiledFormula {
 public:
  /// Throws Error(PredicateNotExpanded) if the tree contains a predicate.
  explicit CompiledFormula(const FormulaTree& tree);

  /// Throws Error(UnboundVariable) when `env` misses a free variable and
  /// Error(VertexOutOfRange) for bindings outside the digraph.
  bool evaluate(const Digraph& graph, const Environment& env, EvalOptions options = {}) const;

  const std::vector<Symbol>& free_variables() const noexcept { return free_; }
  bool is_sentence() const noexcept { return free_.empty(); }

  struct Op {
    NodeKind kind = NodeKind::Membership;
    int a = -1;  // first operand slot, or bound slot for quantifiers
    int b = -1;  // second operand slot
    int left = -1;
    int right = -1;
    std::vector<int> free_slots;  // for the memo key
  };

 private:
  friend class Evaluation;

  std::vector<Op> ops_;  // ops_[0] is the root
  std::vector<Symbol> slot_vars_;
  std::vector<Symbol> free_;
};

/// The satisfaction relation D |=_f u, ranging quantified variables over all
/// vertices and short-circuiting connectives and quantifiers.
bool eval(const Digraph& graph, const FormulaTree& tree, const Environment& env,
          EvalOptions options = {});

/// Throws Error(NotASentence) when the formula has a free occurrence.
bool eval_sentence(const Digraph& graph, const FormulaTree& tree, EvalOptions options = {});

}  // namespace cantor
