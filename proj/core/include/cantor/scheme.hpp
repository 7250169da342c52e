#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantor/formula.hpp"

namespace cantor {

/// q(p_1; ...; p_k) := body. The body is a ZF' formula with no free set
/// variable whose new variables are all among the parameters.
struct Shortcut {
  PredicateSignature predicate;
  std::vector<Symbol> params;
  FormulaTree body;
};

/// Strict: V(Phi_1) < V(Phi_2) < ... elementwise. Relaxed: the V sets are
/// only required to be pairwise disjoint.
enum class SchemeMode { Strict, Relaxed };

/// A validated abbreviation scheme. Predicate indices are 1-based positions
/// in the scheme.
class Scheme {
 public:
  const std::vector<Shortcut>& shortcuts() const noexcept { return shortcuts_; }
  std::size_t size() const noexcept { return shortcuts_.size(); }
  SchemeMode mode() const noexcept { return mode_; }

  /// R(Phi_i): indices of the predicates used in the i-th body.
  const std::set<std::size_t>& referenced(std::size_t i) const { return r_sets_.at(i - 1); }
  /// V(Phi_i): indices j of the set variables x_j used in the i-th body.
  const std::set<std::uint64_t>& variables(std::size_t i) const { return v_sets_.at(i - 1); }

  const Shortcut& shortcut(std::size_t i) const { return shortcuts_.at(i - 1); }
  /// 1-based index of a predicate, 0 when absent.
  std::size_t index_of(std::string_view name) const;
  SignatureSet signatures() const;

 private:
  friend Scheme validate_scheme(std::vector<Shortcut>, SchemeMode);

  std::vector<Shortcut> shortcuts_;
  std::vector<std::set<std::size_t>> r_sets_;
  std::vector<std::set<std::uint64_t>> v_sets_;
  SchemeMode mode_ = SchemeMode::Strict;
};

/// Checks the shortcut conditions and the scheme ordering conditions.
/// Throws Error with code CircularReference, VariableClash, FreeSetVariable,
/// ForeignNewVariable, InvalidParameters or DuplicatePredicate.
Scheme validate_scheme(std::vector<Shortcut> shortcuts, SchemeMode mode = SchemeMode::Strict);

/// Forward expansion E_1, ..., E_l. Each E_i is predicate free.
std::vector<FormulaTree> expand(const Scheme& scheme);

using Assignment = std::vector<std::pair<Symbol, Symbol>>;

/// Renames the free new variables of an expansion. Every free new variable
/// must be covered (Error UncoveredParameter) and every target must be a
/// variable.
FormulaTree instantiate(const FormulaTree& expansion, const Assignment& assignment);

/// Reads the scheme file format: one `NAME ( ?x ; ?y ) := <formula>` per line
/// in scheme order, `#` comment lines and blank lines ignored.
std::vector<Shortcut> read_shortcuts(std::string_view text);

Scheme load_scheme(std::string_view text, SchemeMode mode = SchemeMode::Strict);

/// Inverse of read_shortcuts for one shortcut.
std::string render_shortcut(const Shortcut& shortcut);

}  // namespace cantor
