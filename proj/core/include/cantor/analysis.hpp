#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cantor/digraph.hpp"

namespace cantor {

enum class DigraphPredicate { SUS, SI, SIN, DO, DOU, OPA, REL, FUN, SUR };

/// Scheme position 1..9 of a predicate.
std::size_t predicate_index(DigraphPredicate p);
std::size_t predicate_arity(DigraphPredicate p);
std::string_view to_string(DigraphPredicate p);
/// Throws Error(InvalidArgument) for unknown names.
DigraphPredicate predicate_from_name(std::string_view name);
inline constexpr DigraphPredicate kAllPredicates[] = {
    DigraphPredicate::SUS, DigraphPredicate::SI,  DigraphPredicate::SIN,
    DigraphPredicate::DO,  DigraphPredicate::DOU, DigraphPredicate::OPA,
    DigraphPredicate::REL, DigraphPredicate::FUN, DigraphPredicate::SUR};

/// u = <first, second>_D.
struct PairResolution {
  Vertex pair_vertex = 0;
  Vertex first = 0;
  Vertex second = 0;
  friend bool operator==(const PairResolution&, const PairResolution&) = default;
};

struct SurjectionWitness {
  Vertex function_vertex = 0;
  Vertex domain_vertex = 0;
  /// Real pairs (a, b) with <a, b>_D a D-element of the function vertex.
  std::vector<std::pair<Vertex, Vertex>> graph;
};

/// Direct graph-theoretic reading of the nine predicates. Building one
/// precomputes the in-neighborhood multiplicities and the ordered-pair
/// resolution of every vertex; afterwards it is read-only.
class DigraphAnalysis {
 public:
  explicit DigraphAnalysis(const Digraph& graph);

  const Digraph& graph() const noexcept { return graph_; }

  const VertexSet& in_neighbors(Vertex u) const { return graph_.in_set(u); }
  /// {v : N(v) is a subset of N(u)}.
  VertexSet d_power_set(Vertex u) const;

  bool sus(Vertex u, Vertex v) const;
  bool si(Vertex u, Vertex v) const;
  bool sin(Vertex u, Vertex v) const;
  bool dbl(Vertex u, Vertex v, Vertex w) const;
  bool dou(Vertex u, Vertex v, Vertex w) const;
  bool opa(Vertex u, Vertex v, Vertex w) const;
  bool rel(Vertex u, Vertex v) const;
  bool fun(Vertex u, Vertex v) const;
  bool sur(Vertex u, Vertex v) const;

  /// Throws Error(ArityMismatch) or Error(VertexOutOfRange).
  bool holds(DigraphPredicate p, std::span<const Vertex> args) const;

  /// The unique (v, w) with OPA(u; v; w), if any.
  std::optional<PairResolution> resolve_opa(Vertex u) const;

  /// Throws Error(NotASurjection) unless SUR(u; v).
  SurjectionWitness extract_surjection(Vertex u, Vertex v) const;

  /// A (domain, surjection) pair refuting Cantor's theorem in the digraph.
  std::optional<std::pair<Vertex, Vertex>> cantor_counterexample() const;

 private:
  void check(Vertex v) const;
  /// Number of vertices whose in-neighborhood equals `s`.
  std::size_t realizations(const VertexSet& s) const;
  bool unique_with_neighbors(Vertex u, Vertex v, Vertex w) const;

  const Digraph& graph_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> multiplicity_;
  std::vector<std::optional<PairResolution>> pairs_;
};

VertexSet in_neighbors(const Digraph& graph, Vertex u);
VertexSet d_power_set(const Digraph& graph, Vertex u);
bool semantic_predicate(const Digraph& graph, DigraphPredicate p, std::span<const Vertex> args);
std::optional<PairResolution> resolve_opa(const Digraph& graph, Vertex u);
SurjectionWitness extract_surjection(const Digraph& graph, Vertex u, Vertex v);

enum class CantorMethod { Semantic, Phi };

bool is_cantor(const Digraph& graph, CantorMethod method = CantorMethod::Semantic);

inline constexpr std::size_t kDefaultInDegreeGuard = 20;

/// A vertex u and a subset of N(u) that is no vertex's in-neighborhood.
struct ExtensivityGap {
  Vertex vertex = 0;
  VertexSet subset;
};

/// The first gap in vertex order, with subsets of N(u) in binary-counter
/// order; nullopt when the digraph is strongly extensive. Throws
/// Error(InDegreeTooLarge) if some in-degree exceeds `guard`.
std::optional<ExtensivityGap> extensivity_gap(const Digraph& graph,
                                              std::size_t guard = kDefaultInDegreeGuard);

/// Every subset of every in-neighborhood is the in-neighborhood of some
/// vertex. Throws Error(InDegreeTooLarge) if some in-degree exceeds `guard`.
bool is_strongly_extensive(const Digraph& graph, std::size_t guard = kDefaultInDegreeGuard);

inline constexpr std::size_t kMaxOmegaLevels = 4;

/// First `levels` levels of the countable strongly extensive digraph. Level
/// n+1 adds one vertex per subset of the vertices so far, in binary-counter
/// order over ascending vertices, with that subset as its in-neighborhood.
/// Throws Error(SizeGuardExceeded) above kMaxOmegaLevels.
Digraph omega_prefix(std::size_t levels);

/// Vertex ranges [first, last] of the levels of omega_prefix(levels).
std::vector<std::pair<Vertex, Vertex>> omega_levels(std::size_t levels);

}  // namespace cantor
