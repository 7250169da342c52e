#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cantor/analysis.hpp"

namespace cantor {

inline constexpr std::uint64_t kDefaultCrosscheckSeed = 20261018;
inline constexpr std::size_t kDefaultCrosscheckSamples = 1000;
inline constexpr std::size_t kMaxCrosscheckOrder = 3;

/// Which argument tuples are compared on every digraph on [n]. Exhaustive
/// visits all of [n]^arity; sampled draws `samples` uniform tuples.
struct CrosscheckOptions {
  std::uint64_t seed = kDefaultCrosscheckSeed;
  std::size_t samples = kDefaultCrosscheckSamples;
  /// When false and n >= 3, REL, FUN and SUR are sampled and the other six
  /// predicates are still checked exhaustively.
  bool exhaustive = false;
};

struct CrosscheckMismatch {
  std::uint64_t code = 0;  // digraph code, see Digraph::from_code
  std::vector<Vertex> args;
  bool semantic = false;
  bool formula = false;
};

struct PredicateCrosscheck {
  DigraphPredicate predicate = DigraphPredicate::SUS;
  bool sampled = false;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<CrosscheckMismatch> first_mismatch;
};

/// Compares the direct reading of each predicate with evaluation of its
/// expansion, instantiated at fresh set variables, over every digraph on
/// [n]. Throws Error(GuardExceeded) for n outside [1, kMaxCrosscheckOrder].
std::vector<PredicateCrosscheck> crosscheck_predicates(std::size_t n,
                                                       const CrosscheckOptions& options = {});

}  // namespace cantor
