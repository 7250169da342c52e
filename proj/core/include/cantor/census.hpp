#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cantor/analysis.hpp"
#include "cantor/digraph.hpp"

namespace cantor {

inline constexpr std::size_t kDefaultCensusGuard = 4;
inline constexpr std::size_t kMaxCensusOrder = 5;

/// Number of labeled digraphs on [n], 2^(n*n).
std::uint64_t digraph_count(std::size_t n);

/// Calls visit(code, digraph) for every labeled digraph on [n] with code in
/// [first, last), in increasing code order. Arrow (u, v) is bit
/// (u-1)*n + (v-1) of the code.
void for_each_digraph(std::size_t n, std::uint64_t first, std::uint64_t last,
                      const std::function<void(std::uint64_t, const Digraph&)>& visit);

/// All 2^(n*n) digraphs; n is limited by `guard` (Error GuardExceeded).
std::vector<Digraph> enumerate_digraphs(std::size_t n, std::size_t guard = kDefaultCensusGuard);

struct CensusOptions {
  std::size_t jobs = 1;
  CantorMethod method = CantorMethod::Semantic;
  /// Raise to kMaxCensusOrder to allow n = 5.
  std::size_t guard = kDefaultCensusGuard;
  bool collect_non_cantor = false;
};

struct CensusRow {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t strongly_extensive = 0;  // e_n
  std::uint64_t cantor = 0;              // c_n
  /// Strongly extensive digraphs that are not Cantor; always zero unless
  /// the diagonal argument fails.
  std::uint64_t extensive_not_cantor = 0;
  double elapsed_ms = 0;
  /// Codes of the non-Cantor digraphs in increasing order, when requested.
  std::vector<std::uint64_t> non_cantor_codes;
};

/// Counts strongly extensive and Cantor digraphs on [n] over `jobs`
/// contiguous code ranges; every count is independent of `jobs`.
CensusRow census(std::size_t n, const CensusOptions& options = {});

}  // namespace cantor
