#include "cantor/census.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include "cantor/error.hpp"

namespace cantor {

namespace {

void check_order(std::size_t n, std::size_t guard) {
  const std::size_t limit = std::min(guard, kMaxCensusOrder);
  if (n < 1 || n > limit) {
    throw Error(ErrorCode::GuardExceeded, "digraph order " + std::to_string(n) +
                                              " outside the enumeration guard [1," +
                                              std::to_string(limit) + "]");
  }
}

struct Tally {
  std::uint64_t strongly_extensive = 0;
  std::uint64_t cantor = 0;
  std::uint64_t extensive_not_cantor = 0;
  std::vector<std::uint64_t> non_cantor;
};

Tally count_range(std::size_t n, std::uint64_t first, std::uint64_t last,
                  const CensusOptions& options) {
  Tally t;
  for_each_digraph(n, first, last, [&](std::uint64_t code, const Digraph& g) {
    const bool extensive = is_strongly_extensive(g);
    const bool cantor = is_cantor(g, options.method);
    t.strongly_extensive += extensive;
    t.cantor += cantor;
    t.extensive_not_cantor += extensive && !cantor;
    if (!cantor && options.collect_non_cantor) t.non_cantor.push_back(code);
  });
  return t;
}

}  // namespace

std::uint64_t digraph_count(std::size_t n) {
  if (n * n >= 64) throw Error(ErrorCode::GuardExceeded, "2^(n*n) does not fit in 64 bits");
  return std::uint64_t{1} << (n * n);
}

void for_each_digraph(std::size_t n, std::uint64_t first, std::uint64_t last,
                      const std::function<void(std::uint64_t, const Digraph&)>& visit) {
  const std::uint64_t total = digraph_count(n);
  last = std::min(last, total);
  for (std::uint64_t code = first; code < last; ++code) visit(code, Digraph::from_code(n, code));
}

std::vector<Digraph> enumerate_digraphs(std::size_t n, std::size_t guard) {
  check_order(n, guard);
  std::vector<Digraph> out;
  out.reserve(digraph_count(n));
  for_each_digraph(n, 0, digraph_count(n),
                   [&](std::uint64_t, const Digraph& g) { out.push_back(g); });
  return out;
}

CensusRow census(std::size_t n, const CensusOptions& options) {
  check_order(n, options.guard);
  if (options.jobs == 0) throw Error(ErrorCode::InvalidArgument, "jobs must be positive");
  const auto start = std::chrono::steady_clock::now();

  CensusRow row;
  row.n = n;
  row.total = digraph_count(n);

  const std::uint64_t jobs = std::min<std::uint64_t>(options.jobs, row.total);
  std::vector<Tally> tallies(jobs);
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> failures(jobs);
  for (std::uint64_t j = 0; j < jobs; ++j) {
    const std::uint64_t first = row.total * j / jobs;
    const std::uint64_t last = row.total * (j + 1) / jobs;
    workers.emplace_back([&, j, first, last] {
      try {
        tallies[j] = count_range(n, first, last, options);
      } catch (...) {
        failures[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  // Ranges are in code order, so concatenation keeps the witness list sorted.
  for (auto& t : tallies) {
    row.strongly_extensive += t.strongly_extensive;
    row.cantor += t.cantor;
    row.extensive_not_cantor += t.extensive_not_cantor;
    row.non_cantor_codes.insert(row.non_cantor_codes.end(), t.non_cantor.begin(),
                                t.non_cantor.end());
  }
  row.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace cantor
