#include "cantor/crosscheck.hpp"

#include <random>

#include "cantor/cantor_sentence.hpp"
#include "cantor/census.hpp"
#include "cantor/error.hpp"
#include "cantor/semantics.hpp"

namespace cantor {

namespace {

// Expansion i instantiated at x<kFirstSlot>, x<kFirstSlot+1>, ...; the scheme
// itself uses x1 ... x17.
constexpr std::uint64_t kFirstSlot = 20;

CompiledFormula compile_instance(std::size_t index) {
  const auto& params = predicate_params(index);
  Assignment assignment;
  for (std::size_t t = 0; t < params.size(); ++t) {
    assignment.emplace_back(params[t], Symbol::set_var(kFirstSlot + t));
  }
  return CompiledFormula(instantiate(emit_expansions()[index - 1].formula, assignment));
}

bool advance(std::vector<Vertex>& args, Vertex n) {
  for (Vertex& a : args) {
    if (a < n) {
      ++a;
      return true;
    }
    a = 1;
  }
  return false;
}

}  // namespace

std::vector<PredicateCrosscheck> crosscheck_predicates(std::size_t n,
                                                       const CrosscheckOptions& options) {
  if (n < 1 || n > kMaxCrosscheckOrder) {
    throw Error(ErrorCode::GuardExceeded, "crosscheck supports 1 <= n <= " +
                                              std::to_string(kMaxCrosscheckOrder));
  }
  std::vector<PredicateCrosscheck> out;
  std::vector<CompiledFormula> compiled;
  for (DigraphPredicate p : kAllPredicates) {
    PredicateCrosscheck r;
    r.predicate = p;
    const std::size_t idx = predicate_index(p);
    r.sampled = !options.exhaustive && n >= 3 && idx >= predicate_index(DigraphPredicate::REL);
    out.push_back(r);
    compiled.push_back(compile_instance(idx));
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Vertex> vertex(1, static_cast<Vertex>(n));
  const std::uint64_t total = digraph_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const Digraph g = Digraph::from_code(n, code);
    const DigraphAnalysis analysis(g);
    for (std::size_t i = 0; i < out.size(); ++i) {
      PredicateCrosscheck& r = out[i];
      const std::size_t arity = predicate_arity(r.predicate);
      const auto compare = [&](const std::vector<Vertex>& args) {
        Environment env;
        for (std::size_t t = 0; t < arity; ++t) env[Symbol::set_var(kFirstSlot + t)] = args[t];
        const bool semantic = analysis.holds(r.predicate, args);
        const bool formula = compiled[i].evaluate(g, env);
        ++r.checked;
        if (semantic != formula) {
          ++r.mismatches;
          if (!r.first_mismatch) r.first_mismatch = CrosscheckMismatch{code, args, semantic, formula};
        }
      };
      std::vector<Vertex> args(arity, 1);
      if (r.sampled) {
        for (std::size_t s = 0; s < options.samples; ++s) {
          for (Vertex& a : args) a = vertex(rng);
          compare(args);
        }
      } else {
        do {
          compare(args);
        } while (advance(args, static_cast<Vertex>(n)));
      }
    }
  }
  return out;
}

}  // namespace cantor
