#include <random>

#include <gtest/gtest.h>

#include "cantor/analysis.hpp"
#include "cantor/cantor_sentence.hpp"
#include "cantor/semantics.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace cantor;

namespace {

Digraph loops(std::size_t n, std::vector<Vertex> which) {
  std::vector<Arrow> arrows;
  for (Vertex v : which) arrows.push_back({v, v});
  return Digraph(n, arrows);
}

Digraph all_loops(std::size_t n) {
  std::vector<Vertex> all;
  for (Vertex v = 1; v <= n; ++v) all.push_back(v);
  return loops(n, all);
}

std::vector<Vertex> set(const VertexSet& s) { return s.to_vector(); }

oracle::Matrix matrix(std::size_t n, std::uint64_t code) {
  return oracle::Matrix::from_code(static_cast<int>(n), code);
}

// Calls f(args) for every tuple in [1,n]^arity.
template <class F>
void for_each_tuple(std::size_t n, std::size_t arity, F&& f) {
  std::vector<Vertex> args(arity, 1);
  while (true) {
    f(args);
    std::size_t i = 0;
    while (i < arity && args[i] == n) args[i++] = 1;
    if (i == arity) return;
    ++args[i];
  }
}

}  // namespace

TEST(InNeighbors, Examples) {
  EXPECT_EQ(set(in_neighbors(Digraph(2, {{1, 2}}), 2)), (std::vector<Vertex>{1}));
  EXPECT_TRUE(in_neighbors(Digraph(1, {}), 1).empty());
  EXPECT_EQ(set(in_neighbors(all_loops(3), 2)), (std::vector<Vertex>{2}));
  EXPECT_CANTOR_ERROR(in_neighbors(Digraph(1, {}), 2), ErrorCode::VertexOutOfRange);
}

TEST(DPowerSet, Examples) {
  EXPECT_EQ(set(d_power_set(Digraph(2, {}), 1)), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(set(d_power_set(all_loops(2), 1)), (std::vector<Vertex>{1}));
  EXPECT_EQ(set(d_power_set(Digraph(2, {{1, 2}}), 2)), (std::vector<Vertex>{1, 2}));
  EXPECT_CANTOR_ERROR(d_power_set(Digraph(1, {}), 0), ErrorCode::VertexOutOfRange);
}

TEST(SemanticPredicate, Examples) {
  const Vertex one_one_one[] = {1, 1, 1};
  EXPECT_TRUE(semantic_predicate(all_loops(2), DigraphPredicate::OPA, one_one_one));
  const Vertex two_one[] = {2, 1};
  EXPECT_TRUE(semantic_predicate(Digraph(2, {{1, 2}}), DigraphPredicate::SIN, two_one));
  const Vertex one_one[] = {1, 1};
  EXPECT_TRUE(semantic_predicate(all_loops(2), DigraphPredicate::SUR, one_one));
  EXPECT_CANTOR_ERROR(semantic_predicate(all_loops(2), DigraphPredicate::OPA, one_one),
                      ErrorCode::ArityMismatch);
  const Vertex out_of_range[] = {1, 3};
  EXPECT_CANTOR_ERROR(semantic_predicate(all_loops(2), DigraphPredicate::SUS, out_of_range),
                      ErrorCode::VertexOutOfRange);
}

TEST(SemanticPredicate, NamesAndArities) {
  for (std::size_t i = 0; i < 9; ++i) {
    const DigraphPredicate p = kAllPredicates[i];
    EXPECT_EQ(predicate_index(p), i + 1);
    EXPECT_EQ(to_string(p), kPredicateNames[i]);
    EXPECT_EQ(predicate_from_name(kPredicateNames[i]), p);
    EXPECT_EQ(predicate_arity(p), predicate_params(i + 1).size());
  }
  EXPECT_CANTOR_ERROR(predicate_from_name("XYZ"), ErrorCode::InvalidArgument);
}

TEST(SemanticPredicate, MatchesOracleExhaustivelyUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Digraph g = Digraph::from_code(n, code);
      const oracle::Matrix m = matrix(n, code);
      const DigraphAnalysis a(g);
      for (DigraphPredicate p : kAllPredicates) {
        for_each_tuple(n, predicate_arity(p), [&](const std::vector<Vertex>& args) {
          const std::vector<int> iargs(args.begin(), args.end());
          ASSERT_EQ(a.holds(p, args), oracle::predicate(m, static_cast<int>(predicate_index(p)), iargs))
              << to_string(p) << " n=" << n << " code=" << code;
        });
      }
    }
  }
}

TEST(SemanticPredicate, MatchesInstantiatedExpansionsAtTwo) {
  const auto& expansions = emit_expansions();
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& params = predicate_params(i + 1);
    Assignment assignment;
    for (std::size_t t = 0; t < params.size(); ++t) {
      assignment.emplace_back(params[t], Symbol::set_var(100 + t));
    }
    const CompiledFormula compiled(instantiate(expansions[i].formula, assignment));
    for (std::uint64_t code = 0; code < 16; ++code) {
      const Digraph g = Digraph::from_code(2, code);
      const DigraphAnalysis a(g);
      for_each_tuple(2, params.size(), [&](const std::vector<Vertex>& args) {
        Environment env;
        for (std::size_t t = 0; t < args.size(); ++t) env[Symbol::set_var(100 + t)] = args[t];
        ASSERT_EQ(a.holds(kAllPredicates[i], args), compiled.evaluate(g, env))
            << kPredicateNames[i] << " code=" << code;
      });
    }
  }
}

TEST(ResolveOpa, Examples) {
  EXPECT_EQ(resolve_opa(all_loops(3), 2), (PairResolution{2, 2, 2}));
  EXPECT_FALSE(resolve_opa(Digraph(2, {}), 1).has_value());
  EXPECT_CANTOR_ERROR(resolve_opa(Digraph(2, {}), 3), ErrorCode::VertexOutOfRange);
}

TEST(ResolveOpa, PairDeterminismUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Digraph g = Digraph::from_code(n, code);
      const oracle::Matrix m = matrix(n, code);
      const DigraphAnalysis a(g);
      for (Vertex u = 1; u <= n; ++u) {
        int found = 0;
        std::optional<PairResolution> expected;
        for (Vertex v = 1; v <= n; ++v) {
          for (Vertex w = 1; w <= n; ++w) {
            if (oracle::opa(m, static_cast<int>(u), static_cast<int>(v), static_cast<int>(w))) {
              ++found;
              expected = PairResolution{u, v, w};
            }
          }
        }
        EXPECT_LE(found, 1);
        EXPECT_EQ(a.resolve_opa(u), expected);
      }
    }
  }
}

TEST(ExtractSurjection, Examples) {
  const SurjectionWitness w1 = extract_surjection(all_loops(1), 1, 1);
  EXPECT_EQ(w1.graph, (std::vector<std::pair<Vertex, Vertex>>{{1, 1}}));
  const SurjectionWitness w2 = extract_surjection(all_loops(2), 1, 1);
  EXPECT_EQ(w2.graph, (std::vector<std::pair<Vertex, Vertex>>{{1, 1}}));
  EXPECT_EQ(w2.function_vertex, 1U);
  EXPECT_EQ(w2.domain_vertex, 1U);
  EXPECT_CANTOR_ERROR(extract_surjection(Digraph(1, {}), 1, 1), ErrorCode::NotASurjection);
}

TEST(ExtractSurjection, EveryWitnessAtThreeIsOnto) {
  int witnesses = 0;
  for (std::uint64_t code = 0; code < 512; ++code) {
    const Digraph g = Digraph::from_code(3, code);
    const DigraphAnalysis a(g);
    for (Vertex u = 1; u <= 3; ++u) {
      for (Vertex v = 1; v <= 3; ++v) {
        if (!a.sur(u, v)) {
          EXPECT_CANTOR_ERROR(a.extract_surjection(u, v), ErrorCode::NotASurjection);
          continue;
        }
        const SurjectionWitness w = a.extract_surjection(u, v);
        std::vector<Vertex> image;
        for (auto [x, y] : w.graph) image.push_back(y);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        EXPECT_EQ(image, set(a.d_power_set(v)));
        ++witnesses;
      }
    }
  }
  EXPECT_GT(witnesses, 0);
}

TEST(IsCantor, Examples) {
  EXPECT_TRUE(is_cantor(Digraph(1, {})));
  EXPECT_FALSE(is_cantor(all_loops(2)));
  EXPECT_TRUE(is_cantor(loops(2, {1})));
  EXPECT_TRUE(is_cantor(loops(2, {2})));
  EXPECT_TRUE(is_cantor(loops(2, {})));
  for (CantorMethod m : {CantorMethod::Semantic, CantorMethod::Phi}) {
    EXPECT_TRUE(is_cantor(Digraph(1, {}), m));
    EXPECT_FALSE(is_cantor(all_loops(2), m));
  }
}

TEST(IsCantor, CounterexampleNamesDomainAndFunction) {
  const auto ce = DigraphAnalysis(all_loops(2)).cantor_counterexample();
  ASSERT_TRUE(ce.has_value());
  EXPECT_TRUE(DigraphAnalysis(all_loops(2)).sur(ce->second, ce->first));
  EXPECT_FALSE(DigraphAnalysis(Digraph(1, {})).cantor_counterexample().has_value());
}

TEST(IsCantor, MethodsAgreeWithOracleAtThree) {
  for (std::uint64_t code = 0; code < 512; ++code) {
    const Digraph g = Digraph::from_code(3, code);
    const bool expected = oracle::cantor(matrix(3, code));
    EXPECT_EQ(is_cantor(g, CantorMethod::Semantic), expected) << code;
    EXPECT_EQ(is_cantor(g, CantorMethod::Phi), expected) << code;
  }
}

TEST(StronglyExtensive, Examples) {
  EXPECT_TRUE(is_strongly_extensive(Digraph(1, {})));
  EXPECT_TRUE(is_strongly_extensive(Digraph(2, {{1, 1}})));
  EXPECT_TRUE(is_strongly_extensive(Digraph(4, {{1, 1}, {2, 1}, {1, 3}, {2, 4}})));
  EXPECT_FALSE(is_strongly_extensive(Digraph(1, {{1, 1}})));
  EXPECT_CANTOR_ERROR(is_strongly_extensive(Digraph(3, {{1, 3}, {2, 3}}), 1),
                      ErrorCode::InDegreeTooLarge);
}

TEST(StronglyExtensive, MatchesOracleUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      EXPECT_EQ(is_strongly_extensive(Digraph::from_code(n, code)),
                oracle::strongly_extensive(matrix(n, code)));
    }
  }
}

TEST(Omega, SmallPrefixes) {
  const Digraph d1 = omega_prefix(1);
  EXPECT_EQ(d1.order(), 1U);
  EXPECT_TRUE(d1.arrows().empty());
  const Digraph d2 = omega_prefix(2);
  EXPECT_EQ(d2.order(), 3U);
  EXPECT_EQ(d2.arrows(), (std::vector<Arrow>{{1, 3}}));
  EXPECT_EQ(omega_prefix(3).order(), 11U);
  EXPECT_EQ(omega_levels(3).back(), (std::pair<Vertex, Vertex>{4, 11}));
  EXPECT_CANTOR_ERROR(omega_prefix(0), ErrorCode::InvalidArgument);
  EXPECT_CANTOR_ERROR(omega_prefix(5), ErrorCode::SizeGuardExceeded);
}

TEST(Omega, BinaryCounterOrder) {
  const Digraph d3 = omega_prefix(3);
  // Level 3 lists the subsets of {1,2,3} as 0b000 .. 0b111.
  for (Vertex i = 0; i < 8; ++i) {
    std::vector<Vertex> expected;
    for (Vertex b = 0; b < 3; ++b) {
      if ((i >> b) & 1u) expected.push_back(b + 1);
    }
    EXPECT_EQ(set(d3.in_set(4 + i)), expected);
  }
}

TEST(Omega, EveryLevelSubsetRealized) {
  for (std::size_t k = 2; k <= 3; ++k) {
    const Digraph d = omega_prefix(k);
    const auto levels = omega_levels(k);
    std::set<std::vector<Vertex>> realized;
    for (Vertex u = 1; u <= d.order(); ++u) realized.insert(set(d.in_set(u)));
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const Vertex top = levels[j].second;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << top); ++mask) {
        std::vector<Vertex> a;
        for (Vertex b = 0; b < top; ++b) {
          if ((mask >> b) & 1u) a.push_back(b + 1);
        }
        EXPECT_TRUE(realized.count(a));
      }
    }
  }
}

TEST(StronglyExtensive, GapNamesMissingSubset) {
  const auto gap = extensivity_gap(Digraph(1, {{1, 1}}));
  ASSERT_TRUE(gap.has_value());
  EXPECT_EQ(gap->vertex, 1U);
  EXPECT_TRUE(gap->subset.empty());
  const auto gap2 = extensivity_gap(Digraph(3, {{1, 2}, {2, 2}, {1, 3}}));
  ASSERT_TRUE(gap2.has_value());
  EXPECT_EQ(gap2->vertex, 2U);
  EXPECT_EQ(set(gap2->subset), (std::vector<Vertex>{2}));
  EXPECT_FALSE(extensivity_gap(Digraph(2, {{1, 1}})).has_value());
}
