#include <random>

#include <gtest/gtest.h>

#include "cantor/cantor_sentence.hpp"
#include "cantor/semantics.hpp"
#include "oracle.hpp"
#include "random_formula.hpp"
#include "test_support.hpp"

using namespace cantor;

namespace {

Symbol x(std::uint64_t i) { return Symbol::set_var(i); }

Digraph all_loops(std::size_t n) {
  std::vector<Arrow> arrows;
  for (Vertex v = 1; v <= n; ++v) arrows.push_back({v, v});
  return Digraph(n, arrows);
}

oracle::Matrix matrix(const Digraph& g) {
  std::vector<std::pair<int, int>> arrows;
  for (auto [u, v] : g.arrows()) arrows.push_back({static_cast<int>(u), static_cast<int>(v)});
  return oracle::Matrix::from_arrows(static_cast<int>(g.order()), arrows);
}

}  // namespace

TEST(LoadDigraph, Examples) {
  const Digraph g = load_digraph("vertices 2\n1 2\n");
  EXPECT_EQ(g, Digraph(2, {{1, 2}}));
  const Digraph one = load_digraph("vertices 1\n");
  EXPECT_EQ(one.order(), 1U);
  EXPECT_TRUE(one.arrows().empty());
  try {
    load_digraph("vertices 2\n3 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(e.position(), std::optional<std::size_t>(2));
  }
}

TEST(LoadDigraph, CommentsDuplicatesAndHeaders) {
  std::vector<std::string> warnings;
  const Digraph g =
      load_digraph("# a loop\n\nvertices 3 # three\n1 1\n1 1\n2 3 # arrow\n", &warnings);
  EXPECT_EQ(g, Digraph(3, {{1, 1}, {2, 3}}));
  EXPECT_EQ(warnings.size(), 1U);
  EXPECT_CANTOR_ERROR(load_digraph("1 2\n"), ErrorCode::BadHeader);
  EXPECT_CANTOR_ERROR(load_digraph("vertices 0\n"), ErrorCode::BadHeader);
  EXPECT_CANTOR_ERROR(load_digraph("vertices two\n"), ErrorCode::BadHeader);
  EXPECT_CANTOR_ERROR(load_digraph(""), ErrorCode::BadHeader);
  EXPECT_CANTOR_ERROR(load_digraph("vertices 2\n1\n"), ErrorCode::BadHeader);
}

TEST(LoadDigraph, WriteRoundTrip) {
  for (std::uint64_t code = 0; code < 512; code += 37) {
    const Digraph g = Digraph::from_code(3, code);
    EXPECT_EQ(load_digraph(write_digraph(g)), g);
  }
}

TEST(Digraph, FromCodeBitLayout) {
  const Digraph g = Digraph::from_code(2, 0b0010);
  EXPECT_EQ(g.arrows(), (std::vector<Arrow>{{1, 2}}));
  EXPECT_TRUE(g.has_arrow(1, 2));
  EXPECT_EQ(g.in_set(2).to_vector(), (std::vector<Vertex>{1}));
  EXPECT_CANTOR_ERROR(Digraph(0, {}), ErrorCode::InvalidArgument);
  EXPECT_CANTOR_ERROR(Digraph(2, {{0, 1}}), ErrorCode::VertexOutOfRange);
  EXPECT_CANTOR_ERROR(g.in_set(3), ErrorCode::VertexOutOfRange);
}

TEST(Eval, Examples) {
  const FormulaTree loop = parse_text("( x1 in x1 )");
  EXPECT_FALSE(eval(Digraph(1, {}), loop, {{x(1), 1}}));
  EXPECT_TRUE(eval(Digraph(1, {{1, 1}}), loop, {{x(1), 1}}));
  EXPECT_TRUE(eval(Digraph(2, {{1, 2}}), parse_text("( E x1 ( x1 in x2 ) )"), {{x(2), 2}}));
  EXPECT_FALSE(eval(Digraph(2, {{1, 2}}), parse_text("( E x1 ( x1 in x2 ) )"), {{x(2), 1}}));
}

TEST(Eval, Connectives) {
  const Digraph g(2, {{1, 2}});
  const Environment env{{x(1), 1}, {x(2), 2}};
  const auto ev = [&](const char* f) { return eval(g, parse_text(f), env); };
  EXPECT_TRUE(ev("( ( x2 in x1 ) -> ( x1 = x2 ) )"));
  EXPECT_FALSE(ev("( ( x1 in x2 ) -> ( x1 = x2 ) )"));
  EXPECT_TRUE(ev("( ( x2 in x1 ) <-> ( x1 = x2 ) )"));
  EXPECT_TRUE(ev("( ( x1 in x2 ) | ( x1 = x2 ) )"));
  EXPECT_FALSE(ev("( ( x1 in x2 ) & ( x1 = x2 ) )"));
  EXPECT_TRUE(ev("! ( x2 in x1 )"));
  EXPECT_TRUE(ev("( A x3 ( ( x3 in x2 ) -> ( x3 = x1 ) ) )"));
}

TEST(Eval, NewVariablesAreBindable) {
  const FormulaTree t = parse_text("( ?x in ?y )");
  EXPECT_TRUE(eval(Digraph(2, {{1, 2}}), t, {{Symbol::new_var('x'), 1}, {Symbol::new_var('y'), 2}}));
}

TEST(Eval, Errors) {
  EXPECT_CANTOR_ERROR(eval(Digraph(1, {}), parse_text("( x1 in x2 )"), {{x(1), 1}}),
                      ErrorCode::UnboundVariable);
  EXPECT_CANTOR_ERROR(eval(Digraph(1, {}), parse_text("( x1 in x1 )"), {{x(1), 2}}),
                      ErrorCode::VertexOutOfRange);
  EXPECT_CANTOR_ERROR(eval(Digraph(1, {}), parse_text("SUS ( x1 ; x1 )", {{"SUS", 2}}), {{x(1), 1}}),
                      ErrorCode::PredicateNotExpanded);
  EXPECT_CANTOR_ERROR(eval_sentence(Digraph(1, {}), parse_text("( x1 in x1 )")),
                      ErrorCode::NotASentence);
}

TEST(Eval, BoundVariableIgnoresEnvironment) {
  const FormulaTree t = parse_text("( E x1 ( x1 in x1 ) )");
  const Digraph g(2, {{2, 2}});
  EXPECT_TRUE(eval(g, t, {{x(1), 1}}));
  EXPECT_TRUE(eval(g, t, {}));
}

TEST(EvalSentence, Examples) {
  EXPECT_TRUE(eval_sentence(Digraph(1, {}), emit_phi()));
  EXPECT_FALSE(eval_sentence(all_loops(2), emit_phi()));
  const FormulaTree refl = parse_text("( A x1 ( x1 = x1 ) )");
  for (std::uint64_t code = 0; code < 16; ++code) {
    EXPECT_TRUE(eval_sentence(Digraph::from_code(2, code), refl));
  }
}

TEST(EvalSentence, MemoizationDoesNotChangeValue) {
  const FormulaTree& phi = emit_phi();
  const CompiledFormula compiled(phi);
  for (std::uint64_t code = 0; code < 512; ++code) {
    const Digraph g = Digraph::from_code(3, code);
    EXPECT_EQ(compiled.evaluate(g, {}, {true}), compiled.evaluate(g, {}, {false})) << code;
  }
}

TEST(Properties, MatchesTreeWalkingOracle) {
  testgen::FormulaGenerator gen(314, 3);
  std::uniform_int_distribution<std::uint64_t> codes(0, 511);
  std::uniform_int_distribution<Vertex> vertex(1, 3);
  for (int i = 0; i < 1500; ++i) {
    const FormulaTree t = parse_text(gen.formula(6));
    const std::uint64_t code = codes(gen.rng());
    const Digraph g = Digraph::from_code(3, code);
    Environment env;
    std::map<Symbol, int> oenv;
    for (std::uint64_t v = 1; v <= 3; ++v) {
      const Vertex val = vertex(gen.rng());
      env[x(v)] = val;
      oenv[x(v)] = static_cast<int>(val);
    }
    const bool expected = oracle::eval(oracle::Matrix::from_code(3, code), t.root(), oenv);
    EXPECT_EQ(eval(g, t, env), expected) << t.text();
    EXPECT_EQ(eval(g, t, env, {true}), expected) << t.text();
  }
}

TEST(Properties, SentencesIgnoreEnvironment) {
  testgen::FormulaGenerator gen(2718, 3);
  int sentences = 0;
  for (int i = 0; i < 3000 && sentences < 300; ++i) {
    const std::string body = gen.formula(4);
    const FormulaTree t =
        parse_text("( A x1 ( E x2 ( A x3 " + body + " ) ) )");
    ASSERT_TRUE(is_sentence(t));
    ++sentences;
    const Digraph g = Digraph::from_code(3, static_cast<std::uint64_t>(i) * 7919 % 512);
    const bool base = eval_sentence(g, t);
    for (Vertex a = 1; a <= 3; ++a) {
      EXPECT_EQ(eval(g, t, {{x(1), a}, {x(2), 4 - a}, {x(3), a}}), base);
    }
  }
}

TEST(Properties, QuantifierDuality) {
  testgen::FormulaGenerator gen(1618, 3);
  for (int i = 0; i < 500; ++i) {
    const std::string psi = gen.formula(4);
    const FormulaTree lhs = parse_text("! ( E x1 " + psi + " )");
    const FormulaTree rhs = parse_text("( A x1 ! " + psi + " )");
    const Digraph g = Digraph::from_code(2, static_cast<std::uint64_t>(i) % 16);
    for (Vertex a = 1; a <= 2; ++a) {
      for (Vertex b = 1; b <= 2; ++b) {
        const Environment env{{x(1), 1}, {x(2), a}, {x(3), b}};
        EXPECT_EQ(eval(g, lhs, env), eval(g, rhs, env));
      }
    }
  }
}

TEST(Properties, SusExpansionIsInclusion) {
  const FormulaTree e1 = instantiate(emit_expansions()[0].formula,
                                     {{Symbol::new_var('x'), x(30)}, {Symbol::new_var('y'), x(31)}});
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Digraph g = Digraph::from_code(n, code);
      for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
          EXPECT_EQ(eval(g, e1, {{x(30), u}, {x(31), v}}), g.in_set(u).subset_of(g.in_set(v)));
        }
      }
    }
  }
}

TEST(Properties, PhiAgreesWithOracleOnSmallDigraphs) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Digraph g = Digraph::from_code(n, code);
      EXPECT_EQ(eval_sentence(g, emit_phi()), oracle::cantor(matrix(g))) << n << ":" << code;
    }
  }
}

TEST(ParseEnvironment, Forms) {
  const Environment env = parse_environment("x1=3,x2=1,?x=2");
  EXPECT_EQ(env.size(), 3U);
  EXPECT_EQ(env.at(x(1)), 3U);
  EXPECT_EQ(env.at(Symbol::new_var('x')), 2U);
  EXPECT_TRUE(parse_environment("").empty());
  EXPECT_CANTOR_ERROR(parse_environment("x1"), ErrorCode::InvalidArgument);
  EXPECT_CANTOR_ERROR(parse_environment("x1=0"), ErrorCode::InvalidArgument);
  EXPECT_CANTOR_ERROR(parse_environment("x1=a"), ErrorCode::InvalidArgument);
  EXPECT_CANTOR_ERROR(parse_environment("in=1"), ErrorCode::InvalidArgument);
}
