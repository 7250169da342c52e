#include <set>

#include <gtest/gtest.h>

#include "cantor/cantor_sentence.hpp"
#include "test_support.hpp"

using namespace cantor;

TEST(CantorSentence, BuiltinSchemeNames) {
  const Scheme& u0 = builtin_scheme();
  ASSERT_EQ(u0.size(), 9U);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(u0.shortcut(i + 1).predicate.name, kPredicateNames[i]);
  EXPECT_EQ(u0.referenced(7), (std::set<std::size_t>{1, 6}));
  EXPECT_EQ(u0.variables(8), (std::set<std::uint64_t>{11, 12, 13, 14}));
}

TEST(CantorSentence, ExpansionsCarryReferenceLengths) {
  const auto& e = emit_expansions();
  ASSERT_EQ(e.size(), 9U);
  EXPECT_EQ(e[3].expected_length, 25U);
  EXPECT_EQ(e[3].name, "DO");
  EXPECT_EQ(e[7].formula.length(), 325U);
  for (const auto& x : e) {
    EXPECT_EQ(x.formula.length(), x.expected_length);
    EXPECT_EQ(count_kind(x.formula.word(), SymbolKind::Negation), 0U);
    EXPECT_EQ(x.expected_negations, 0U);
  }
}

TEST(CantorSentence, PhiShape) {
  const FormulaTree& phi = emit_phi();
  EXPECT_EQ(phi.length(), 494U);
  EXPECT_EQ(count_kind(phi.word(), SymbolKind::Negation), 1U);
  EXPECT_TRUE(is_sentence(phi));
  EXPECT_EQ(count_kind(phi.word(), SymbolKind::NewVar), 0U);
  EXPECT_EQ(count_kind(phi.word(), SymbolKind::Predicate), 0U);
  std::set<std::uint64_t> indices;
  for (const Symbol& s : phi.word()) {
    if (s.is_set_var()) indices.insert(s.index());
  }
  std::set<std::uint64_t> expected;
  for (std::uint64_t i = 1; i <= 19; ++i) expected.insert(i);
  EXPECT_EQ(indices, expected);
  EXPECT_NO_THROW(parse(phi.word(), {}, Dialect::ZF));
}

TEST(CantorSentence, PhiPrefixAndBody) {
  const FormulaTree& phi = emit_phi();
  const Word& w = phi.word();
  EXPECT_EQ(render_text(std::span<const Symbol>(w).first(7)), "( A x18 ! ( E x19");
  EXPECT_EQ(w.back().kind(), SymbolKind::RightParen);
  const Node& body = phi.root().children[0].children[0].children[0];
  EXPECT_EQ(body.span.size(), 485U);
}

TEST(CantorSentence, GoldenExpansionsMatchExactly) {
  for (int i : {3, 5, 6, 7, 8, 9}) {
    SCOPED_TRACE(i);
    const Word printed = tokenize(testsupport::golden("printed_e" + std::to_string(i) + ".zf"));
    const auto diff = word_diff(printed, emit_expansions()[static_cast<std::size_t>(i - 1)].formula.word());
    EXPECT_TRUE(diff.empty()) << diff.size() << " mismatches, first at " << diff.front().position;
  }
}

TEST(CantorSentence, GoldenPhiDiffersOnlyAtResidualTokens) {
  const Word printed = tokenize(testsupport::golden("printed_phi.zf"));
  const auto diff = word_diff(printed, emit_phi().word());
  ASSERT_EQ(diff.size(), 2U);
  EXPECT_EQ(diff[0].position, kPrintedPhiResidualPositions[0]);
  EXPECT_EQ(diff[0].expected, Symbol::new_var('y'));
  EXPECT_EQ(diff[0].actual, Symbol::set_var(18));
  EXPECT_EQ(diff[1].position, kPrintedPhiResidualPositions[1]);
  EXPECT_EQ(diff[1].expected, Symbol::new_var('x'));
  EXPECT_EQ(diff[1].actual, Symbol::set_var(19));
  // The printed word parses but is not a sentence.
  EXPECT_FALSE(is_sentence(parse(printed)));
}

TEST(CantorSentence, PredicateParams) {
  EXPECT_EQ(predicate_params(1).size(), 2U);
  EXPECT_EQ(predicate_params(6).size(), 3U);
  EXPECT_EQ(predicate_params(6)[2], Symbol::new_var('z'));
}
