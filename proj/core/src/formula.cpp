#include "cantor/formula.hpp"

#include <algorithm>

#include "cantor/error.hpp"

namespace cantor {

namespace {

bool is_binary_connective(SymbolKind kind) {
  return kind == SymbolKind::Implication || kind == SymbolKind::Biconditional ||
         kind == SymbolKind::Conjunction || kind == SymbolKind::Disjunction;
}

NodeKind binary_node_kind(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Implication: return NodeKind::Implies;
    case SymbolKind::Biconditional: return NodeKind::Iff;
    case SymbolKind::Conjunction: return NodeKind::And;
    default: return NodeKind::Or;
  }
}

SymbolKind binary_symbol(NodeKind kind) {
  switch (kind) {
    case NodeKind::Implies: return SymbolKind::Implication;
    case NodeKind::Iff: return SymbolKind::Biconditional;
    case NodeKind::And: return SymbolKind::Conjunction;
    default: return SymbolKind::Disjunction;
  }
}

class Parser {
 public:
  Parser(const Word& word, const SignatureSet& signatures, Dialect dialect)
      : word_(word), signatures_(signatures), dialect_(dialect) {}

  Node run() {
    Node root = formula();
    if (pos_ != word_.size()) fail(pos_, "trailing symbols after a complete formula");
    return root;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& why) const {
    throw Error(ErrorCode::NotAFormula,
                "not a formula at position " + std::to_string(at + 1) + ": " + why, at + 1);
  }

  const Symbol& peek(std::size_t at, const char* expecting) const {
    if (at >= word_.size()) fail(at, std::string("unexpected end, expected ") + expecting);
    return word_[at];
  }

  bool accepts_variable(const Symbol& s) const {
    return s.is_set_var() || (s.is_new_var() && dialect_ == Dialect::ZFPrime);
  }

  Symbol variable(const char* context) {
    const Symbol& s = peek(pos_, "a variable");
    if (!accepts_variable(s)) fail(pos_, std::string("expected a variable ") + context);
    ++pos_;
    return s;
  }

  void expect(SymbolKind kind, const char* what) {
    const Symbol& s = peek(pos_, what);
    if (s.kind() != kind) fail(pos_, std::string("expected ") + what);
    ++pos_;
  }

  Node formula() {
    const std::size_t start = pos_;
    const Symbol& head = peek(pos_, "a formula");
    Node node;
    switch (head.kind()) {
      case SymbolKind::Negation: {
        ++pos_;
        node.kind = NodeKind::Not;
        node.children.push_back(formula());
        break;
      }
      case SymbolKind::Predicate:
        node = predicate_atom();
        break;
      case SymbolKind::LeftParen: {
        const Symbol& second = peek(pos_ + 1, "a formula body");
        if (second.kind() == SymbolKind::Exists || second.kind() == SymbolKind::Forall) {
          pos_ += 2;
          const Symbol& bound = peek(pos_, "a quantified variable");
          if (bound.is_new_var()) fail(pos_, "new variables cannot be quantified");
          if (!bound.is_set_var()) fail(pos_, "expected a set variable after a quantifier");
          ++pos_;
          node.kind = second.kind() == SymbolKind::Exists ? NodeKind::Exists : NodeKind::Forall;
          node.vars.push_back(bound);
          node.children.push_back(formula());
          expect(SymbolKind::RightParen, "')' closing a quantifier");
        } else if (second.is_variable()) {
          ++pos_;
          Symbol left = variable("in an atomic formula");
          const Symbol& rel = peek(pos_, "'in' or '='");
          if (rel.kind() == SymbolKind::Membership) {
            node.kind = NodeKind::Membership;
          } else if (rel.kind() == SymbolKind::Equality) {
            node.kind = NodeKind::Equality;
          } else {
            fail(pos_, "expected 'in' or '='");
          }
          ++pos_;
          Symbol right = variable("in an atomic formula");
          expect(SymbolKind::RightParen, "')' closing an atomic formula");
          node.vars = {std::move(left), std::move(right)};
        } else {
          ++pos_;
          Node left = formula();
          const Symbol& op = peek(pos_, "a binary connective");
          if (!is_binary_connective(op.kind())) fail(pos_, "expected a binary connective");
          ++pos_;
          Node right = formula();
          expect(SymbolKind::RightParen, "')' closing a binary formula");
          node.kind = binary_node_kind(op.kind());
          node.children.push_back(std::move(left));
          node.children.push_back(std::move(right));
        }
        break;
      }
      default:
        fail(pos_, "a formula cannot start with '" + head.text() + "'");
    }
    node.span = Span{start + 1, pos_};
    return node;
  }

  Node predicate_atom() {
    const std::size_t start = pos_;
    const Symbol& name = word_[pos_];
    if (dialect_ == Dialect::ZF) fail(pos_, "predicates are not ZF symbols");
    auto sig = std::find_if(signatures_.begin(), signatures_.end(),
                            [&](const PredicateSignature& s) { return s.name == name.name(); });
    if (sig == signatures_.end()) {
      throw Error(ErrorCode::UnknownPredicate,
                  "unknown predicate '" + name.name() + "' at position " +
                      std::to_string(start + 1),
                  start + 1);
    }
    ++pos_;
    expect(SymbolKind::LeftParen, "'(' after a predicate name");
    Node node;
    node.kind = NodeKind::Predicate;
    node.predicate = name.name();
    node.vars.push_back(variable("as a predicate argument"));
    while (true) {
      const Symbol& s = peek(pos_, "';' or ')'");
      if (s.kind() == SymbolKind::Semicolon) {
        ++pos_;
        node.vars.push_back(variable("as a predicate argument"));
      } else if (s.kind() == SymbolKind::RightParen) {
        ++pos_;
        break;
      } else {
        fail(pos_, "expected ';' or ')' in predicate arguments");
      }
    }
    if (node.vars.size() != sig->arity) {
      throw Error(ErrorCode::ArityMismatch,
                  "predicate " + sig->name + " has arity " + std::to_string(sig->arity) +
                      " but is applied to " + std::to_string(node.vars.size()) +
                      " arguments at position " + std::to_string(start + 1),
                  start + 1);
    }
    return node;
  }

  const Word& word_;
  const SignatureSet& signatures_;
  Dialect dialect_;
  std::size_t pos_ = 0;
};

void render_into(const Node& node, Word& out) {
  const auto paren = [&](SymbolKind k) { out.push_back(Symbol::op(k)); };
  switch (node.kind) {
    case NodeKind::Membership:
    case NodeKind::Equality:
      paren(SymbolKind::LeftParen);
      out.push_back(node.vars[0]);
      paren(node.kind == NodeKind::Membership ? SymbolKind::Membership : SymbolKind::Equality);
      out.push_back(node.vars[1]);
      paren(SymbolKind::RightParen);
      break;
    case NodeKind::Predicate:
      out.push_back(Symbol::predicate(node.predicate));
      paren(SymbolKind::LeftParen);
      for (std::size_t i = 0; i < node.vars.size(); ++i) {
        if (i) paren(SymbolKind::Semicolon);
        out.push_back(node.vars[i]);
      }
      paren(SymbolKind::RightParen);
      break;
    case NodeKind::Not:
      paren(SymbolKind::Negation);
      render_into(node.children[0], out);
      break;
    case NodeKind::Exists:
    case NodeKind::Forall:
      paren(SymbolKind::LeftParen);
      paren(node.kind == NodeKind::Exists ? SymbolKind::Exists : SymbolKind::Forall);
      out.push_back(node.vars[0]);
      render_into(node.children[0], out);
      paren(SymbolKind::RightParen);
      break;
    default:
      paren(SymbolKind::LeftParen);
      render_into(node.children[0], out);
      paren(binary_symbol(node.kind));
      render_into(node.children[1], out);
      paren(SymbolKind::RightParen);
      break;
  }
}

void collect_occurrences(const Node& node, std::vector<Symbol>& scope,
                         std::vector<Occurrence>& out) {
  const auto emit = [&](const Symbol& v, std::size_t position) {
    const bool bound = std::find(scope.begin(), scope.end(), v) != scope.end();
    out.push_back(Occurrence{v, position, bound});
  };
  switch (node.kind) {
    case NodeKind::Membership:
    case NodeKind::Equality:
      emit(node.vars[0], node.span.first + 1);
      emit(node.vars[1], node.span.first + 3);
      break;
    case NodeKind::Predicate:
      for (std::size_t i = 0; i < node.vars.size(); ++i) {
        emit(node.vars[i], node.span.first + 2 + 2 * i);
      }
      break;
    case NodeKind::Exists:
    case NodeKind::Forall:
      scope.push_back(node.vars[0]);
      emit(node.vars[0], node.span.first + 2);
      collect_occurrences(node.children[0], scope, out);
      scope.pop_back();
      break;
    default:
      for (const Node& child : node.children) collect_occurrences(child, scope, out);
      break;
  }
}

void collect_preorder(const Node& node, std::vector<const Node*>& out) {
  out.push_back(&node);
  for (const Node& child : node.children) collect_preorder(child, out);
}

}  // namespace

FormulaTree parse(Word word, const SignatureSet& signatures, Dialect dialect) {
  Node root = Parser(word, signatures, dialect).run();
  return FormulaTree(std::move(word), std::move(root));
}

FormulaTree parse_text(std::string_view text, const SignatureSet& signatures, Dialect dialect) {
  return parse(tokenize(text), signatures, dialect);
}

Word render(const Node& node) {
  Word out;
  out.reserve(node.span.size());
  render_into(node, out);
  return out;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Atomic: return "atomic";
    case CaseLabel::Negation: return "negation";
    case CaseLabel::Implication: return "implication";
    case CaseLabel::Biconditional: return "biconditional";
    case CaseLabel::Conjunction: return "conjunction";
    case CaseLabel::Disjunction: return "disjunction";
    case CaseLabel::Existential: return "existential";
    case CaseLabel::Universal: return "universal";
  }
  return "unknown";
}

Classification classify(const Node& node) {
  Classification c;
  switch (node.kind) {
    case NodeKind::Membership:
    case NodeKind::Equality:
    case NodeKind::Predicate: c.label = CaseLabel::Atomic; break;
    case NodeKind::Not: c.label = CaseLabel::Negation; break;
    case NodeKind::Implies: c.label = CaseLabel::Implication; break;
    case NodeKind::Iff: c.label = CaseLabel::Biconditional; break;
    case NodeKind::And: c.label = CaseLabel::Conjunction; break;
    case NodeKind::Or: c.label = CaseLabel::Disjunction; break;
    case NodeKind::Exists: c.label = CaseLabel::Existential; break;
    case NodeKind::Forall: c.label = CaseLabel::Universal; break;
  }
  for (const Node& child : node.children) c.constituents.push_back(&child);
  if (node.is_quantifier()) c.bound = node.vars[0];
  return c;
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> good_bracketing(
    std::span<const Symbol> brackets) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const SymbolKind k = brackets[i].kind();
    if (k == SymbolKind::LeftParen) {
      open.push_back(i + 1);
    } else if (k == SymbolKind::RightParen) {
      if (open.empty()) return std::nullopt;
      blocks.emplace_back(open.back(), i + 1);
      open.pop_back();
    } else {
      throw Error(ErrorCode::InvalidArgument, "good_bracketing expects only bracket symbols");
    }
  }
  if (!open.empty()) return std::nullopt;
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

Word bracket_subsequence(std::span<const Symbol> word) {
  Word out;
  for (const Symbol& s : word) {
    if (s.kind() == SymbolKind::LeftParen || s.kind() == SymbolKind::RightParen) {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Occurrence> occurrences(const FormulaTree& tree) {
  std::vector<Occurrence> out;
  std::vector<Symbol> scope;
  collect_occurrences(tree.root(), scope, out);
  return out;
}

bool is_sentence(const FormulaTree& tree) {
  const auto occ = occurrences(tree);
  return std::none_of(occ.begin(), occ.end(), [](const Occurrence& o) { return !o.bound; });
}

std::vector<const Node*> subformulas(const Node& root) {
  std::vector<const Node*> out;
  collect_preorder(root, out);
  return out;
}

std::vector<Symbol> quantified_variables(const Node& root) {
  std::vector<Symbol> out;
  for (const Node* n : subformulas(root)) {
    if (n->is_quantifier() &&
        std::find(out.begin(), out.end(), n->vars[0]) == out.end()) {
      out.push_back(n->vars[0]);
    }
  }
  return out;
}

std::vector<SymbolMismatch> word_diff(std::span<const Symbol> expected,
                                      std::span<const Symbol> actual) {
  std::vector<SymbolMismatch> out;
  const std::size_t n = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Symbol> e, a;
    if (i < expected.size()) e = expected[i];
    if (i < actual.size()) a = actual[i];
    if (e != a) out.push_back(SymbolMismatch{i + 1, e, a});
  }
  return out;
}

}  // namespace cantor
