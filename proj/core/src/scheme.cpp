#include "cantor/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "cantor/error.hpp"
#include "cantor/substitution.hpp"

namespace cantor {

namespace {

std::string set_text(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

void check_params(const Shortcut& sc) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::InvalidParameters, "shortcut " + sc.predicate.name + ": " + why);
  };
  if (sc.predicate.arity == 0) throw bad("arity must be positive");
  if (sc.params.size() != sc.predicate.arity) {
    throw bad("expected " + std::to_string(sc.predicate.arity) + " parameters, got " +
              std::to_string(sc.params.size()));
  }
  bool letter_style = true;
  bool indexed_style = true;
  for (std::size_t i = 0; i < sc.params.size(); ++i) {
    const Symbol& p = sc.params[i];
    if (!p.is_new_var()) throw bad("parameter '" + p.text() + "' is not a new variable");
    for (std::size_t j = 0; j < i; ++j) {
      if (sc.params[j] == p) throw bad("parameter '" + p.text() + "' repeated");
    }
    const bool xyz = p.index() == 0 && (p.letter() == 'x' || p.letter() == 'y' || p.letter() == 'z');
    letter_style = letter_style && xyz;
    indexed_style = indexed_style && p.index() > 0;
  }
  if (letter_style && sc.params.size() > 3) throw bad("?x ?y ?z parameters need arity <= 3");
  if (!letter_style && !indexed_style) {
    throw bad("parameters must be all of ?x ?y ?z or all of ?y<k>");
  }
}

}  // namespace

std::size_t Scheme::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < shortcuts_.size(); ++i) {
    if (shortcuts_[i].predicate.name == name) return i + 1;
  }
  return 0;
}

SignatureSet Scheme::signatures() const {
  SignatureSet out;
  for (const Shortcut& sc : shortcuts_) out.push_back(sc.predicate);
  return out;
}

Scheme validate_scheme(std::vector<Shortcut> shortcuts, SchemeMode mode) {
  Scheme scheme;
  scheme.mode_ = mode;

  for (std::size_t i = 0; i < shortcuts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (shortcuts[i].predicate.name == shortcuts[j].predicate.name) {
        throw Error(ErrorCode::DuplicatePredicate,
                    "predicate " + shortcuts[i].predicate.name + " is defined twice");
      }
    }
  }

  const auto index_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t k = 0; k < shortcuts.size(); ++k) {
      if (shortcuts[k].predicate.name == name) return k + 1;
    }
    return 0;
  };

  for (std::size_t i = 0; i < shortcuts.size(); ++i) {
    const Shortcut& sc = shortcuts[i];
    const std::size_t idx = i + 1;
    check_params(sc);

    for (const Occurrence& o : occurrences(sc.body)) {
      if (o.variable.is_set_var() && !o.bound) {
        throw Error(ErrorCode::FreeSetVariable,
                    "shortcut " + sc.predicate.name + ": set variable " + o.variable.text() +
                        " occurs free at position " + std::to_string(o.position),
                    o.position);
      }
      if (o.variable.is_new_var() &&
          std::find(sc.params.begin(), sc.params.end(), o.variable) == sc.params.end()) {
        throw Error(ErrorCode::ForeignNewVariable,
                    "shortcut " + sc.predicate.name + ": new variable " + o.variable.text() +
                        " is not a parameter",
                    o.position);
      }
    }

    std::set<std::size_t> r;
    for (const Node* n : subformulas(sc.body.root())) {
      if (n->kind != NodeKind::Predicate) continue;
      const std::size_t k = index_of(n->predicate);
      if (k == 0) {
        throw Error(ErrorCode::UnknownPredicate,
                    "shortcut " + sc.predicate.name + " uses undefined predicate " + n->predicate);
      }
      if (shortcuts[k - 1].predicate.arity != n->vars.size()) {
        throw Error(ErrorCode::ArityMismatch,
                    "shortcut " + sc.predicate.name + " applies " + n->predicate + " to " +
                        std::to_string(n->vars.size()) + " arguments");
      }
      if (k >= idx) {
        throw Error(ErrorCode::CircularReference,
                    "shortcut " + std::to_string(idx) + " (" + sc.predicate.name +
                        ") refers to shortcut " + std::to_string(k) + " (" + n->predicate + ")");
      }
      r.insert(k);
    }

    std::set<std::uint64_t> v;
    for (const Symbol& s : sc.body.word()) {
      if (s.is_set_var()) v.insert(s.index());
    }

    for (std::size_t j = 0; j < scheme.v_sets_.size(); ++j) {
      const auto& earlier = scheme.v_sets_[j];
      bool clash = false;
      if (mode == SchemeMode::Strict) {
        clash = !earlier.empty() && !v.empty() && *earlier.rbegin() >= *v.begin();
      } else {
        clash = std::any_of(v.begin(), v.end(), [&](std::uint64_t x) { return earlier.count(x) > 0; });
      }
      if (clash) {
        throw Error(ErrorCode::VariableClash,
                    "V(" + std::to_string(j + 1) + ")=" + set_text(earlier) + " and V(" +
                        std::to_string(idx) + ")=" + set_text(v) +
                        (mode == SchemeMode::Strict ? " are not strictly increasing"
                                                    : " are not disjoint"));
      }
    }

    scheme.r_sets_.push_back(std::move(r));
    scheme.v_sets_.push_back(std::move(v));
  }

  scheme.shortcuts_ = std::move(shortcuts);
  return scheme;
}

std::vector<FormulaTree> expand(const Scheme& scheme) {
  std::vector<FormulaTree> expansions;
  expansions.reserve(scheme.size());
  for (std::size_t i = 1; i <= scheme.size(); ++i) {
    const Shortcut& sc = scheme.shortcut(i);
    const std::vector<Symbol> host_bound = quantified_variables(sc.body.root());

    std::vector<Replacement<Symbol>> patches;
    for (const Node* n : subformulas(sc.body.root())) {
      if (n->kind != NodeKind::Predicate) continue;
      const std::size_t k = scheme.index_of(n->predicate);
      const Shortcut& callee = scheme.shortcut(k);
      const FormulaTree& callee_expansion = expansions[k - 1];

      for (const Symbol& b : quantified_variables(callee_expansion.root())) {
        if (std::find(host_bound.begin(), host_bound.end(), b) != host_bound.end()) {
          throw Error(ErrorCode::VariableClash,
                      "expanding " + callee.predicate.name + " inside " + sc.predicate.name +
                          " would capture " + b.text());
        }
      }

      std::vector<std::pair<Symbol, Symbol>> renaming;
      for (std::size_t t = 0; t < callee.params.size(); ++t) {
        renaming.emplace_back(callee.params[t], n->vars[t]);
      }
      patches.push_back(Replacement<Symbol>{sub1(callee_expansion.word(), renaming),
                                            Interval{n->span.first, n->span.last}});
    }

    Word word = patches.empty() ? sc.body.word() : sub2(sc.body.word(), std::move(patches));
    expansions.push_back(parse(std::move(word)));
  }
  return expansions;
}

FormulaTree instantiate(const FormulaTree& expansion, const Assignment& assignment) {
  for (const auto& [from, to] : assignment) {
    if (!from.is_new_var()) {
      throw Error(ErrorCode::InvalidArgument,
                  "instantiate renames new variables only, got " + from.text());
    }
    if (!to.is_variable()) {
      throw Error(ErrorCode::InvalidArgument, "instantiate target " + to.text() +
                                                  " is not a variable");
    }
  }
  for (const Occurrence& o : occurrences(expansion)) {
    if (o.bound || !o.variable.is_new_var()) continue;
    const bool covered = std::any_of(assignment.begin(), assignment.end(),
                                     [&](const auto& a) { return a.first == o.variable; });
    if (!covered) {
      throw Error(ErrorCode::UncoveredParameter,
                  "free variable " + o.variable.text() + " has no assignment", o.position);
    }
  }
  return parse(sub1(expansion.word(), assignment));
}

std::vector<Shortcut> read_shortcuts(std::string_view text) {
  struct Pending {
    std::size_t line;
    PredicateSignature sig;
    std::vector<Symbol> params;
    std::string body;
  };
  std::vector<Pending> pending;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto bad = [&](const std::string& why) {
      return Error(ErrorCode::BadSchemeLine, "line " + std::to_string(line_no) + ": " + why,
                   line_no);
    };
    const auto sep = line.find(":=");
    if (sep == std::string::npos) throw bad("missing ':='");

    Word head;
    try {
      head = tokenize(std::string_view(line).substr(0, sep));
    } catch (const Error& e) {
      throw bad(e.what());
    }
    if (head.size() < 4 || !head[0].is_predicate() ||
        head[1].kind() != SymbolKind::LeftParen || head.back().kind() != SymbolKind::RightParen) {
      throw bad("expected 'NAME ( ?p ; ... )' before ':='");
    }
    Pending p{line_no, {head[0].name(), 0}, {}, line.substr(sep + 2)};
    for (std::size_t i = 2; i + 1 < head.size(); ++i) {
      const bool want_var = (i % 2) == 0;
      if (want_var) {
        if (!head[i].is_variable()) throw bad("expected a parameter, got " + head[i].text());
        p.params.push_back(head[i]);
      } else if (head[i].kind() != SymbolKind::Semicolon) {
        throw bad("expected ';' between parameters");
      }
    }
    if (head.size() % 2 != 0) throw bad("dangling ';' in parameter list");
    p.sig.arity = p.params.size();
    pending.push_back(std::move(p));
  }

  SignatureSet sigs;
  for (const Pending& p : pending) sigs.push_back(p.sig);

  std::vector<Shortcut> out;
  for (Pending& p : pending) {
    try {
      out.push_back(Shortcut{p.sig, std::move(p.params), parse_text(p.body, sigs)});
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(p.line) + ": " + e.what(), e.position());
    }
  }
  return out;
}

Scheme load_scheme(std::string_view text, SchemeMode mode) {
  return validate_scheme(read_shortcuts(text), mode);
}

std::string render_shortcut(const Shortcut& shortcut) {
  std::string out = shortcut.predicate.name + " (";
  for (std::size_t i = 0; i < shortcut.params.size(); ++i) {
    out += i ? " ; " : " ";
    out += shortcut.params[i].text();
  }
  return out + " ) := " + shortcut.body.text();
}

}  // namespace cantor
