#include "cantor/symbol.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "cantor/error.hpp"

namespace cantor {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_self_delimiting(char c) { return c == '(' || c == ')' || c == ';'; }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses a positive decimal index without leading zeros.
bool parse_index(std::string_view digits, std::uint64_t& out) {
  if (digits.empty() || digits.front() == '0') return false;
  if (!std::all_of(digits.begin(), digits.end(), is_digit)) return false;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc{} && ptr == digits.data() + digits.size();
}

Symbol classify_token(std::string_view tok, std::size_t offset) {
  if (tok == "(") return Symbol::op(SymbolKind::LeftParen);
  if (tok == ")") return Symbol::op(SymbolKind::RightParen);
  if (tok == ";") return Symbol::op(SymbolKind::Semicolon);
  if (tok == "in") return Symbol::op(SymbolKind::Membership);
  if (tok == "=") return Symbol::op(SymbolKind::Equality);
  if (tok == "!") return Symbol::op(SymbolKind::Negation);
  if (tok == "->") return Symbol::op(SymbolKind::Implication);
  if (tok == "<->") return Symbol::op(SymbolKind::Biconditional);
  if (tok == "&") return Symbol::op(SymbolKind::Conjunction);
  if (tok == "|") return Symbol::op(SymbolKind::Disjunction);
  if (tok == "E") return Symbol::op(SymbolKind::Exists);
  if (tok == "A") return Symbol::op(SymbolKind::Forall);

  const auto malformed = [&] {
    return Error(ErrorCode::MalformedVariable,
                 "malformed variable '" + std::string(tok) + "' at offset " +
                     std::to_string(offset),
                 offset);
  };

  if (tok.front() == 'x') {
    std::uint64_t index = 0;
    if (!parse_index(tok.substr(1), index)) throw malformed();
    return Symbol::set_var(index);
  }
  if (tok.front() == '?') {
    if (tok.size() < 2) throw malformed();
    const char letter = tok[1];
    if (tok.size() == 2 && std::string_view("xyzabc").find(letter) != std::string_view::npos) {
      return Symbol::new_var(letter);
    }
    std::uint64_t subscript = 0;
    if (letter == 'y' && parse_index(tok.substr(2), subscript)) {
      return Symbol::new_var('y', subscript);
    }
    throw malformed();
  }
  if (is_predicate_name(tok)) return Symbol::predicate(std::string(tok));

  throw Error(ErrorCode::UnknownToken,
              "unknown token '" + std::string(tok) + "' at offset " + std::to_string(offset),
              offset);
}

}  // namespace

Symbol Symbol::set_var(std::uint64_t index) {
  if (index == 0) {
    throw Error(ErrorCode::MalformedVariable, "set variable index must be positive");
  }
  Symbol s;
  s.kind_ = SymbolKind::SetVar;
  s.index_ = index;
  return s;
}

Symbol Symbol::new_var(char letter, std::uint64_t subscript) {
  const bool plain = subscript == 0 && std::string_view("xyzabc").find(letter) != std::string_view::npos;
  const bool indexed = subscript > 0 && letter == 'y';
  if (!plain && !indexed) {
    throw Error(ErrorCode::MalformedVariable,
                std::string("invalid new variable '?") + letter +
                    (subscript ? std::to_string(subscript) : std::string()) + "'");
  }
  Symbol s;
  s.kind_ = SymbolKind::NewVar;
  s.letter_ = letter;
  s.index_ = subscript;
  return s;
}

Symbol Symbol::predicate(std::string name) {
  if (!is_predicate_name(name)) {
    throw Error(ErrorCode::InvalidArgument, "invalid predicate name '" + name + "'");
  }
  Symbol s;
  s.kind_ = SymbolKind::Predicate;
  s.name_ = std::move(name);
  return s;
}

Symbol Symbol::op(SymbolKind kind) {
  if (kind == SymbolKind::SetVar || kind == SymbolKind::NewVar || kind == SymbolKind::Predicate) {
    throw Error(ErrorCode::InvalidArgument, "Symbol::op needs a logical or bracket symbol");
  }
  Symbol s;
  s.kind_ = kind;
  return s;
}

std::string Symbol::text() const {
  switch (kind_) {
    case SymbolKind::SetVar: return "x" + std::to_string(index_);
    case SymbolKind::NewVar:
      return std::string("?") + letter_ + (index_ ? std::to_string(index_) : std::string());
    case SymbolKind::Membership: return "in";
    case SymbolKind::Equality: return "=";
    case SymbolKind::Negation: return "!";
    case SymbolKind::Implication: return "->";
    case SymbolKind::Biconditional: return "<->";
    case SymbolKind::Conjunction: return "&";
    case SymbolKind::Disjunction: return "|";
    case SymbolKind::Exists: return "E";
    case SymbolKind::Forall: return "A";
    case SymbolKind::LeftParen: return "(";
    case SymbolKind::RightParen: return ")";
    case SymbolKind::Semicolon: return ";";
    case SymbolKind::Predicate: return name_;
  }
  return "?";
}

std::size_t count(std::span<const Symbol> word, const Symbol& symbol) {
  return static_cast<std::size_t>(std::count(word.begin(), word.end(), symbol));
}

std::size_t count_kind(std::span<const Symbol> word, SymbolKind kind) {
  return static_cast<std::size_t>(std::count_if(
      word.begin(), word.end(), [kind](const Symbol& s) { return s.kind() == kind; }));
}

Word tokenize(std::string_view text) {
  Word word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (is_self_delimiting(text[i])) {
      j = i + 1;
    } else {
      while (j < text.size() && !is_space(text[j]) && !is_self_delimiting(text[j])) ++j;
    }
    word.push_back(classify_token(text.substr(i, j - i), i + 1));
    i = j;
  }
  return word;
}

std::string render_text(std::span<const Symbol> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i].text();
  }
  return out;
}

bool is_predicate_name(std::string_view name) {
  if (name.empty() || name == "E" || name == "A") return false;
  if (name.front() < 'A' || name.front() > 'Z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || is_digit(c) || c == '_';
  });
}

}  // namespace cantor
