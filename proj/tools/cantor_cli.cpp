#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantor/analysis.hpp"
#include "cantor/cantor_sentence.hpp"
#include "cantor/census.hpp"
#include "cantor/crosscheck.hpp"
#include "cantor/digraph.hpp"
#include "cantor/error.hpp"
#include "cantor/formula.hpp"
#include "cantor/scheme.hpp"
#include "cantor/semantics.hpp"

namespace {

using namespace cantor;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

struct FormulaText {
  std::size_t line = 0;
  std::string text;
};

// One formula per nonblank line in line mode, otherwise the whole input.
std::vector<FormulaText> formula_texts(const std::string& input, bool lines) {
  std::vector<FormulaText> out;
  std::istringstream in(input);
  std::string line;
  std::size_t line_no = 0;
  std::string joined;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    if (lines) {
      out.push_back({line_no, body});
    } else {
      joined += body + " ";
    }
  }
  if (!lines) out.push_back({1, joined});
  return out;
}

std::string annotation(const Word& w) {
  return "# length=" + std::to_string(w.size()) +
         " neg=" + std::to_string(count_kind(w, SymbolKind::Negation));
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s.to_vector()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

template <class Set>
std::string index_set_text(const Set& s) {
  std::string out = "{";
  for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string span_text(const Span& s) {
  return "[" + std::to_string(s.first) + "," + std::to_string(s.last) + "]";
}

SignatureSet signatures_from(const std::string& scheme_path) {
  if (scheme_path.empty()) return {};
  SignatureSet sigs;
  for (const Shortcut& s : read_shortcuts(read_input(scheme_path))) sigs.push_back(s.predicate);
  return sigs;
}

Digraph digraph_from(const std::string& path) {
  std::vector<std::string> warnings;
  Digraph g = load_digraph(read_input(path), &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  return g;
}

CantorMethod method_from(const std::string& name) {
  return name == "phi" ? CantorMethod::Phi : CantorMethod::Semantic;
}

void report(const std::string& check, bool verdict) {
  std::cout << check << " " << (verdict ? "true" : "false") << "\n";
}

struct Options {
  std::string formula;
  std::string digraph;
  std::string scheme;
  std::string assign;
  std::string method = "semantic";
  std::string mode = "strict";
  std::string diff;
  std::vector<std::size_t> n;
  std::size_t jobs = 1;
  std::size_t levels = 1;
  std::size_t guard = kDefaultCensusGuard;
  std::size_t degree_guard = kDefaultInDegreeGuard;
  std::size_t samples = kDefaultCrosscheckSamples;
  std::uint64_t seed = kDefaultCrosscheckSeed;
  std::optional<Vertex> function;
  std::optional<Vertex> domain;
  bool lines = false;
  bool zf = false;
  bool check_lengths = false;
  bool list_witnesses = false;
  bool exhaustive = false;
};

int cmd_parse(const Options& o) {
  const SignatureSet sigs = signatures_from(o.scheme);
  int status = kExitOk;
  for (const FormulaText& f : formula_texts(read_input(o.formula), o.lines)) {
    try {
      const FormulaTree t = parse_text(f.text, sigs, o.zf ? Dialect::ZF : Dialect::ZFPrime);
      std::cout << t.text() << " " << annotation(t.word()) << "\n";
    } catch (const Error& e) {
      std::cerr << "line " << f.line << ": " << e.what() << "\n";
      status = kExitFalse;
    }
  }
  return status;
}

int cmd_classify(const Options& o) {
  const SignatureSet sigs = signatures_from(o.scheme);
  int status = kExitOk;
  for (const FormulaText& f : formula_texts(read_input(o.formula), o.lines)) {
    try {
      const FormulaTree t = parse_text(f.text, sigs, o.zf ? Dialect::ZF : Dialect::ZFPrime);
      const Classification c = classify(t);
      std::cout << to_string(c.label);
      if (c.bound) std::cout << " " << c.bound->text();
      std::cout << "\n";
      for (const Node* n : c.constituents) {
        std::cout << "constituent " << span_text(n->span) << " " << render_text(render(*n)) << "\n";
      }
    } catch (const Error& e) {
      std::cerr << "line " << f.line << ": " << e.what() << "\n";
      status = kExitFalse;
    }
  }
  return status;
}

int cmd_expand_scheme(const Options& o) {
  Scheme scheme;
  try {
    scheme = load_scheme(read_input(o.scheme),
                         o.mode == "relaxed" ? SchemeMode::Relaxed : SchemeMode::Strict);
  } catch (const Error& e) {
    std::cerr << "invalid scheme: " << e.what() << "\n";
    return kExitFalse;
  }
  const auto expansions = expand(scheme);
  for (std::size_t i = 1; i <= scheme.size(); ++i) {
    const FormulaTree& e = expansions[i - 1];
    std::cout << "# " << i << " " << scheme.shortcut(i).predicate.name
              << " R=" << index_set_text(scheme.referenced(i))
              << " V=" << index_set_text(scheme.variables(i)) << "\n";
    std::cout << e.text() << " " << annotation(e.word()) << "\n";
  }
  return kExitOk;
}

int cmd_emit_expansions(const Options& o) {
  const auto& expansions = emit_expansions();
  bool ok = true;
  for (const NamedExpansion& e : expansions) {
    std::cout << e.formula.text() << " " << annotation(e.formula.word()) << "\n";
    const std::size_t neg = count_kind(e.formula.word(), SymbolKind::Negation);
    if (o.check_lengths && (e.formula.length() != kExpansionLengths[e.index - 1] || neg != 0)) {
      std::cerr << "check-lengths: E" << e.index << " has length " << e.formula.length()
                << " neg " << neg << ", expected " << kExpansionLengths[e.index - 1] << " neg 0\n";
      ok = false;
    }
  }
  if (o.check_lengths && ok) std::cerr << "check-lengths ok\n";
  return ok ? kExitOk : kExitFalse;
}

int cmd_emit_phi(const Options& o) {
  const FormulaTree& phi = emit_phi();
  std::cout << phi.text() << " " << annotation(phi.word()) << "\n";
  int status = kExitOk;
  const std::size_t neg = count_kind(phi.word(), SymbolKind::Negation);
  if (o.check_lengths) {
    if (phi.length() != kPhiLength || neg != kPhiNegations || !is_sentence(phi)) {
      std::cerr << "check-lengths: length=" << phi.length() << " neg=" << neg << ", expected "
                << kPhiLength << " and " << kPhiNegations << "\n";
      status = kExitFalse;
    } else {
      std::cerr << "check-lengths ok length=" << phi.length() << " neg=" << neg << "\n";
    }
  }
  if (!o.diff.empty()) {
    Word printed;
    for (const FormulaText& f : formula_texts(read_input(o.diff), false)) printed = tokenize(f.text);
    const auto mismatches = word_diff(printed, phi.word());
    for (const SymbolMismatch& m : mismatches) {
      std::cout << "# diff position=" << m.position
                << " printed=" << (m.expected ? m.expected->text() : "-")
                << " generated=" << (m.actual ? m.actual->text() : "-") << "\n";
    }
    std::cout << "# diff mismatches=" << mismatches.size() << "\n";
  }
  return status;
}

int cmd_eval(const Options& o) {
  const Digraph g = digraph_from(o.digraph);
  const Environment env = parse_environment(o.assign);
  bool all = true;
  for (const FormulaText& f : formula_texts(read_input(o.formula), o.lines)) {
    const bool value = eval(g, parse_text(f.text), env);
    report("eval", value);
    all = all && value;
  }
  return all ? kExitOk : kExitFalse;
}

int cmd_is_cantor(const Options& o) {
  const Digraph g = digraph_from(o.digraph);
  const bool value = is_cantor(g, method_from(o.method));
  report("is-cantor", value);
  if (!value) {
    const auto ce = DigraphAnalysis(g).cantor_counterexample();
    if (ce) std::cout << "witness u=" << ce->first << " v=" << ce->second << "\n";
  }
  return value ? kExitOk : kExitFalse;
}

int cmd_is_strongly_extensive(const Options& o) {
  const Digraph g = digraph_from(o.digraph);
  const auto gap = extensivity_gap(g, o.degree_guard);
  report("is-strongly-extensive", !gap);
  if (gap) std::cout << "witness u=" << gap->vertex << " subset=" << set_text(gap->subset) << "\n";
  return gap ? kExitFalse : kExitOk;
}

int cmd_extract_surjection(const Options& o) {
  const Digraph g = digraph_from(o.digraph);
  const DigraphAnalysis analysis(g);
  Vertex function = 0;
  Vertex domain = 0;
  if (o.function && o.domain) {
    function = *o.function;
    domain = *o.domain;
    if (!g.contains(function) || !g.contains(domain)) {
      throw UsageError("--function and --domain must lie in [1," + std::to_string(g.order()) + "]");
    }
    if (!analysis.sur(function, domain)) {
      report("extract-surjection", false);
      return kExitFalse;
    }
  } else if (o.function || o.domain) {
    throw UsageError("--function and --domain must be given together");
  } else {
    const auto ce = analysis.cantor_counterexample();
    if (!ce) {
      report("extract-surjection", false);
      return kExitFalse;
    }
    domain = ce->first;
    function = ce->second;
  }
  const SurjectionWitness w = analysis.extract_surjection(function, domain);
  report("extract-surjection", true);
  std::cout << "function " << w.function_vertex << "\n";
  std::cout << "domain " << w.domain_vertex << " " << set_text(g.in_set(domain)) << "\n";
  std::cout << "power-set " << set_text(analysis.d_power_set(domain)) << "\n";
  for (const auto& [a, b] : w.graph) std::cout << "pair " << a << " " << b << "\n";
  return kExitOk;
}

int cmd_omega(const Options& o) {
  const auto levels = omega_levels(o.levels);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    std::cout << "# level " << j + 1 << " vertices " << levels[j].first << "-" << levels[j].second
              << "\n";
  }
  std::cout << write_digraph(omega_prefix(o.levels));
  return kExitOk;
}

int cmd_census(const Options& o) {
  CensusOptions options;
  options.jobs = o.jobs;
  options.method = method_from(o.method);
  options.guard = o.guard;
  options.collect_non_cantor = o.list_witnesses;
  bool diagonal_holds = true;
  for (std::size_t n : o.n) {
    const CensusRow row = census(n, options);
    std::cout << row.n << "\t" << row.total << "\t" << row.strongly_extensive << "\t" << row.cantor
              << "\t" << std::fixed << std::setprecision(3) << row.elapsed_ms << "\n";
    std::cout.unsetf(std::ios::floatfield);
    if (row.extensive_not_cantor > 0) {
      std::cerr << "n=" << n << ": " << row.extensive_not_cantor
                << " strongly extensive digraphs are not Cantor\n";
      diagonal_holds = false;
    }
    for (std::uint64_t code : row.non_cantor_codes) {
      std::cout << "# non-cantor n=" << n << " code=" << code << "\n"
                << write_digraph(Digraph::from_code(n, code));
    }
  }
  return diagonal_holds ? kExitOk : kExitFalse;
}

int cmd_check_oracles(const Options& o) {
  CrosscheckOptions options;
  options.seed = o.seed;
  options.samples = o.samples;
  options.exhaustive = o.exhaustive;
  bool ok = true;
  for (std::size_t n : o.n) {
    for (const PredicateCrosscheck& r : crosscheck_predicates(n, options)) {
      std::cout << "n=" << n << " " << to_string(r.predicate) << " "
                << (r.sampled ? "sampled" : "exhaustive") << " checked=" << r.checked
                << " mismatches=" << r.mismatches << "\n";
      if (r.first_mismatch) {
        std::cout << "# first mismatch code=" << r.first_mismatch->code << " args=";
        for (std::size_t i = 0; i < r.first_mismatch->args.size(); ++i) {
          std::cout << (i ? "," : "") << r.first_mismatch->args[i];
        }
        std::cout << "\n";
      }
      ok = ok && r.mismatches == 0;
    }
  }
  std::cout << "# seed=" << o.seed << " samples=" << o.samples << "\n";
  report("check-oracles", ok);
  return ok ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abbreviation-scheme expansion and finite digraph model checking"};
  app.set_version_flag("--version", "cantor 0.1.0");
  app.require_subcommand(1);
  Options o;

  const auto formula_flags = [&](CLI::App* sub) {
    sub->add_option("--formula", o.formula, "Formula file, '-' for stdin")->required();
    sub->add_flag("--lines", o.lines, "One formula per line");
  };
  const auto signature_flags = [&](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme, "Scheme file whose predicates may appear");
    sub->add_flag("--zf", o.zf, "Accept pure ZF formulas only");
  };
  const auto digraph_flag = [&](CLI::App* sub) {
    sub->add_option("--digraph", o.digraph, "Digraph file, '-' for stdin")->required();
  };
  const auto method_flag = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "Cantor check method")
        ->check(CLI::IsMember({"semantic", "phi"}));
  };

  auto* parse_cmd = app.add_subcommand("parse", "Parse formulas and print them with their length");
  formula_flags(parse_cmd);
  signature_flags(parse_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Top-level case and constituents");
  formula_flags(classify_cmd);
  signature_flags(classify_cmd);

  auto* expand_cmd = app.add_subcommand("expand-scheme", "Validate a scheme and expand it");
  expand_cmd->add_option("--scheme", o.scheme, "Scheme file")->required();
  expand_cmd->add_option("--mode", o.mode, "V-set condition")
      ->check(CLI::IsMember({"strict", "relaxed"}));

  auto* emit_exp_cmd = app.add_subcommand("emit-expansions", "Print E1 ... E9");
  emit_exp_cmd->add_flag("--check-lengths", o.check_lengths, "Assert the reference lengths");

  auto* emit_phi_cmd = app.add_subcommand("emit-phi", "Print the Cantor sentence");
  emit_phi_cmd->add_flag("--check-lengths", o.check_lengths, "Assert length 494 and one negation");
  emit_phi_cmd->add_option("--diff", o.diff, "Compare with a formula file symbol by symbol");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate formulas in a digraph");
  digraph_flag(eval_cmd);
  formula_flags(eval_cmd);
  eval_cmd->add_option("--assign", o.assign, "Bindings such as x1=3,x2=1");

  auto* cantor_cmd = app.add_subcommand("is-cantor", "Check Cantor's theorem in a digraph");
  digraph_flag(cantor_cmd);
  method_flag(cantor_cmd);

  auto* ext_cmd = app.add_subcommand("is-strongly-extensive", "Check strong extensivity");
  digraph_flag(ext_cmd);
  ext_cmd->add_option("--guard", o.degree_guard, "Largest in-degree to expand");

  auto* sur_cmd = app.add_subcommand("extract-surjection", "Print the pair graph of a surjection");
  digraph_flag(sur_cmd);
  sur_cmd->add_option("--function", o.function, "Surjection vertex");
  sur_cmd->add_option("--domain", o.domain, "Domain vertex");

  auto* omega_cmd = app.add_subcommand("omega", "Print a prefix of the countable digraph");
  omega_cmd->add_option("--levels", o.levels, "Number of levels")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxOmegaLevels));

  auto* census_cmd = app.add_subcommand("census", "Count strongly extensive and Cantor digraphs");
  census_cmd->add_option("--n", o.n, "Orders, e.g. 1,2,3")->required()->delimiter(',');
  census_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--guard", o.guard, "Largest order allowed")
      ->check(CLI::Range(std::size_t{1}, kMaxCensusOrder));
  method_flag(census_cmd);
  census_cmd->add_flag("--list-witnesses", o.list_witnesses, "Print every non-Cantor digraph");

  auto* oracle_cmd = app.add_subcommand("check-oracles",
                                        "Compare predicate readings with their expansions");
  oracle_cmd->add_option("--n", o.n, "Orders, e.g. 2,3")->delimiter(',')->default_str("3");
  oracle_cmd->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  oracle_cmd->add_option("--samples", o.samples, "Tuples per digraph for REL, FUN, SUR")
      ->capture_default_str();
  oracle_cmd->add_flag("--exhaustive", o.exhaustive, "Check every tuple of every predicate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (oracle_cmd->parsed() && o.n.empty()) o.n = {3};

  try {
    if (parse_cmd->parsed()) return cmd_parse(o);
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (expand_cmd->parsed()) return cmd_expand_scheme(o);
    if (emit_exp_cmd->parsed()) return cmd_emit_expansions(o);
    if (emit_phi_cmd->parsed()) return cmd_emit_phi(o);
    if (eval_cmd->parsed()) return cmd_eval(o);
    if (cantor_cmd->parsed()) return cmd_is_cantor(o);
    if (ext_cmd->parsed()) return cmd_is_strongly_extensive(o);
    if (sur_cmd->parsed()) return cmd_extract_surjection(o);
    if (omega_cmd->parsed()) return cmd_omega(o);
    if (census_cmd->parsed()) return cmd_census(o);
    if (oracle_cmd->parsed()) return cmd_check_oracles(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
