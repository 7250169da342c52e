#include "cantor/semantics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

#include "cantor/error.hpp"

namespace cantor {

namespace {

constexpr std::size_t kMemoTableLimit = std::size_t{1} << 22;

class Compiler {
 public:
  std::vector<CompiledFormula::Op> ops;
  std::vector<Symbol> slots;

  int slot_of(const Symbol& s) {
    auto it = std::find(slots.begin(), slots.end(), s);
    if (it != slots.end()) return static_cast<int>(it - slots.begin());
    slots.push_back(s);
    return static_cast<int>(slots.size() - 1);
  }

  int lower(const Node& node) {
    const int id = static_cast<int>(ops.size());
    CompiledFormula::Op op;
    op.kind = node.kind;
    ops.push_back(std::move(op));
    std::vector<int> free;
    switch (node.kind) {
      case NodeKind::Predicate:
        throw Error(ErrorCode::PredicateNotExpanded,
                    "predicate " + node.predicate + " must be expanded before evaluation",
                    node.span.first);
      case NodeKind::Membership:
      case NodeKind::Equality: {
        const int a = slot_of(node.vars[0]);
        const int b = slot_of(node.vars[1]);
        ops[id].a = a;
        ops[id].b = b;
        free = {a, b};
        break;
      }
      case NodeKind::Not: {
        const int c = lower(node.children[0]);
        ops[id].left = c;
        free = ops[c].free_slots;
        break;
      }
      case NodeKind::Exists:
      case NodeKind::Forall: {
        const int bound = slot_of(node.vars[0]);
        const int c = lower(node.children[0]);
        ops[id].a = bound;
        ops[id].left = c;
        free = ops[c].free_slots;
        free.erase(std::remove(free.begin(), free.end(), bound), free.end());
        break;
      }
      default: {
        const int l = lower(node.children[0]);
        const int r = lower(node.children[1]);
        ops[id].left = l;
        ops[id].right = r;
        free = ops[l].free_slots;
        free.insert(free.end(), ops[r].free_slots.begin(), ops[r].free_slots.end());
        break;
      }
    }
    std::sort(free.begin(), free.end());
    free.erase(std::unique(free.begin(), free.end()), free.end());
    ops[id].free_slots = std::move(free);
    return id;
  }
};

}  // namespace

class Evaluation {
 public:
  Evaluation(const CompiledFormula& f, const Digraph& g, bool memoize)
      : f_(f), g_(g), n_(static_cast<Vertex>(g.order())), vals_(f.slot_vars_.size(), 0) {
    if (!memoize) return;
    tables_.resize(f_.ops_.size());
    for (std::size_t i = 0; i < f_.ops_.size(); ++i) {
      const auto& op = f_.ops_[i];
      if (op.kind != NodeKind::Exists && op.kind != NodeKind::Forall) continue;
      std::size_t size = 1;
      bool fits = true;
      for (std::size_t k = 0; k < op.free_slots.size() && fits; ++k) {
        size *= g.order();
        fits = size <= kMemoTableLimit;
      }
      if (fits) tables_[i].assign(size, -1);
    }
  }

  void bind(int slot, Vertex v) { vals_[static_cast<std::size_t>(slot)] = v; }

  bool run(int id) {
    const auto& op = f_.ops_[static_cast<std::size_t>(id)];
    switch (op.kind) {
      case NodeKind::Membership: return g_.has_arrow(val(op.a), val(op.b));
      case NodeKind::Equality: return val(op.a) == val(op.b);
      case NodeKind::Not: return !run(op.left);
      case NodeKind::Implies: return !run(op.left) || run(op.right);
      case NodeKind::Iff: return run(op.left) == run(op.right);
      case NodeKind::And: return run(op.left) && run(op.right);
      case NodeKind::Or: return run(op.left) || run(op.right);
      case NodeKind::Exists:
      case NodeKind::Forall: return quantifier(id, op);
      case NodeKind::Predicate: break;
    }
    return false;
  }

 private:
  Vertex val(int slot) const { return vals_[static_cast<std::size_t>(slot)]; }

  bool quantifier(int id, const CompiledFormula::Op& op) {
    std::int8_t* cached = nullptr;
    if (!tables_.empty() && !tables_[static_cast<std::size_t>(id)].empty()) {
      std::size_t key = 0;
      for (int s : op.free_slots) key = key * g_.order() + (val(s) - 1);
      cached = &tables_[static_cast<std::size_t>(id)][key];
      if (*cached >= 0) return *cached == 1;
    }
    const bool existential = op.kind == NodeKind::Exists;
    const Vertex saved = val(op.a);
    bool result = !existential;
    for (Vertex v = 1; v <= n_; ++v) {
      vals_[static_cast<std::size_t>(op.a)] = v;
      if (run(op.left) == existential) {
        result = existential;
        break;
      }
    }
    vals_[static_cast<std::size_t>(op.a)] = saved;
    if (cached) *cached = result ? 1 : 0;
    return result;
  }

  const CompiledFormula& f_;
  const Digraph& g_;
  Vertex n_;
  std::vector<Vertex> vals_;
  std::vector<std::vector<std::int8_t>> tables_;
};

CompiledFormula::CompiledFormula(const FormulaTree& tree) {
  Compiler c;
  c.lower(tree.root());
  ops_ = std::move(c.ops);
  slot_vars_ = std::move(c.slots);
  for (int s : ops_[0].free_slots) free_.push_back(slot_vars_[static_cast<std::size_t>(s)]);
}

bool CompiledFormula::evaluate(const Digraph& graph, const Environment& env,
                               EvalOptions options) const {
  Evaluation run(*this, graph, options.memoize);
  for (std::size_t s = 0; s < slot_vars_.size(); ++s) {
    auto it = env.find(slot_vars_[s]);
    const bool is_free = std::binary_search(ops_[0].free_slots.begin(), ops_[0].free_slots.end(),
                                            static_cast<int>(s));
    if (it == env.end()) {
      if (is_free) {
        throw Error(ErrorCode::UnboundVariable,
                    "variable " + slot_vars_[s].text() + " is free but unbound");
      }
      run.bind(static_cast<int>(s), 1);
      continue;
    }
    if (!graph.contains(it->second)) {
      throw Error(ErrorCode::VertexOutOfRange, "variable " + slot_vars_[s].text() +
                                                   " is bound to vertex " +
                                                   std::to_string(it->second) + " outside [1," +
                                                   std::to_string(graph.order()) + "]");
    }
    run.bind(static_cast<int>(s), it->second);
  }
  return run.run(0);
}

bool eval(const Digraph& graph, const FormulaTree& tree, const Environment& env,
          EvalOptions options) {
  return CompiledFormula(tree).evaluate(graph, env, options);
}

bool eval_sentence(const Digraph& graph, const FormulaTree& tree, EvalOptions options) {
  CompiledFormula compiled(tree);
  if (!compiled.is_sentence()) {
    throw Error(ErrorCode::NotASentence,
                "formula has a free occurrence of " + compiled.free_variables().front().text());
  }
  return compiled.evaluate(graph, {}, options);
}

Environment parse_environment(std::string_view text) {
  Environment env;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "assignment '" + std::string(item) +
                                                  "' is not of the form var=vertex");
    }
    const Word var = tokenize(item.substr(0, eq));
    if (var.size() != 1 || !var[0].is_variable()) {
      throw Error(ErrorCode::InvalidArgument,
                  "'" + std::string(item.substr(0, eq)) + "' is not a variable");
    }
    const std::string_view number = item.substr(eq + 1);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(number.data(), number.data() + number.size(), v);
    if (ec != std::errc{} || p != number.data() + number.size() || v == 0 ||
        v > UINT32_MAX) {
      throw Error(ErrorCode::InvalidArgument,
                  "'" + std::string(number) + "' is not a vertex number");
    }
    env[var[0]] = static_cast<Vertex>(v);
  }
  return env;
}

}  // namespace cantor
