#include "cantor/analysis.hpp"

#include <algorithm>
#include <unordered_set>

#include "cantor/cantor_sentence.hpp"
#include "cantor/error.hpp"
#include "cantor/semantics.hpp"

namespace cantor {

std::size_t predicate_index(DigraphPredicate p) { return static_cast<std::size_t>(p) + 1; }

std::size_t predicate_arity(DigraphPredicate p) {
  switch (p) {
    case DigraphPredicate::DO:
    case DigraphPredicate::DOU:
    case DigraphPredicate::OPA: return 3;
    default: return 2;
  }
}

std::string_view to_string(DigraphPredicate p) {
  return kPredicateNames[predicate_index(p) - 1];
}

DigraphPredicate predicate_from_name(std::string_view name) {
  for (DigraphPredicate p : kAllPredicates) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown digraph predicate '" + std::string(name) + "'");
}

DigraphAnalysis::DigraphAnalysis(const Digraph& graph) : graph_(graph) {
  const Vertex n = static_cast<Vertex>(graph_.order());
  for (Vertex u = 1; u <= n; ++u) ++multiplicity_[graph_.in_set(u)];

  pairs_.resize(n);
  for (Vertex u = 1; u <= n; ++u) {
    const VertexSet& nu = graph_.in_set(u);
    const std::size_t deg = nu.size();
    if (deg < 1 || deg > 2 || realizations(nu) != 1) continue;

    // Any (v, w) with OPA(u; v; w) has v and w among the in-neighbors of the
    // members of N(u).
    VertexSet candidates(n);
    nu.for_each([&](Vertex a) { graph_.in_set(a).for_each([&](Vertex c) { candidates.insert(c); }); });
    const auto cand = candidates.to_vector();
    for (Vertex v : cand) {
      for (Vertex w : cand) {
        if (!opa(u, v, w)) continue;
        if (pairs_[u - 1]) {
          throw Error(ErrorCode::AmbiguousPair,
                      "vertex " + std::to_string(u) + " is both <" +
                          std::to_string(pairs_[u - 1]->first) + "," +
                          std::to_string(pairs_[u - 1]->second) + "> and <" + std::to_string(v) +
                          "," + std::to_string(w) + ">");
        }
        pairs_[u - 1] = PairResolution{u, v, w};
      }
    }
  }
}

void DigraphAnalysis::check(Vertex v) const {
  if (!graph_.contains(v)) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [1," +
                                                 std::to_string(graph_.order()) + "]");
  }
}

std::size_t DigraphAnalysis::realizations(const VertexSet& s) const {
  auto it = multiplicity_.find(s);
  return it == multiplicity_.end() ? 0 : it->second;
}

VertexSet DigraphAnalysis::d_power_set(Vertex u) const {
  check(u);
  const VertexSet& nu = graph_.in_set(u);
  VertexSet out(graph_.order());
  for (Vertex v = 1; v <= graph_.order(); ++v) {
    if (graph_.in_set(v).subset_of(nu)) out.insert(v);
  }
  return out;
}

bool DigraphAnalysis::sus(Vertex u, Vertex v) const {
  return graph_.in_set(u).subset_of(graph_.in_set(v));
}

bool DigraphAnalysis::si(Vertex u, Vertex v) const {
  const VertexSet& nu = graph_.in_set(u);
  return nu.size() == 1 && nu.contains(v);
}

bool DigraphAnalysis::sin(Vertex u, Vertex v) const {
  return si(u, v) && realizations(graph_.in_set(u)) == 1;
}

bool DigraphAnalysis::dbl(Vertex u, Vertex v, Vertex w) const {
  const VertexSet& nu = graph_.in_set(u);
  return nu.contains(v) && nu.contains(w) && nu.size() == (v == w ? 1u : 2u);
}

bool DigraphAnalysis::dou(Vertex u, Vertex v, Vertex w) const {
  return dbl(u, v, w) && realizations(graph_.in_set(u)) == 1;
}

bool DigraphAnalysis::opa(Vertex u, Vertex v, Vertex w) const {
  // u is the doubleton of a = {v}_D and b = {v, w}_D.
  const VertexSet& nu = graph_.in_set(u);
  if (nu.empty() || nu.size() > 2) return false;
  const auto members = nu.to_vector();
  for (Vertex a : members) {
    for (Vertex b : members) {
      if (dou(u, a, b) && sin(a, v) && dou(b, v, w)) return true;
    }
  }
  return false;
}

bool DigraphAnalysis::rel(Vertex u, Vertex v) const {
  const VertexSet& nv = graph_.in_set(v);
  bool ok = true;
  graph_.in_set(u).for_each([&](Vertex p) {
    const auto& pair = pairs_[p - 1];
    ok = ok && pair && nv.contains(pair->first) && sus(pair->second, v);
  });
  return ok;
}

bool DigraphAnalysis::fun(Vertex u, Vertex v) const {
  if (!rel(u, v)) return false;
  bool ok = true;
  graph_.in_set(v).for_each([&](Vertex w) {
    std::size_t hits = 0;
    graph_.in_set(u).for_each([&](Vertex p) { hits += pairs_[p - 1]->first == w ? 1 : 0; });
    ok = ok && hits == 1;
  });
  return ok;
}

bool DigraphAnalysis::sur(Vertex u, Vertex v) const {
  if (!fun(u, v)) return false;
  const VertexSet& nu = graph_.in_set(u);
  for (Vertex target = 1; target <= graph_.order(); ++target) {
    if (!sus(target, v)) continue;
    bool hit = false;
    nu.for_each([&](Vertex p) { hit = hit || pairs_[p - 1]->second == target; });
    if (!hit) return false;
  }
  return true;
}

bool DigraphAnalysis::holds(DigraphPredicate p, std::span<const Vertex> args) const {
  if (args.size() != predicate_arity(p)) {
    throw Error(ErrorCode::ArityMismatch, std::string(to_string(p)) + " takes " +
                                              std::to_string(predicate_arity(p)) +
                                              " arguments, got " + std::to_string(args.size()));
  }
  for (Vertex v : args) check(v);
  switch (p) {
    case DigraphPredicate::SUS: return sus(args[0], args[1]);
    case DigraphPredicate::SI: return si(args[0], args[1]);
    case DigraphPredicate::SIN: return sin(args[0], args[1]);
    case DigraphPredicate::DO: return dbl(args[0], args[1], args[2]);
    case DigraphPredicate::DOU: return dou(args[0], args[1], args[2]);
    case DigraphPredicate::OPA: return opa(args[0], args[1], args[2]);
    case DigraphPredicate::REL: return rel(args[0], args[1]);
    case DigraphPredicate::FUN: return fun(args[0], args[1]);
    case DigraphPredicate::SUR: return sur(args[0], args[1]);
  }
  return false;
}

std::optional<PairResolution> DigraphAnalysis::resolve_opa(Vertex u) const {
  check(u);
  return pairs_[u - 1];
}

SurjectionWitness DigraphAnalysis::extract_surjection(Vertex u, Vertex v) const {
  check(u);
  check(v);
  if (!sur(u, v)) {
    throw Error(ErrorCode::NotASurjection, "vertex " + std::to_string(u) +
                                               " is not a D-surjection from " + std::to_string(v) +
                                               " to its D-power set");
  }
  SurjectionWitness out{u, v, {}};
  graph_.in_set(u).for_each([&](Vertex p) {
    out.graph.emplace_back(pairs_[p - 1]->first, pairs_[p - 1]->second);
  });
  std::sort(out.graph.begin(), out.graph.end());

  // The pair graph must be a total function N(v) -> P(v) onto P(v).
  const VertexSet& nv = graph_.in_set(v);
  const VertexSet power = d_power_set(v);
  VertexSet domain(graph_.order()), image(graph_.order());
  for (const auto& [a, b] : out.graph) {
    if (!nv.contains(a) || domain.contains(a) || !power.contains(b)) {
      throw Error(ErrorCode::NotASurjection, "pair graph of vertex " + std::to_string(u) +
                                                 " is not a function into the D-power set");
    }
    domain.insert(a);
    image.insert(b);
  }
  if (!(domain == nv) || !(image == power)) {
    throw Error(ErrorCode::NotASurjection,
                "pair graph of vertex " + std::to_string(u) + " is not total and onto");
  }
  return out;
}

std::optional<std::pair<Vertex, Vertex>> DigraphAnalysis::cantor_counterexample() const {
  const Vertex n = static_cast<Vertex>(graph_.order());
  for (Vertex domain = 1; domain <= n; ++domain) {
    for (Vertex f = 1; f <= n; ++f) {
      if (sur(f, domain)) return std::make_pair(domain, f);
    }
  }
  return std::nullopt;
}

VertexSet in_neighbors(const Digraph& graph, Vertex u) { return graph.in_set(u); }

VertexSet d_power_set(const Digraph& graph, Vertex u) {
  return DigraphAnalysis(graph).d_power_set(u);
}

bool semantic_predicate(const Digraph& graph, DigraphPredicate p, std::span<const Vertex> args) {
  return DigraphAnalysis(graph).holds(p, args);
}

std::optional<PairResolution> resolve_opa(const Digraph& graph, Vertex u) {
  return DigraphAnalysis(graph).resolve_opa(u);
}

SurjectionWitness extract_surjection(const Digraph& graph, Vertex u, Vertex v) {
  return DigraphAnalysis(graph).extract_surjection(u, v);
}

bool is_cantor(const Digraph& graph, CantorMethod method) {
  if (method == CantorMethod::Phi) {
    static const CompiledFormula phi(emit_phi());
    return phi.evaluate(graph, {}, EvalOptions{.memoize = true});
  }
  return !DigraphAnalysis(graph).cantor_counterexample().has_value();
}

std::optional<ExtensivityGap> extensivity_gap(const Digraph& graph, std::size_t guard) {
  const Vertex n = static_cast<Vertex>(graph.order());
  for (Vertex u = 1; u <= n; ++u) {
    const std::size_t deg = graph.in_set(u).size();
    if (deg > guard) {
      throw Error(ErrorCode::InDegreeTooLarge,
                  "vertex " + std::to_string(u) + " has in-degree " + std::to_string(deg) +
                      " above the guard " + std::to_string(guard));
    }
  }

  std::unordered_set<VertexSet, VertexSetHash> realized;
  for (Vertex u = 1; u <= n; ++u) realized.insert(graph.in_set(u));

  std::unordered_set<VertexSet, VertexSetHash> done;
  for (Vertex u = 1; u <= n; ++u) {
    const VertexSet& nu = graph.in_set(u);
    if (!done.insert(nu).second) continue;
    const auto members = nu.to_vector();
    const std::uint64_t subsets = std::uint64_t{1} << members.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      VertexSet a(n);
      for (std::size_t t = 0; t < members.size(); ++t) {
        if ((mask >> t) & 1u) a.insert(members[t]);
      }
      if (!realized.count(a)) return ExtensivityGap{u, std::move(a)};
    }
  }
  return std::nullopt;
}

bool is_strongly_extensive(const Digraph& graph, std::size_t guard) {
  return !extensivity_gap(graph, guard).has_value();
}

std::vector<std::pair<Vertex, Vertex>> omega_levels(std::size_t levels) {
  if (levels == 0) throw Error(ErrorCode::InvalidArgument, "omega_prefix needs at least one level");
  if (levels > kMaxOmegaLevels) {
    throw Error(ErrorCode::SizeGuardExceeded,
                "omega_prefix(" + std::to_string(levels) + ") would need more than 2^2059 vertices");
  }
  std::vector<std::pair<Vertex, Vertex>> out{{1, 1}};
  while (out.size() < levels) {
    const Vertex top = out.back().second;
    const Vertex m = Vertex{1} << top;
    out.emplace_back(top + 1, top + m);
  }
  return out;
}

Digraph omega_prefix(std::size_t levels) {
  const auto ranges = omega_levels(levels);
  std::vector<Arrow> arrows;
  for (std::size_t k = 1; k < ranges.size(); ++k) {
    const Vertex top = ranges[k - 1].second;  // X = [1, top]
    for (Vertex i = 1; i <= ranges[k].second - ranges[k].first + 1; ++i) {
      const Vertex target = top + i;
      const std::uint64_t subset = i - 1;  // A_i in binary-counter order
      for (Vertex x = 1; x <= top; ++x) {
        if ((subset >> (x - 1)) & 1u) arrows.emplace_back(x, target);
      }
    }
  }
  return Digraph(ranges.back().second, std::move(arrows));
}

}  // namespace cantor
