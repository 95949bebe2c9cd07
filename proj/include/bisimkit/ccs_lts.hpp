// bisimkit/ccs_lts.hpp: interleaving semantics of microCCS(+) and the
// brute-force strong bisimilarity oracle.
//
// The oracle explores the joint reachable graph of its arguments and runs
// signature refinement on it. It never looks at normal forms, so agreement
// with the normalizer is a meaningful check.

#ifndef BISIMKIT_CCS_LTS_HPP
#define BISIMKIT_CCS_LTS_HPP

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bisimkit/ccs_term.hpp"
#include "bisimkit/lts.hpp"

namespace bisimkit {

/// A visible interaction or the silent action.
struct CcsAction {
  std::optional<Prefix> visible;

  static CcsAction tau() { return {}; }
  static CcsAction of(Prefix p) { return {p}; }
  bool is_tau() const { return !visible.has_value(); }
  std::string str() const { return visible ? visible->str() : "tau"; }

  friend bool operator==(const CcsAction&, const CcsAction&) = default;
  friend std::strong_ordering operator<=>(const CcsAction& a, const CcsAction& b) {
    // tau sorts first
    if (a.is_tau() || b.is_tau()) return b.is_tau() <=> a.is_tau();
    return *a.visible <=> *b.visible;
  }
};

struct CcsTransition {
  CcsAction action;
  Term target;

  friend bool operator==(const CcsTransition&, const CcsTransition&) = default;
  friend std::strong_ordering operator<=>(const CcsTransition& a, const CcsTransition& b) {
    if (auto c = a.action <=> b.action; c != 0) return c;
    return a.target <=> b.target;
  }
};

namespace detail {

/// Visible moves of one top-level component (a prefix or a guarded sum).
inline void component_moves(const Term& c, std::vector<std::pair<Prefix, Term>>& out) {
  switch (c.kind()) {
    case TermKind::Prefix:
      out.emplace_back(c.head(), c.continuation());
      break;
    case TermKind::Sum:
      for (const auto& s : c.children()) component_moves(s, out);
      break;
    case TermKind::Var:
      throw std::invalid_argument("transitions are defined on ground terms only");
    default:
      break;
  }
}

inline std::vector<Term> without(const std::vector<Term>& xs, std::size_t i) {
  std::vector<Term> out;
  out.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (k != i) out.push_back(xs[k]);
  return out;
}

inline std::vector<Term> without(const std::vector<Term>& xs, std::size_t i, std::size_t j) {
  std::vector<Term> out;
  out.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (k != i && k != j) out.push_back(xs[k]);
  return out;
}

}  // namespace detail

/// All transitions of a canonical ground microCCS or microCCS+ term.
/// The result is sorted and free of duplicates.
inline std::vector<CcsTransition> transitions(const Term& t) {
  if (!t.is_ground()) throw std::invalid_argument("transitions are defined on ground terms only");
  const auto comps = t.components();
  std::vector<std::vector<std::pair<Prefix, Term>>> moves(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) detail::component_moves(comps[i], moves[i]);

  std::set<CcsTransition> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i > 0 && comps[i] == comps[i - 1]) continue;  // identical components move alike
    for (const auto& [eta, cont] : moves[i]) {
      auto rest = detail::without(comps, i);
      rest.push_back(cont);
      out.insert({CcsAction::of(eta), Term::par(std::move(rest))});
    }
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      for (const auto& [eta, ci] : moves[i]) {
        for (const auto& [eta2, cj] : moves[j]) {
          if (eta2 != eta.complement()) continue;
          auto rest = detail::without(comps, i, j);
          rest.push_back(ci);
          rest.push_back(cj);
          out.insert({CcsAction::tau(), Term::par(std::move(rest))});
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

using CcsGraph = TransitionGraph<Term, CcsAction>;

/// Reachable transition graph from one or more ground roots.
inline CcsGraph reachable_lts(std::span<const Term> roots) {
  std::vector<Term> canon;
  canon.reserve(roots.size());
  for (const auto& r : roots) {
    if (!r.is_ground()) throw std::invalid_argument("transitions are defined on ground terms only");
    canon.push_back(canonicalize(r));
  }
  return explore<Term, CcsAction>(std::span<const Term>(canon), [](const Term& s) {
    std::vector<std::pair<CcsAction, std::vector<Term>>> succ;
    for (auto& tr : transitions(s)) succ.push_back({tr.action, {tr.target}});
    return succ;
  });
}

inline CcsGraph reachable_lts(const Term& root) { return reachable_lts(std::span<const Term>(&root, 1)); }

/// Strong bisimilarity classes of every state reachable from a set of
/// roots, computed once. Lookups for states outside the graph throw.
class StrongBisimClasses {
 public:
  explicit StrongBisimClasses(std::span<const Term> roots)
      : graph_(reachable_lts(roots)), refinement_(refine(graph_)) {}

  std::uint32_t block_of(const Term& t) const { return refinement_.blocks[graph_.id_of(canonicalize(t))]; }
  bool contains(const Term& t) const { return graph_.find(canonicalize(t)).has_value(); }
  bool bisimilar(const Term& p, const Term& q) const { return block_of(p) == block_of(q); }
  const CcsGraph& graph() const { return graph_; }
  std::size_t block_count() const { return refinement_.block_count; }

 private:
  CcsGraph graph_;
  Refinement refinement_;
};

/// Brute-force strong bisimilarity by refinement over the joint graph.
inline bool bisimilar_oracle(const Term& p, const Term& q) {
  const Term roots[] = {p, q};
  StrongBisimClasses classes{std::span<const Term>(roots)};
  return classes.bisimilar(p, q);
}

/// Least number of rounds of the bisimulation game separating p and q;
/// nullopt when they are bisimilar.
inline std::optional<std::size_t> distinguishing_depth(const Term& p, const Term& q) {
  const Term roots[] = {canonicalize(p), canonicalize(q)};
  auto g = reachable_lts(std::span<const Term>(roots));
  auto r = refine(g, /*keep_history=*/true);
  StateId a = g.roots()[0], b = g.roots()[1];
  if (r.blocks[a] == r.blocks[b]) return std::nullopt;
  for (std::size_t round = 0; round < r.history.size(); ++round)
    if (r.history[round][a] != r.history[round][b]) return round;
  return r.history.size();
}

/// Length of the longest path from the root; bounded by the root's size.
inline std::size_t lts_depth(const CcsGraph& g, StateId root) {
  std::vector<int> memo(g.state_count(), -1);
  auto go = [&](auto&& self, StateId s) -> std::size_t {
    if (memo[s] >= 0) return static_cast<std::size_t>(memo[s]);
    std::size_t best = 0;
    for (std::size_t e : g.out_edges(s))
      for (StateId t : g.edges()[e].targets) best = std::max(best, 1 + self(self, t));
    memo[s] = static_cast<int>(best);
    return best;
  };
  return go(go, root);
}

}  // namespace bisimkit

#endif  // BISIMKIT_CCS_LTS_HPP
