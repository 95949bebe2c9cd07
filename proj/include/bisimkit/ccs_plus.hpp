// Distributed transitions and distributed bisimilarity for microCCS with
// guarded sum.
//
// A distributed transition  p --eta--> <local, concurrent>  fires a prefix
// of one top-level component; the local residual is that prefix's
// continuation and the concurrent residual the remaining components. A
// communication between components i and j has local residual
// cont_i | cont_j. Distributed bisimilarity relates both residuals.

#ifndef BISIMKIT_CCS_PLUS_HPP
#define BISIMKIT_CCS_PLUS_HPP

#include <functional>
#include <set>
#include <span>
#include <vector>

#include "bisimkit/ccs_lts.hpp"
#include "bisimkit/ccs_term.hpp"
#include "bisimkit/lts.hpp"

namespace bisimkit {

/// Canonical form under the parallel and sum monoid laws plus idempotence.
inline Term canonicalize_plus(const Term& t) { return canonicalize(t); }

struct DistributedResidual {
  Term local;
  Term concurrent;

  friend bool operator==(const DistributedResidual&, const DistributedResidual&) = default;
  friend std::strong_ordering operator<=>(const DistributedResidual& a, const DistributedResidual& b) {
    if (auto c = a.local <=> b.local; c != 0) return c;
    return a.concurrent <=> b.concurrent;
  }
};

struct DTransition {
  CcsAction action;
  DistributedResidual residual;

  friend bool operator==(const DTransition&, const DTransition&) = default;
  friend std::strong_ordering operator<=>(const DTransition& a, const DTransition& b) {
    if (auto c = a.action <=> b.action; c != 0) return c;
    return a.residual <=> b.residual;
  }
};

inline std::vector<DTransition> d_transitions(const Term& t) {
  if (!t.is_ground()) throw std::invalid_argument("transitions are defined on ground terms only");
  const auto comps = t.components();
  std::vector<std::vector<std::pair<Prefix, Term>>> moves(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) detail::component_moves(comps[i], moves[i]);

  std::set<DTransition> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i > 0 && comps[i] == comps[i - 1]) continue;
    for (const auto& [eta, cont] : moves[i])
      out.insert({CcsAction::of(eta), {cont, Term::par(detail::without(comps, i))}});
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      for (const auto& [eta, ci] : moves[i])
        for (const auto& [eta2, cj] : moves[j])
          if (eta2 == eta.complement())
            out.insert({CcsAction::tau(), {Term::par(ci, cj), Term::par(detail::without(comps, i, j))}});
  return {out.begin(), out.end()};
}

using DistributedGraph = TransitionGraph<Term, CcsAction>;

/// Joint distributed-transition graph; every edge has two targets
/// (local, concurrent).
inline DistributedGraph reachable_distributed(std::span<const Term> roots) {
  std::vector<Term> canon;
  for (const auto& r : roots) {
    if (!r.is_ground()) throw std::invalid_argument("transitions are defined on ground terms only");
    canon.push_back(canonicalize(r));
  }
  return explore<Term, CcsAction>(std::span<const Term>(canon), [](const Term& s) {
    std::vector<std::pair<CcsAction, std::vector<Term>>> succ;
    for (auto& tr : d_transitions(s)) succ.push_back({tr.action, {tr.residual.local, tr.residual.concurrent}});
    return succ;
  });
}

/// Distributed bisimilarity classes over everything reachable from roots.
class DistributedBisimClasses {
 public:
  explicit DistributedBisimClasses(std::span<const Term> roots)
      : graph_(reachable_distributed(roots)), refinement_(refine(graph_)) {}

  std::uint32_t block_of(const Term& t) const { return refinement_.blocks[graph_.id_of(canonicalize(t))]; }
  bool contains(const Term& t) const { return graph_.find(canonicalize(t)).has_value(); }
  bool related(const Term& p, const Term& q) const { return block_of(p) == block_of(q); }
  std::size_t block_count() const { return refinement_.block_count; }

 private:
  DistributedGraph graph_;
  Refinement refinement_;
};

inline bool dsim(const Term& p, const Term& q) {
  const Term roots[] = {p, q};
  return DistributedBisimClasses{std::span<const Term>(roots)}.related(p, q);
}

/// Strong (interleaving) bisimilarity on microCCS+.
inline bool strong_bisim_plus(const Term& p, const Term& q) { return bisimilar_oracle(p, q); }

/// Reconstruction check: p == (eta.local + s) | concurrent for some s
/// drawn from the other summands of a top-level component (or s = 0).
inline bool reconstructs(const Term& p, const Prefix& eta, const DistributedResidual& r) {
  const Term fired = Term::prefix(eta, r.local);
  for (const auto& c : canonicalize(p).components()) {
    std::vector<Term> candidates{Term::nil()};
    if (c.kind() == TermKind::Sum) {
      std::vector<Term> others;
      for (const auto& s : c.children())
        if (s != fired) others.push_back(s);
      candidates.push_back(Term::sum(others));
      candidates.push_back(c);  // idempotence: eta.p1 may also stay in s
    }
    for (const auto& s : candidates)
      if (Term::par(Term::sum(fired, s), r.concurrent) == canonicalize(p)) return true;
  }
  return false;
}

/// Perfect matching between two lists under `related`, by augmenting paths.
inline bool perfect_matching(const std::vector<Term>& left, const std::vector<Term>& right,
                             const std::function<bool(const Term&, const Term&)>& related) {
  if (left.size() != right.size()) return false;
  const std::size_t n = left.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (related(left[i], right[j])) adj[i].push_back(j);
  std::vector<std::ptrdiff_t> owner(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    auto augment = [&](auto&& self, std::size_t u) -> bool {
      for (std::size_t v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        if (owner[v] < 0 || self(self, static_cast<std::size_t>(owner[v]))) {
          owner[v] = static_cast<std::ptrdiff_t>(u);
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, i)) return false;
  }
  return true;
}

}  // namespace bisimkit

#endif  // BISIMKIT_CCS_PLUS_HPP
