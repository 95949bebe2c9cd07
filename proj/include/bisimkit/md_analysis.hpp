// bisimkit/md_analysis.hpp: mirrored dependencies
//
// Parallel shape: a tuple (eta1, eta2, S, T, R) with S --eta1--> S',
// T --eta2--> T', eta1 != eta2, and
//
//     eta2.S | T' | R   ~   S' | eta1.T | R.
//
// Diagram shape: a term q firing eta1 then eta2 and, in the other order,
// eta2 then eta1, where each second prefix sits inside the continuation of
// the first, and both end states are bisimilar.

#ifndef BISIMKIT_MD_ANALYSIS_HPP
#define BISIMKIT_MD_ANALYSIS_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bisimkit/ccs_lts.hpp"
#include "bisimkit/ccs_plus.hpp"
#include "bisimkit/enumerate.hpp"
#include "bisimkit/normalizer.hpp"

namespace bisimkit {

enum class Calculus { Ccs, CcsPlus };

enum class Equivalence { StrongCcs, StrongCcsPlus, Distributed };

inline bool equivalent(const Term& p, const Term& q, Equivalence eq) {
  switch (eq) {
    case Equivalence::StrongCcs:
      if (p.has_sum() || q.has_sum()) throw std::invalid_argument("sum is not part of microCCS");
      return bisimilar_oracle(p, q);
    case Equivalence::StrongCcsPlus:
      return strong_bisim_plus(p, q);
    case Equivalence::Distributed:
      return dsim(p, q);
  }
  return false;
}

struct MdWitness {
  Prefix eta1, eta2;
  Term s, s_prime, t, t_prime, r;

  Term left() const { return Term::par({Term::prefix(eta2, s), t_prime, r}); }
  Term right() const { return Term::par({s_prime, Term::prefix(eta1, t), r}); }
};

namespace detail {
inline bool has_transition(const Term& from, const Prefix& eta, const Term& to) {
  const CcsTransition want{CcsAction::of(eta), canonicalize(to)};
  auto ts = transitions(canonicalize(from));
  return std::binary_search(ts.begin(), ts.end(), want);
}
}  // namespace detail

/// Whether one candidate tuple is a parallel-shape MD.
inline bool check_md(const MdWitness& w, Equivalence eq) {
  if (w.eta1 == w.eta2 || !detail::has_transition(w.s, w.eta1, w.s_prime) ||
      !detail::has_transition(w.t, w.eta2, w.t_prime))
    throw std::invalid_argument("not a candidate MD");
  return equivalent(w.left(), w.right(), eq);
}

/// The contribution inequalities behind the absence of MDs in microCCS:
/// |eta2.S | T'|_eta1 <= size(T') and |S' | eta1.T|_eta1 >= size(T') + 2.
inline bool size_argument_holds(const MdWitness& w) {
  const Term lhs = Term::par(Term::prefix(w.eta2, w.s), w.t_prime);
  const Term rhs = Term::par(w.s_prime, Term::prefix(w.eta1, w.t));
  return contribution(lhs, w.eta1) <= size(w.t_prime) && contribution(rhs, w.eta1) >= size(w.t_prime) + 2;
}

struct ParallelSearchStats {
  std::uint64_t candidates = 0;  // (eta1, eta2, S->S', T->T') combinations, times |R|
  std::uint64_t size_argument_failures = 0;
};

/// Exhaustive search over microCCS tuples with every component of size at
/// most `size_bound`. Equivalence is decided through normal forms: the
/// normal form of a parallel product is the multiset union of the normal
/// forms of its factors, so each side is a sorted multiset of primes and
/// R cancels from a multiset equation. The first witness in enumeration
/// order is returned.
inline std::optional<MdWitness> search_md_parallel_shape(std::uint32_t size_bound, const std::vector<Name>& alphabet,
                                                         ParallelSearchStats* stats = nullptr) {
  const auto prefixes = both_polarities(alphabet);
  TermEnumerator e(prefixes);
  const auto terms = e.up_to(size_bound);
  if (size_bound == 0) return std::nullopt;

  std::map<Term, std::vector<Term>> nf_cache;
  auto primes = [&](const Term& t) -> const std::vector<Term>& {
    auto it = nf_cache.find(t);
    if (it == nf_cache.end()) it = nf_cache.emplace(t, normalize(t).term.components()).first;
    return it->second;
  };
  auto join = [](const std::vector<Term>& x, const std::vector<Term>& y) {
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  };

  struct Move {
    Term from, to;
  };
  std::map<Prefix, std::vector<Move>> by_label;
  for (const auto& t : terms)
    for (const auto& tr : transitions(t))
      if (!tr.action.is_tau()) by_label[*tr.action.visible].push_back({t, tr.target});

  for (const auto& eta1 : prefixes)
    for (const auto& eta2 : prefixes) {
      if (eta1 == eta2) continue;
      for (const auto& ms : by_label[eta1])
        for (const auto& mt : by_label[eta2]) {
          MdWitness w{eta1, eta2, ms.from, ms.to, mt.from, mt.to, Term::nil()};
          if (stats) {
            stats->candidates += terms.size();
            if (!size_argument_holds(w)) ++stats->size_argument_failures;
          }
          auto lhs = join(primes(Term::prefix(eta2, w.s)), primes(w.t_prime));
          auto rhs = join(primes(w.s_prime), primes(Term::prefix(eta1, w.t)));
          if (lhs == rhs) return w;  // R = 0 is the first R in order
        }
    }
  return std::nullopt;
}

/// A fired prefix occurrence: component index, then summand index within a
/// sum component (0 for a plain prefix).
struct Occurrence {
  std::uint32_t component = 0;
  std::uint32_t summand = 0;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct DependentFiring {
  Prefix first, second;
  Occurrence first_at;   // in q
  Occurrence second_at;  // in the continuation of the first prefix
  Term end;
};

struct DiagramMdWitness {
  Term q;
  Prefix eta1, eta2;
  Term q12, q21;
  DependentFiring path12, path21;
};

/// Every two-step visible firing of q whose second prefix occurs inside the
/// continuation of the first.
inline std::vector<DependentFiring> dependent_firings(const Term& q) {
  std::vector<DependentFiring> out;
  const auto comps = canonicalize(q).components();
  auto summands = [](const Term& c) { return c.kind() == TermKind::Sum ? c.children() : std::vector<Term>{c}; };
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    const auto outer = summands(comps[i]);
    for (std::uint32_t si = 0; si < outer.size(); ++si) {
      const Term& first = outer[si];
      if (first.kind() != TermKind::Prefix) continue;
      const auto rest = detail::without(comps, i);
      const auto inner = first.continuation().components();
      for (std::uint32_t j = 0; j < inner.size(); ++j) {
        const auto cand = summands(inner[j]);
        for (std::uint32_t sj = 0; sj < cand.size(); ++sj) {
          const Term& second = cand[sj];
          if (second.kind() != TermKind::Prefix) continue;
          auto parts = rest;
          for (std::uint32_t k = 0; k < inner.size(); ++k)
            if (k != j) parts.push_back(inner[k]);
          parts.push_back(second.continuation());
          out.push_back({first.head(), second.head(), {i, si}, {j, sj}, Term::par(std::move(parts))});
        }
      }
    }
  }
  return out;
}

/// The first diagram-shaped MD rooted at q, if any.
inline std::optional<DiagramMdWitness> find_diagram_md(const Term& q) {
  const auto firings = dependent_firings(q);
  for (const auto& f : firings) {
    if (f.first == f.second) continue;
    for (const auto& g : firings) {
      if (g.first != f.second || g.second != f.first) continue;
      if (bisimilar_oracle(f.end, g.end)) return DiagramMdWitness{canonicalize(q), f.first, f.second, f.end, g.end, f, g};
    }
  }
  return std::nullopt;
}

/// Smallest-first search over all terms of the calculus up to size_bound.
inline std::optional<DiagramMdWitness> search_md_diagram(Calculus calculus, std::uint32_t size_bound,
                                                         const std::vector<Name>& alphabet) {
  TermEnumerator e(both_polarities(alphabet), calculus == Calculus::CcsPlus);
  for (std::uint32_t n = 0; n <= size_bound; ++n)
    for (const auto& q : e.of_size(n))
      if (auto w = find_diagram_md(q)) return w;
  return std::nullopt;
}

/// One instance of substitution closure: p ~ q implies p.sigma ~ q.sigma.
inline bool check_substitution_closure(const Term& p, const Term& q, const Substitution& sigma, Equivalence eq) {
  if (!equivalent(p, q, eq)) return true;
  return equivalent(apply_substitution(p, sigma), apply_substitution(q, sigma), eq);
}

/// Every map from `domain` into `codomain`, as substitutions.
inline std::vector<Substitution> all_substitutions(const std::vector<Name>& domain, const std::vector<Name>& codomain) {
  std::vector<Substitution> out;
  std::vector<std::size_t> idx(domain.size(), 0);
  if (codomain.empty()) return domain.empty() ? std::vector<Substitution>{Substitution{}} : out;
  while (true) {
    Substitution s;
    for (std::size_t i = 0; i < domain.size(); ++i) s.set(domain[i], codomain[idx[i]]);
    out.push_back(std::move(s));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == codomain.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace bisimkit

#endif  // BISIMKIT_MD_ANALYSIS_HPP
