// bisimkit/enumerate.hpp: exhaustive and random generation of CCS terms
//
// Exhaustive enumeration works bottom-up by size: prefixed terms of size n
// are eta.t for every term t of size n-1; guarded sums of size n are sets of
// at least two distinct prefixed terms; a general term is a multiset of
// components. Every canonical term appears exactly once, in canonical order
// within each size.

#ifndef BISIMKIT_ENUMERATE_HPP
#define BISIMKIT_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bisimkit/ccs_term.hpp"

namespace bisimkit {

inline std::vector<Prefix> both_polarities(const std::vector<Name>& names) {
  std::vector<Prefix> out;
  for (Name n : names) {
    out.push_back(Prefix::action(n));
    out.push_back(Prefix::coaction(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class TermEnumerator {
 public:
  explicit TermEnumerator(std::vector<Prefix> alphabet, bool with_sums = false)
      : alphabet_(std::move(alphabet)), with_sums_(with_sums) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    terms_.push_back({Term::nil()});
    prefixed_.push_back({});
    components_.push_back({});
  }

  /// Canonical terms with exactly n prefixes.
  const std::vector<Term>& of_size(std::uint32_t n) {
    while (terms_.size() <= n) grow();
    return terms_[n];
  }

  /// Canonical terms with at most n prefixes, smaller sizes first.
  std::vector<Term> up_to(std::uint32_t n) {
    std::vector<Term> out;
    for (std::uint32_t k = 0; k <= n; ++k) {
      const auto& level = of_size(k);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  /// Prefixed terms (the possible prime components) with exactly n prefixes.
  const std::vector<Term>& prefixed_of_size(std::uint32_t n) {
    of_size(n);
    return prefixed_[n];
  }

 private:
  struct Sized {
    Term term;
    std::uint32_t size;
  };

  void grow() {
    const auto n = static_cast<std::uint32_t>(terms_.size());
    std::vector<Term> pre;
    for (const auto& eta : alphabet_)
      for (const auto& t : terms_[n - 1]) pre.push_back(Term::prefix(eta, t));
    std::sort(pre.begin(), pre.end());
    prefixed_.push_back(pre);

    std::vector<Term> comps = pre;
    if (with_sums_) {
      std::vector<Sized> pool;
      for (std::uint32_t k = 1; k <= n; ++k)
        for (const auto& p : prefixed_[k]) pool.push_back({p, k});
      std::vector<Term> chosen;
      pick_set(pool, 0, n, chosen, comps);
    }
    std::sort(comps.begin(), comps.end());
    components_.push_back(std::move(comps));

    std::vector<Sized> pool;
    for (std::uint32_t k = 1; k <= n; ++k)
      for (const auto& c : components_[k]) pool.push_back({c, k});
    std::vector<Term> level;
    std::vector<Term> chosen;
    pick_multiset(pool, 0, n, chosen, level);
    std::sort(level.begin(), level.end());
    terms_.push_back(std::move(level));
  }

  // Sets of >= 2 distinct prefixed terms with sizes summing to `left`.
  static void pick_set(const std::vector<Sized>& pool, std::size_t from, std::uint32_t left, std::vector<Term>& chosen,
                       std::vector<Term>& out) {
    if (left == 0) {
      if (chosen.size() >= 2) out.push_back(Term::sum(chosen));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].size > left) continue;
      chosen.push_back(pool[i].term);
      pick_set(pool, i + 1, left - pool[i].size, chosen, out);
      chosen.pop_back();
    }
  }

  static void pick_multiset(const std::vector<Sized>& pool, std::size_t from, std::uint32_t left,
                            std::vector<Term>& chosen, std::vector<Term>& out) {
    if (left == 0) {
      out.push_back(Term::par(chosen));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].size > left) continue;
      chosen.push_back(pool[i].term);
      pick_multiset(pool, i, left - pool[i].size, chosen, out);
      chosen.pop_back();
    }
  }

  std::vector<Prefix> alphabet_;
  bool with_sums_;
  std::vector<std::vector<Term>> terms_;
  std::vector<std::vector<Term>> prefixed_;
  std::vector<std::vector<Term>> components_;
};

/// All canonical microCCS terms over `alphabet` with exactly `n` prefixes.
inline std::vector<Term> ccs_terms_of_size(const std::vector<Prefix>& alphabet, std::uint32_t n) {
  TermEnumerator e(alphabet);
  return e.of_size(n);
}

inline std::vector<Term> ccs_terms_up_to(const std::vector<Prefix>& alphabet, std::uint32_t n) {
  TermEnumerator e(alphabet);
  return e.up_to(n);
}

inline std::vector<Term> ccs_plus_terms_up_to(const std::vector<Prefix>& alphabet, std::uint32_t n) {
  TermEnumerator e(alphabet, true);
  return e.up_to(n);
}

/// A random microCCS term with exactly `n` prefixes. With a nonempty
/// `variables` list, Var leaves are sprinkled in with probability 1/4 at
/// every position where a Nil could stand.
template <class Rng>
Term random_ccs(Rng& rng, std::uint32_t n, const std::vector<Prefix>& alphabet,
                const std::vector<Name>& variables = {}) {
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  auto leaf = [&]() {
    if (!variables.empty() && pick(4) == 0) return Term::var(variables[pick(variables.size())]);
    return Term::nil();
  };
  auto go = [&](auto&& self, std::uint32_t k) -> Term {
    if (k == 0) return leaf();
    // split off a first component of size m, the rest in parallel
    auto m = static_cast<std::uint32_t>(1 + pick(k));
    Term head = Term::prefix(alphabet[pick(alphabet.size())], self(self, m - 1));
    if (m == k) return pick(3) == 0 ? Term::par(head, leaf()) : head;
    return Term::par(head, self(self, k - m));
  };
  return go(go, n);
}

}  // namespace bisimkit

#endif  // BISIMKIT_ENUMERATE_HPP
