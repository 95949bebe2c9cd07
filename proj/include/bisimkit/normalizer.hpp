// bisimkit/normalizer.hpp: the distribution-law rewrite system
//
//   eta.(P | (eta.P)^k)  ->  (eta.P)^(k+1),   k >= 1
//
// applied modulo structural congruence. The relation terminates and is
// confluent, so every microCCS term has a unique normal form, and two
// ground terms are strongly bisimilar iff their normal forms coincide.
// The top-level components of a normal form are its prime factors.
//
// Variables of open terms are opaque atoms: they can be (part of) the body
// P of a redex, never its head.

#ifndef BISIMKIT_NORMALIZER_HPP
#define BISIMKIT_NORMALIZER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bisimkit/ccs_lts.hpp"
#include "bisimkit/ccs_term.hpp"
#include "bisimkit/enumerate.hpp"

namespace bisimkit {

struct NormalForm {
  Term term;
  std::size_t steps = 0;
};

struct PrimeDecomposition {
  std::vector<Term> components;  // sorted

  Term product() const { return Term::par(components); }
  friend bool operator==(const PrimeDecomposition&, const PrimeDecomposition&) = default;
};

namespace detail {

inline void require_microccs(const Term& t) {
  if (t.has_sum()) throw std::invalid_argument("the distribution law is defined on microCCS terms (no sum)");
}

/// Every contraction of t itself as a redex (not of its subterms).
/// Candidates are tried in canonical order of the repeated component.
inline std::vector<Term> contractions_at_root(const Term& t) {
  std::vector<Term> out;
  if (t.kind() != TermKind::Prefix) return out;
  const Prefix eta = t.head();
  const auto body = t.continuation().components();  // sorted
  for (std::size_t i = 0; i < body.size(); ++i) {
    const Term& c = body[i];
    if (i > 0 && c == body[i - 1]) continue;
    if (c.kind() != TermKind::Prefix || c.head() != eta) continue;
    std::vector<Term> rest;
    std::size_t copies = 0;
    for (const auto& x : body) {
      if (x == c)
        ++copies;
      else
        rest.push_back(x);
    }
    // rest must be exactly the components of the repeated prefix's body
    if (rest == c.continuation().components()) out.push_back(power(c, copies + 1));
  }
  return out;
}

inline std::optional<Term> innermost_step(const Term& t) {
  switch (t.kind()) {
    case TermKind::Prefix: {
      if (auto inner = innermost_step(t.continuation())) return Term::prefix(t.head(), *inner);
      auto here = contractions_at_root(t);
      if (here.empty()) return std::nullopt;
      return here.front();
    }
    case TermKind::Par: {
      const auto& kids = t.children();
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (auto r = innermost_step(kids[i])) {
          auto next = kids;
          next[i] = *r;
          return Term::par(std::move(next));
        }
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

inline void all_steps(const Term& t, std::set<Term>& out) {
  switch (t.kind()) {
    case TermKind::Prefix: {
      std::set<Term> inner;
      all_steps(t.continuation(), inner);
      for (const auto& r : inner) out.insert(Term::prefix(t.head(), r));
      for (auto& r : contractions_at_root(t)) out.insert(std::move(r));
      return;
    }
    case TermKind::Par: {
      const auto& kids = t.children();
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i > 0 && kids[i] == kids[i - 1]) continue;
        std::set<Term> inner;
        all_steps(kids[i], inner);
        for (const auto& r : inner) {
          auto next = kids;
          next[i] = r;
          out.insert(Term::par(std::move(next)));
        }
      }
      return;
    }
    default:
      return;
  }
}

inline std::uint64_t weight_at(const Term& t, std::uint64_t depth) {
  switch (t.kind()) {
    case TermKind::Prefix:
      return depth + weight_at(t.continuation(), depth + 1);
    case TermKind::Par:
    case TermKind::Sum: {
      std::uint64_t w = 0;
      for (const auto& k : t.children()) w += weight_at(k, depth);
      return w;
    }
    default:
      return 0;
  }
}

}  // namespace detail

/// One distribution-law step at the innermost-leftmost redex, or nullopt
/// when t is irreducible.
inline std::optional<Term> rewrite_step(const Term& t) {
  detail::require_microccs(t);
  return detail::innermost_step(canonicalize(t));
}

/// Every term reachable from t in exactly one step, over all redexes and
/// all ways of matching them.
inline std::vector<Term> all_rewrite_steps(const Term& t) {
  detail::require_microccs(t);
  std::set<Term> out;
  detail::all_steps(canonicalize(t), out);
  return {out.begin(), out.end()};
}

/// Sum of the nesting depths of all prefixes (top-level prefixes have
/// depth 1). Every rewrite step strictly decreases it.
inline std::uint64_t weight(const Term& t) { return detail::weight_at(t, 1); }

inline bool is_normal(const Term& t) { return !rewrite_step(t).has_value(); }

/// Rewrites to the fixpoint; works on ground and open terms.
inline NormalForm normalize(const Term& t) {
  detail::require_microccs(t);
  NormalForm nf{canonicalize(t), 0};
  while (auto next = detail::innermost_step(nf.term)) {
    nf.term = std::move(*next);
    ++nf.steps;
  }
  return nf;
}

/// Normal form of an open term.
inline Term normalize_open(const Term& m) { return normalize(m).term; }

/// Strong bisimilarity of ground microCCS terms through normal forms.
inline bool decide_bisim(const Term& p, const Term& q) {
  if (!p.is_ground() || !q.is_ground()) throw std::invalid_argument("decide_bisim expects ground terms");
  return normalize(p).term == normalize(q).term;
}

inline PrimeDecomposition prime_decompose(const Term& p) {
  if (!p.is_ground()) throw std::invalid_argument("prime_decompose expects a ground term");
  return {normalize(p).term.components()};
}

inline bool is_prime(const Term& p) { return prime_decompose(p).components.size() == 1; }

using BisimPredicate = std::function<bool(const Term&, const Term&)>;

/// Primality straight from the definition: p is not bisimilar to 0 and is
/// not bisimilar to any product q | r of two nonzero terms. Candidates use
/// only prefixes occurring in p and have sizes summing to size(p).
inline bool is_prime_bruteforce(const Term& p, std::uint32_t bound = 5, const BisimPredicate& bisim = bisimilar_oracle) {
  const auto n = size(p);
  if (n > bound) throw std::invalid_argument("brute-force bound exceeded");
  if (n == 0) return false;  // only terms of size 0 are bisimilar to 0
  std::set<Prefix> used;
  auto collect = [&](auto&& self, const Term& t) -> void {
    if (t.kind() == TermKind::Prefix) {
      used.insert(t.head());
      self(self, t.continuation());
    } else {
      for (const auto& k : t.children()) self(self, k);
    }
  };
  collect(collect, p);
  std::vector<Prefix> alphabet(used.begin(), used.end());
  for (std::uint32_t k = 1; k + k <= n; ++k) {
    const auto left = ccs_terms_of_size(alphabet, k);
    const auto right = ccs_terms_of_size(alphabet, n - k);
    for (const auto& q : left)
      for (const auto& r : right)
        if (bisim(p, Term::par(q, r))) return false;
  }
  return true;
}

namespace detail {

/// Names `fresh0, fresh1, ...` skipping every name in `avoid`.
inline std::vector<Name> fresh_spellings(std::size_t count, const std::set<Name>& avoid) {
  std::vector<Name> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    Name n = Name::intern("fresh" + std::to_string(i));
    if (!avoid.count(n)) out.push_back(n);
  }
  return out;
}

}  // namespace detail

/// {X_i -> a_i.0} for distinct names a_i occurring in none of `terms`.
inline Instantiation fresh_instantiation(std::initializer_list<Term> terms) {
  std::set<Name> vars, avoid;
  for (const auto& t : terms) {
    auto v = variables_of(t);
    vars.insert(v.begin(), v.end());
    auto a = names_of(t);
    avoid.insert(a.begin(), a.end());
  }
  auto names = detail::fresh_spellings(vars.size(), avoid);
  Instantiation inst;
  std::size_t i = 0;
  for (Name x : vars) inst.set(x, Term::prefix(Prefix::action(names[i++]), Term::nil()));
  return inst;
}

/// Extensional equality of open terms: instantiate every variable with a
/// distinct fresh a_i.0 and decide ground bisimilarity.
inline bool decide_extensional(const Term& m, const Term& n) {
  auto inst = fresh_instantiation({m, n});
  return decide_bisim(instantiate(m, inst, true), instantiate(n, inst, true));
}

/// Cross-check route: compare open normal forms directly.
inline bool decide_extensional_by_normal_forms(const Term& m, const Term& n) {
  return normalize_open(m) == normalize_open(n);
}

}  // namespace bisimkit

#endif  // BISIMKIT_NORMALIZER_HPP
