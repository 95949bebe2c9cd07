// Exhaustive and random pi terms.

#ifndef BISIMKIT_PI_ENUMERATE_HPP
#define BISIMKIT_PI_ENUMERATE_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bisimkit/pi_term.hpp"

namespace bisimkit {

namespace detail {

class PiEnumerator {
 public:
  PiEnumerator() = default;

  // Raw terms with exactly n prefixes and at most r restrictions.
  std::vector<PiTerm> body(std::uint32_t n, std::vector<Name> scope, std::uint32_t r, std::uint32_t depth) {
    std::vector<PiTerm> out = products(n, scope, r, depth, 0);
    if (r > 0 && n > 0) {
      Name p = binder(depth);
      scope.push_back(p);
      for (auto& t : products(n, scope, r - 1, depth + 1, 0)) out.push_back(PiTerm::nu(p, t));
    }
    return out;
  }

 private:
  Name binder(std::uint32_t depth) { return Name::intern("v" + std::to_string(depth)); }

  std::vector<PiTerm> prefixed(std::uint32_t n, const std::vector<Name>& scope, std::uint32_t r, std::uint32_t depth) {
    std::vector<PiTerm> out;
    if (n == 0) return out;
    Name x = binder(depth);
    auto inner = scope;
    inner.push_back(x);
    for (Name ch : scope) {
      for (const auto& k : body(n - 1, inner, r, depth + 1)) out.push_back(PiTerm::input(ch, x, k));
      for (Name obj : scope)
        for (const auto& k : body(n - 1, scope, r, depth)) out.push_back(PiTerm::output(ch, obj, k));
    }
    return out;
  }

  // Parallel products of prefixed terms whose first component has at least
  // `min_first` prefixes; duplicates are removed later by canonicalization.
  std::vector<PiTerm> products(std::uint32_t n, const std::vector<Name>& scope, std::uint32_t r, std::uint32_t depth,
                               std::uint32_t min_first) {
    std::vector<PiTerm> out;
    if (n == 0) {
      out.push_back(PiTerm::nil());
      return out;
    }
    for (std::uint32_t m = std::max(min_first, 1u); m <= n; ++m)
      for (std::uint32_t rr = 0; rr <= r; ++rr)
        for (const auto& head : prefixed(m, scope, rr, depth)) {
          if (m == n && rr != r) break;
          if (m == n) {
            out.push_back(head);
            continue;
          }
          for (const auto& tail : products(n - m, scope, r - rr, depth, m)) out.push_back(PiTerm::par(head, tail));
        }
    return out;
  }

};

}  // namespace detail

/// Canonical pi terms with exactly n prefixes, free names drawn from
/// `names`, and at most `restrictions` restriction operators.
inline std::vector<PiTerm> pi_terms_of_size(std::uint32_t n, const std::vector<Name>& names,
                                            std::uint32_t restrictions) {
  detail::PiEnumerator e;
  std::set<PiTerm> seen;
  for (const auto& t : e.body(n, names, restrictions, 0)) {
    PiTerm c = canonicalize(t);
    if (size(c) == n) seen.insert(c);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<PiTerm> pi_terms_up_to(std::uint32_t n, const std::vector<Name>& names, std::uint32_t restrictions) {
  std::vector<PiTerm> out;
  for (std::uint32_t k = 0; k <= n; ++k) {
    auto layer = pi_terms_of_size(k, names, restrictions);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// A random term with at most `prefixes` prefixes and `restrictions`
/// restrictions; subjects and objects are drawn from `names` and the
/// binders in scope.
template <class Rng>
PiTerm random_pi(Rng& rng, std::uint32_t prefixes, std::uint32_t restrictions, const std::vector<Name>& names) {
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  std::uint32_t nus_left = restrictions;
  std::uint32_t fresh = 0;
  auto go = [&](auto&& self, std::uint32_t k, std::vector<Name> scope) -> PiTerm {
    if (k == 0) return PiTerm::nil();
    if (nus_left > 0 && pick(3) == 0) {
      --nus_left;
      Name p = Name::intern("r" + std::to_string(fresh++));
      scope.push_back(p);
      return PiTerm::nu(p, self(self, k, scope));
    }
    auto m = static_cast<std::uint32_t>(1 + pick(k));
    Name ch = scope[pick(scope.size())];
    PiTerm head;
    if (pick(2) == 0) {
      Name x = Name::intern("i" + std::to_string(fresh++));
      auto inner = scope;
      inner.push_back(x);
      head = PiTerm::input(ch, x, self(self, m - 1, inner));
    } else {
      head = PiTerm::output(ch, scope[pick(scope.size())], self(self, m - 1, scope));
    }
    if (m == k) return head;
    return PiTerm::par(head, self(self, k - m, scope));
  };
  return go(go, static_cast<std::uint32_t>(pick(prefixes + 1)), names);
}

}  // namespace bisimkit

#endif  // BISIMKIT_PI_ENUMERATE_HPP
