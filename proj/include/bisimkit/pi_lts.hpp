// bisimkit/pi_lts.hpp: late transitions of the finite pi-calculus
//
// Transitions are read off the canonical form (nu R)(C_1 | ... | C_m)
// directly: every transition fires one component (a visible action) or an
// output/input pair of distinct components (tau). Input and bound-output
// residuals are abstractions: canonical at depth 1, with #0 standing for
// the received or extruded name. open() instantiates them.

#ifndef BISIMKIT_PI_LTS_HPP
#define BISIMKIT_PI_LTS_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bisimkit/pi_term.hpp"

namespace bisimkit {

enum class PiActionKind : std::uint8_t { Tau, Input, FreeOutput, BoundOutput };

struct PiAction {
  PiActionKind kind = PiActionKind::Tau;
  Name channel{};
  Name object{};  // FreeOutput only

  static PiAction tau() { return {}; }
  static PiAction input(Name a) { return {PiActionKind::Input, a, {}}; }
  static PiAction free_output(Name a, Name b) { return {PiActionKind::FreeOutput, a, b}; }
  static PiAction bound_output(Name a) { return {PiActionKind::BoundOutput, a, {}}; }

  bool binds() const { return kind == PiActionKind::Input || kind == PiActionKind::BoundOutput; }

  std::string str() const {
    switch (kind) {
      case PiActionKind::Tau: return "tau";
      case PiActionKind::Input: return channel.str() + "(x)";
      case PiActionKind::FreeOutput: return channel.str() + "<" + object.str() + ">";
      case PiActionKind::BoundOutput: return channel.str() + "<(p)>";
    }
    return "?";
  }

  friend bool operator==(const PiAction&, const PiAction&) = default;
  friend std::strong_ordering operator<=>(const PiAction& x, const PiAction& y) {
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (auto c = x.channel <=> y.channel; c != 0) return c;
    return x.object <=> y.object;
  }
};

struct PiTransition {
  PiAction action;
  PiTerm target;  // an abstraction when action.binds()

  friend bool operator==(const PiTransition&, const PiTransition&) = default;
  friend std::strong_ordering operator<=>(const PiTransition& x, const PiTransition& y) {
    if (auto c = x.action <=> y.action; c != 0) return c;
    return x.target <=> y.target;
  }
};

/// A transition together with the components that produced it. For tau,
/// `first` is the output component and `second` the input component.
struct PiDerivation {
  PiTransition transition;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
};

/// A canonical term split into its restriction group and components.
struct PiShape {
  std::vector<Name> restricted;  // #0 .. #k-1
  std::vector<PiTerm> components;
};

inline PiShape shape_of(const PiTerm& canonical) {
  PiShape s;
  PiTerm t = canonical;
  while (t.kind() == PiKind::Nu) {
    s.restricted.push_back(t.channel());
    t = t.continuation();
  }
  if (t.kind() == PiKind::Par)
    s.components = t.children();
  else if (!t.is_nil())
    s.components.push_back(t);
  return s;
}

namespace detail {

inline PiTerm rename_free(const PiTerm& t, Name from, Name to) {
  switch (t.kind()) {
    case PiKind::Nil:
      return t;
    case PiKind::Input: {
      Name ch = t.channel() == from ? to : t.channel();
      if (t.object() == from) return PiTerm::input(ch, t.object(), t.continuation());
      return PiTerm::input(ch, t.object(), rename_free(t.continuation(), from, to));
    }
    case PiKind::Output:
      return PiTerm::output(t.channel() == from ? to : t.channel(), t.object() == from ? to : t.object(),
                            rename_free(t.continuation(), from, to));
    case PiKind::Par: {
      std::vector<PiTerm> kids;
      for (const auto& k : t.children()) kids.push_back(rename_free(k, from, to));
      return PiTerm::par(std::move(kids));
    }
    case PiKind::Nu:
      if (t.channel() == from) return t;
      return PiTerm::nu(t.channel(), rename_free(t.continuation(), from, to));
  }
  return t;
}

inline PiTerm wrap(const std::vector<Name>& restricted, std::vector<PiTerm> parts, Name skip = Name{}) {
  PiTerm body = PiTerm::par(std::move(parts));
  for (auto it = restricted.rbegin(); it != restricted.rend(); ++it)
    if (*it != skip) body = PiTerm::nu(*it, body);
  return body;
}

inline std::vector<PiTerm> others(const std::vector<PiTerm>& comps, std::uint32_t i, std::uint32_t j = UINT32_MAX) {
  std::vector<PiTerm> out;
  for (std::uint32_t k = 0; k < comps.size(); ++k)
    if (k != i && k != j) out.push_back(comps[k]);
  return out;
}

inline bool is_restricted(const PiShape& s, Name n) {
  return std::find(s.restricted.begin(), s.restricted.end(), n) != s.restricted.end();
}

}  // namespace detail

/// Every derivation of a canonical, closed-over-levels (depth 0) term.
/// `rename` maps the free names of component subjects before matching, so
/// the same routine yields the derivations of p.sigma traced back to p.
inline std::vector<PiDerivation> late_derivations(const PiTerm& canonical, const std::map<Name, Name>& sigma = {}) {
  const PiShape s = shape_of(canonical);
  const auto k = static_cast<std::uint32_t>(s.restricted.size());
  const Name x = level_name(k);
  const Name abs0 = level_name(0);
  auto image = [&](Name n) {
    auto it = sigma.find(n);
    return it == sigma.end() ? n : it->second;
  };
  auto finish = [&](const PiTerm& raw, std::uint32_t depth, detail::PiEnv env) {
    for (const auto& kv : sigma) env.insert(env.begin(), kv);
    return detail::canon_body(raw, env, depth);
  };

  std::vector<PiDerivation> out;
  const auto& comps = s.components;
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    const PiTerm& c = comps[i];
    if (detail::is_restricted(s, c.channel())) continue;
    const Name ch = image(c.channel());
    auto parts = detail::others(comps, i);
    parts.push_back(c.continuation());
    if (c.kind() == PiKind::Input) {
      out.push_back({{PiAction::input(ch), finish(detail::wrap(s.restricted, parts), 1, {{x, abs0}})}, i, i});
    } else if (detail::is_restricted(s, c.object())) {
      out.push_back({{PiAction::bound_output(ch), finish(detail::wrap(s.restricted, parts, c.object()), 1, {{c.object(), abs0}})},
                     i,
                     i});
    } else {
      out.push_back({{PiAction::free_output(ch, image(c.object())), finish(detail::wrap(s.restricted, parts), 0, {})}, i, i});
    }
  }
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    if (comps[i].kind() != PiKind::Output) continue;
    for (std::uint32_t j = 0; j < comps.size(); ++j) {
      if (j == i || comps[j].kind() != PiKind::Input) continue;
      if (image(comps[i].channel()) != image(comps[j].channel())) continue;
      auto parts = detail::others(comps, i, j);
      parts.push_back(comps[i].continuation());
      parts.push_back(detail::rename_free(comps[j].continuation(), x, comps[i].object()));
      out.push_back({{PiAction::tau(), finish(detail::wrap(s.restricted, parts), 0, {})}, i, j});
    }
  }
  return out;
}

/// The late transitions of p, sorted and without duplicates.
inline std::vector<PiTransition> late_transitions(const PiTerm& p) {
  std::set<PiTransition> out;
  for (auto& d : late_derivations(canonicalize(p))) out.insert(std::move(d.transition));
  return {out.begin(), out.end()};
}

/// Instantiates the abstracted name of an input or bound-output residual.
inline PiTerm open(const PiTerm& abstraction, Name n) {
  return detail::canon_body(abstraction, {{level_name(0), n}}, 0);
}

/// The process (nu p) A[p/#0] for a bound-output residual A.
inline PiTerm close(const PiTerm& abstraction) {
  Name p = Name::fresh();
  return canonicalize(PiTerm::nu(p, open(abstraction, p)));
}

}  // namespace bisimkit

#endif  // BISIMKIT_PI_LTS_HPP
