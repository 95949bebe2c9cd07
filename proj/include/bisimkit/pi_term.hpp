// bisimkit/pi_term.hpp: finite sum-free pi-calculus terms
//
// Terms are built freely (any binder names, shadowing allowed) and then
// brought to binder-canonical form by canonicalize():
//
//   * every body is a restriction group over a multiset of prefixed
//     components: (nu #D)...(nu #D+k-1)(C_1 | ... | C_m);
//   * restrictions are hoisted out of parallel components as far as the
//     enclosing prefix, and restrictions whose name is unused are dropped;
//   * a binder introduced at nesting level L is named #L, so alpha-
//     equivalent terms coincide;
//   * components are sorted, and the group's binders are ordered so the
//     sorted component list is least.
//
// Two terms are structurally congruent iff their canonical forms are equal.
// Names spelled '#<digits>' cannot be written in the concrete syntax.

#ifndef BISIMKIT_PI_TERM_HPP
#define BISIMKIT_PI_TERM_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bisimkit/name.hpp"

namespace bisimkit {

enum class PiKind : std::uint8_t { Nil, Input, Output, Par, Nu };

class PiTerm;
namespace detail {
struct PiNode;
}

class PiTerm {
 public:
  PiTerm();

  static PiTerm nil() { return PiTerm(); }
  /// channel(binder).continuation
  static PiTerm input(Name channel, Name binder, PiTerm continuation);
  /// channel<object>.continuation
  static PiTerm output(Name channel, Name object, PiTerm continuation);
  static PiTerm par(std::vector<PiTerm> components);
  static PiTerm par(PiTerm lhs, PiTerm rhs) { return par(std::vector<PiTerm>{std::move(lhs), std::move(rhs)}); }
  static PiTerm nu(Name binder, PiTerm body);

  PiKind kind() const;
  bool is_nil() const { return kind() == PiKind::Nil; }
  /// Input/Output: subject. Nu: the restricted name.
  Name channel() const;
  /// Output: the object. Input: the bound variable.
  Name object() const;
  const PiTerm& continuation() const;  // Input, Output, Nu
  const std::vector<PiTerm>& children() const;
  std::uint32_t prefix_count() const;
  std::uint32_t restriction_count() const;
  std::size_t hash() const;

  friend bool operator==(const PiTerm& a, const PiTerm& b);
  friend std::strong_ordering operator<=>(const PiTerm& a, const PiTerm& b);

 private:
  explicit PiTerm(std::shared_ptr<const detail::PiNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::PiNode> node_;
  friend struct detail::PiNode;
};

namespace detail {

struct PiNode {
  PiKind kind = PiKind::Nil;
  Name a{}, b{};
  std::vector<PiTerm> kids;
  std::size_t hash = 0;
  std::uint32_t prefixes = 0;
  std::uint32_t restrictions = 0;

  static PiTerm make(PiNode n) {
    n.hash = static_cast<std::size_t>(n.kind) * 0x9e3779b1u + 17;
    hash_combine(n.hash, n.a.hash());
    hash_combine(n.hash, n.b.hash());
    if (n.kind == PiKind::Input || n.kind == PiKind::Output) n.prefixes = 1;
    if (n.kind == PiKind::Nu) n.restrictions = 1;
    for (const auto& k : n.kids) {
      hash_combine(n.hash, k.hash());
      n.prefixes += k.prefix_count();
      n.restrictions += k.restriction_count();
    }
    return PiTerm(std::make_shared<const PiNode>(std::move(n)));
  }

  static const PiTerm& nil_term() {
    static const PiTerm t = make(PiNode{});
    return t;
  }
};

inline std::strong_ordering compare(const PiTerm& x, const PiTerm& y);

}  // namespace detail

inline PiTerm::PiTerm() : node_(detail::PiNode::nil_term().node_) {}
inline PiKind PiTerm::kind() const { return node_->kind; }
inline Name PiTerm::channel() const { return node_->a; }
inline Name PiTerm::object() const { return node_->b; }
inline const PiTerm& PiTerm::continuation() const {
  if (node_->kids.size() != 1 || node_->kind == PiKind::Par) throw std::logic_error("continuation() on a term without one");
  return node_->kids.front();
}
inline const std::vector<PiTerm>& PiTerm::children() const { return node_->kids; }
inline std::uint32_t PiTerm::prefix_count() const { return node_->prefixes; }
inline std::uint32_t PiTerm::restriction_count() const { return node_->restrictions; }
inline std::size_t PiTerm::hash() const { return node_->hash; }

inline bool operator==(const PiTerm& x, const PiTerm& y) {
  if (x.node_ == y.node_) return true;
  if (x.node_->hash != y.node_->hash) return false;
  return detail::compare(x, y) == 0;
}
inline std::strong_ordering operator<=>(const PiTerm& x, const PiTerm& y) {
  if (x.node_ == y.node_) return std::strong_ordering::equal;
  return detail::compare(x, y);
}

inline std::strong_ordering detail::compare(const PiTerm& x, const PiTerm& y) {
  if (auto c = x.kind() <=> y.kind(); c != 0) return c;
  if (auto c = x.channel() <=> y.channel(); c != 0) return c;
  if (auto c = x.object() <=> y.object(); c != 0) return c;
  const auto& xs = x.children();
  const auto& ys = y.children();
  return std::lexicographical_compare_three_way(xs.begin(), xs.end(), ys.begin(), ys.end());
}

inline PiTerm PiTerm::input(Name channel, Name binder, PiTerm continuation) {
  detail::PiNode n;
  n.kind = PiKind::Input;
  n.a = channel;
  n.b = binder;
  n.kids.push_back(std::move(continuation));
  return detail::PiNode::make(std::move(n));
}

inline PiTerm PiTerm::output(Name channel, Name object, PiTerm continuation) {
  detail::PiNode n;
  n.kind = PiKind::Output;
  n.a = channel;
  n.b = object;
  n.kids.push_back(std::move(continuation));
  return detail::PiNode::make(std::move(n));
}

/// Drops Nil components; a single remaining component stands alone.
inline PiTerm PiTerm::par(std::vector<PiTerm> components) {
  std::vector<PiTerm> kept;
  for (auto& c : components)
    if (!c.is_nil()) kept.push_back(std::move(c));
  if (kept.empty()) return nil();
  if (kept.size() == 1) return kept.front();
  detail::PiNode n;
  n.kind = PiKind::Par;
  n.kids = std::move(kept);
  return detail::PiNode::make(std::move(n));
}

inline PiTerm PiTerm::nu(Name binder, PiTerm body) {
  detail::PiNode n;
  n.kind = PiKind::Nu;
  n.a = binder;
  n.kids.push_back(std::move(body));
  return detail::PiNode::make(std::move(n));
}

/// Reserved binder name for nesting level `level`.
inline Name level_name(std::uint32_t level) {
  static std::vector<Name> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (cache.size() <= level) cache.push_back(Name::intern("#" + std::to_string(cache.size())));
  return cache[level];
}

inline bool is_level_name(Name n) {
  if (!n.valid() || n.is_fresh()) return false;
  const auto s = n.str();
  return !s.empty() && s[0] == '#';
}

namespace detail {

inline void free_names_into(const PiTerm& t, std::vector<Name>& bound, std::set<Name>& out) {
  auto note = [&](Name n) {
    if (std::find(bound.begin(), bound.end(), n) == bound.end()) out.insert(n);
  };
  switch (t.kind()) {
    case PiKind::Nil:
      return;
    case PiKind::Input:
      note(t.channel());
      bound.push_back(t.object());
      free_names_into(t.continuation(), bound, out);
      bound.pop_back();
      return;
    case PiKind::Output:
      note(t.channel());
      note(t.object());
      free_names_into(t.continuation(), bound, out);
      return;
    case PiKind::Par:
      for (const auto& k : t.children()) free_names_into(k, bound, out);
      return;
    case PiKind::Nu:
      bound.push_back(t.channel());
      free_names_into(t.continuation(), bound, out);
      bound.pop_back();
      return;
  }
}

/// Raw name -> final (or placeholder) name; later entries shadow earlier.
using PiEnv = std::vector<std::pair<Name, Name>>;

inline Name resolve(const PiEnv& env, Name n) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == n) return it->second;
  return n;
}

inline PiTerm canon_body(const PiTerm& t, const PiEnv& env, std::uint32_t depth);

inline PiTerm canon_prefixed(const PiTerm& t, const PiEnv& env, std::uint32_t depth) {
  if (t.kind() == PiKind::Input) {
    Name x = level_name(depth);
    PiEnv inner = env;
    inner.emplace_back(t.object(), x);
    return PiTerm::input(resolve(env, t.channel()), x, canon_body(t.continuation(), inner, depth + 1));
  }
  return PiTerm::output(resolve(env, t.channel()), resolve(env, t.object()), canon_body(t.continuation(), env, depth));
}

struct Pending {
  PiTerm term;
  PiEnv env;
};

inline void gather(const PiTerm& t, const PiEnv& env, std::vector<Name>& binders, std::vector<Pending>& comps) {
  switch (t.kind()) {
    case PiKind::Nil:
      return;
    case PiKind::Par:
      for (const auto& k : t.children()) gather(k, env, binders, comps);
      return;
    case PiKind::Nu: {
      Name f = Name::fresh();
      binders.push_back(f);
      PiEnv inner = env;
      inner.emplace_back(t.channel(), f);
      gather(t.continuation(), inner, binders, comps);
      return;
    }
    default:
      comps.push_back({t, env});
  }
}

inline PiTerm canon_body(const PiTerm& t, const PiEnv& env, std::uint32_t depth) {
  std::vector<Name> binders;
  std::vector<Pending> comps;
  gather(t, env, binders, comps);

  // keep only restrictions some component mentions
  std::set<Name> used;
  for (const auto& c : comps) {
    std::set<Name> raw;
    std::vector<Name> bound;
    free_names_into(c.term, bound, raw);
    for (Name n : raw) used.insert(resolve(c.env, n));
  }
  std::vector<Name> live;
  for (Name f : binders)
    if (used.count(f)) live.push_back(f);
  const auto k = static_cast<std::uint32_t>(live.size());

  std::vector<std::uint32_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<PiTerm> best;
  bool have = false;
  do {
    std::vector<PiTerm> out;
    out.reserve(comps.size());
    for (const auto& c : comps) {
      PiEnv env2 = c.env;
      for (auto& [raw, fin] : env2)
        for (std::uint32_t i = 0; i < k; ++i)
          if (fin == live[i]) fin = level_name(depth + perm[i]);
      out.push_back(canon_prefixed(c.term, env2, depth + k));
    }
    std::sort(out.begin(), out.end());
    if (!have || out < best) {
      best = std::move(out);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  PiTerm body = PiTerm::par(std::move(best));
  for (std::uint32_t i = k; i-- > 0;) body = PiTerm::nu(level_name(depth + i), std::move(body));
  return body;
}

}  // namespace detail

/// Binder-canonical representative of t's structural-congruence class.
/// `depth` is the number of binders already in scope (abstractions use 1,
/// with #0 as the abstracted name).
inline PiTerm canonicalize(const PiTerm& t, std::uint32_t depth = 0) { return detail::canon_body(t, {}, depth); }

inline std::set<Name> free_names(const PiTerm& t) {
  std::set<Name> out;
  std::vector<Name> bound;
  detail::free_names_into(t, bound, out);
  return out;
}

/// Capture-avoiding simultaneous substitution of free names; the result is
/// canonical. Targets must be ordinary (spellable) names.
inline PiTerm pi_substitute(const PiTerm& t, const std::map<Name, Name>& sigma, std::uint32_t depth = 0) {
  detail::PiEnv env(sigma.begin(), sigma.end());
  return detail::canon_body(t, env, depth);
}

inline bool pi_struct_congr(const PiTerm& p, const PiTerm& q) { return canonicalize(p) == canonicalize(q); }

/// (nu n1)...(nu nk) t, canonicalized.
inline PiTerm restrict(const PiTerm& t, const std::vector<Name>& names) {
  PiTerm out = t;
  for (auto it = names.rbegin(); it != names.rend(); ++it) out = PiTerm::nu(*it, out);
  return canonicalize(out);
}

inline std::uint32_t size(const PiTerm& t) { return t.prefix_count(); }

}  // namespace bisimkit

template <>
struct std::hash<bisimkit::PiTerm> {
  std::size_t operator()(const bisimkit::PiTerm& t) const noexcept { return t.hash(); }
};

#endif  // BISIMKIT_PI_TERM_HPP
