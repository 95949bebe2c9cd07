// bisimkit/ccs_term.hpp: microCCS terms, with guarded sums and variables
//
// One immutable tree type serves microCCS, microCCS+ (guarded sums) and
// open microCCS terms. Smart constructors build the canonical
// representative of a structural-congruence class:
//
//   - Par is flattened, carries no Nil component, has >= 2 components and
//     keeps them sorted;
//   - Sum is flattened, carries no Nil summand, has >= 2 distinct summands
//     (idempotence), keeps them sorted, and every summand is prefixed.
//
// The raw_* constructors keep the syntax as written; canonicalize() maps
// such a tree to its canonical representative. Two terms are structurally
// congruent iff their canonical forms compare equal.
//
// Order on canonical terms: constructor tag (Nil < Var < Prefix < Sum <
// Par), then prefix name, polarity, and children lexicographically.

#ifndef BISIMKIT_CCS_TERM_HPP
#define BISIMKIT_CCS_TERM_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bisimkit/name.hpp"

namespace bisimkit {

enum class Polarity : std::uint8_t { Action, Coaction };

/// An interaction: `a` or its coaction `'a`.
struct Prefix {
  Name name;
  Polarity polarity = Polarity::Action;

  static Prefix action(Name n) { return {n, Polarity::Action}; }
  static Prefix coaction(Name n) { return {n, Polarity::Coaction}; }

  Prefix complement() const {
    return {name, polarity == Polarity::Action ? Polarity::Coaction : Polarity::Action};
  }
  bool is_coaction() const { return polarity == Polarity::Coaction; }
  std::string str() const { return (is_coaction() ? "'" : "") + name.str(); }

  friend bool operator==(const Prefix&, const Prefix&) = default;
  friend std::strong_ordering operator<=>(const Prefix& a, const Prefix& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.polarity <=> b.polarity;
  }
};

enum class TermKind : std::uint8_t { Nil, Var, Prefix, Sum, Par };

class Term;

namespace detail {
struct TermNode;
}

class Term {
 public:
  /// The inactive process.
  Term();

  static Term nil() { return Term(); }
  static Term var(Name ident);
  static Term prefix(Prefix eta, Term continuation);
  static Term par(std::vector<Term> components);
  static Term par(Term lhs, Term rhs) { return par(std::vector<Term>{std::move(lhs), std::move(rhs)}); }
  /// Throws std::invalid_argument when a summand is not Nil or prefixed.
  static Term sum(std::vector<Term> summands);
  static Term sum(Term lhs, Term rhs) { return sum(std::vector<Term>{std::move(lhs), std::move(rhs)}); }

  /// Binary composition exactly as written; not canonical.
  static Term raw_par(Term lhs, Term rhs);
  static Term raw_sum(Term lhs, Term rhs);

  TermKind kind() const;
  bool is_nil() const { return kind() == TermKind::Nil; }
  bool is_prefix() const { return kind() == TermKind::Prefix; }

  /// Only valid for Prefix nodes.
  const Prefix& head() const;
  const Term& continuation() const;
  /// Only valid for Var nodes.
  Name ident() const;
  /// Children of a Par (components) or Sum (summands).
  const std::vector<Term>& children() const;

  /// Top-level parallel components; empty for Nil, the term itself otherwise.
  std::vector<Term> components() const;

  bool is_ground() const;
  bool has_sum() const;
  bool is_canonical() const;
  /// Number of prefixes, counting inside variables as nothing.
  std::uint32_t prefix_count() const;
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
  friend struct detail::TermNode;
};

namespace detail {

struct TermNode {
  TermKind kind = TermKind::Nil;
  Prefix head{};
  Name ident{};
  std::vector<Term> kids;  // Prefix: {continuation}; Sum/Par: operands
  std::size_t hash = 0;
  std::uint32_t prefixes = 0;
  bool ground = true;
  bool summed = false;
  bool canonical = true;

  static Term make(TermNode node) {
    node.finish();
    return Term(std::make_shared<const TermNode>(std::move(node)));
  }

  void finish() {
    hash = static_cast<std::size_t>(kind) * 0x100000001b3ULL;
    switch (kind) {
      case TermKind::Nil:
        break;
      case TermKind::Var:
        ground = false;
        hash_combine(hash, ident.hash());
        break;
      case TermKind::Prefix:
        hash_combine(hash, head.name.hash());
        hash_combine(hash, static_cast<std::size_t>(head.polarity));
        prefixes = 1;
        break;
      case TermKind::Sum:
        summed = true;
        break;
      case TermKind::Par:
        break;
    }
    for (const auto& k : kids) {
      hash_combine(hash, k.hash());
      prefixes += k.prefix_count();
      ground = ground && k.is_ground();
      summed = summed || k.has_sum();
      canonical = canonical && k.is_canonical();
    }
  }

  static const Term& nil_term() {
    static const Term nil = make(TermNode{});
    return nil;
  }
};

inline std::strong_ordering compare(const Term& a, const Term& b);

}  // namespace detail

inline Term::Term() : node_(detail::TermNode::nil_term().node_) {}

inline TermKind Term::kind() const { return node_->kind; }
inline const Prefix& Term::head() const {
  if (node_->kind != TermKind::Prefix) throw std::logic_error("head() on a non-prefixed term");
  return node_->head;
}
inline const Term& Term::continuation() const {
  if (node_->kind != TermKind::Prefix) throw std::logic_error("continuation() on a non-prefixed term");
  return node_->kids.front();
}
inline Name Term::ident() const {
  if (node_->kind != TermKind::Var) throw std::logic_error("ident() on a non-variable term");
  return node_->ident;
}
inline const std::vector<Term>& Term::children() const { return node_->kids; }
inline bool Term::is_ground() const { return node_->ground; }
inline bool Term::has_sum() const { return node_->summed; }
inline bool Term::is_canonical() const { return node_->canonical; }
inline std::uint32_t Term::prefix_count() const { return node_->prefixes; }
inline std::size_t Term::hash() const { return node_->hash; }

inline std::vector<Term> Term::components() const {
  if (is_nil()) return {};
  if (kind() == TermKind::Par) return children();
  return {*this};
}

inline bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return detail::compare(a, b) == 0;
}

inline std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return detail::compare(a, b);
}

inline std::strong_ordering detail::compare(const Term& a, const Term& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case TermKind::Nil:
      return std::strong_ordering::equal;
    case TermKind::Var:
      return a.ident() <=> b.ident();
    case TermKind::Prefix:
      if (auto c = a.head() <=> b.head(); c != 0) return c;
      return a.continuation() <=> b.continuation();
    case TermKind::Sum:
    case TermKind::Par: {
      const auto& xs = a.children();
      const auto& ys = b.children();
      return std::lexicographical_compare_three_way(xs.begin(), xs.end(), ys.begin(), ys.end());
    }
  }
  return std::strong_ordering::equal;
}

inline Term Term::var(Name ident) {
  detail::TermNode n;
  n.kind = TermKind::Var;
  n.ident = ident;
  return detail::TermNode::make(std::move(n));
}

inline Term Term::prefix(Prefix eta, Term continuation) {
  detail::TermNode n;
  n.kind = TermKind::Prefix;
  n.head = eta;
  n.kids.push_back(std::move(continuation));
  return detail::TermNode::make(std::move(n));
}

inline Term Term::par(std::vector<Term> components) {
  std::vector<Term> flat;
  flat.reserve(components.size());
  for (auto& c : components) {
    if (c.kind() == TermKind::Par && c.is_canonical()) {
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else if (c.kind() == TermKind::Par) {
      // A raw Par child: flatten its canonical form instead.
      auto inner = par(c.children());
      auto parts = inner.components();
      flat.insert(flat.end(), parts.begin(), parts.end());
    } else if (!c.is_nil()) {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return nil();
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end());
  detail::TermNode n;
  n.kind = TermKind::Par;
  n.kids = std::move(flat);
  return detail::TermNode::make(std::move(n));
}

inline Term Term::sum(std::vector<Term> summands) {
  std::vector<Term> flat;
  flat.reserve(summands.size());
  for (auto& s : summands) {
    switch (s.kind()) {
      case TermKind::Nil:
        break;
      case TermKind::Prefix:
        flat.push_back(std::move(s));
        break;
      case TermKind::Sum: {
        auto inner = s.is_canonical() ? s : sum(s.children());
        if (inner.kind() == TermKind::Sum)
          flat.insert(flat.end(), inner.children().begin(), inner.children().end());
        else if (!inner.is_nil())
          flat.push_back(inner);
        break;
      }
      default:
        throw std::invalid_argument("summands must be prefixed");
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return nil();
  if (flat.size() == 1) return flat.front();
  detail::TermNode n;
  n.kind = TermKind::Sum;
  n.kids = std::move(flat);
  return detail::TermNode::make(std::move(n));
}

inline Term Term::raw_par(Term lhs, Term rhs) {
  detail::TermNode n;
  n.kind = TermKind::Par;
  n.kids = {std::move(lhs), std::move(rhs)};
  n.finish();
  n.canonical = false;
  return Term(std::make_shared<const detail::TermNode>(std::move(n)));
}

inline Term Term::raw_sum(Term lhs, Term rhs) {
  for (const Term* s : {&lhs, &rhs}) {
    if (s->kind() != TermKind::Nil && s->kind() != TermKind::Prefix && s->kind() != TermKind::Sum)
      throw std::invalid_argument("summands must be prefixed");
  }
  detail::TermNode n;
  n.kind = TermKind::Sum;
  n.kids = {std::move(lhs), std::move(rhs)};
  n.finish();
  n.canonical = false;
  return Term(std::make_shared<const detail::TermNode>(std::move(n)));
}

/// The canonical representative of t's structural-congruence class.
inline Term canonicalize(const Term& t) {
  if (t.is_canonical()) return t;
  switch (t.kind()) {
    case TermKind::Nil:
    case TermKind::Var:
      return t;
    case TermKind::Prefix:
      return Term::prefix(t.head(), canonicalize(t.continuation()));
    case TermKind::Sum:
    case TermKind::Par: {
      std::vector<Term> kids;
      kids.reserve(t.children().size());
      for (const auto& k : t.children()) kids.push_back(canonicalize(k));
      return t.kind() == TermKind::Sum ? Term::sum(std::move(kids)) : Term::par(std::move(kids));
    }
  }
  return t;
}

/// Number of prefixes. Open terms have no size.
inline std::uint32_t size(const Term& t) {
  if (!t.is_ground()) throw std::invalid_argument("size undefined on open terms");
  return t.prefix_count();
}

/// Total size of the top-level parallel components headed by `eta`.
inline std::uint32_t contribution(const Term& t, const Prefix& eta) {
  if (!t.is_ground()) throw std::invalid_argument("size undefined on open terms");
  switch (t.kind()) {
    case TermKind::Nil:
      return 0;
    case TermKind::Prefix:
      return t.head() == eta ? t.prefix_count() : 0;
    case TermKind::Par: {
      std::uint32_t total = 0;
      for (const auto& c : t.children()) total += contribution(c, eta);
      return total;
    }
    case TermKind::Sum:
      throw std::invalid_argument("contribution is defined on microCCS terms only");
    case TermKind::Var:
      break;
  }
  return 0;
}

/// A finite name-to-name map; names outside the domain are fixed points.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Name, Name>> init) : map_(init) {}
  explicit Substitution(std::map<Name, Name> map) : map_(std::move(map)) {}

  Name operator()(Name n) const {
    auto it = map_.find(n);
    return it == map_.end() ? n : it->second;
  }
  Prefix operator()(const Prefix& p) const { return {(*this)(p.name), p.polarity}; }

  void set(Name from, Name to) { map_[from] = to; }
  const std::map<Name, Name>& mapping() const { return map_; }
  bool is_identity() const {
    return std::all_of(map_.begin(), map_.end(), [](const auto& kv) { return kv.first == kv.second; });
  }

 private:
  std::map<Name, Name> map_;
};

/// A finite map from variable identifiers to terms.
class Instantiation {
 public:
  Instantiation() = default;
  Instantiation(std::initializer_list<std::pair<const Name, Term>> init) : map_(init) {}

  const Term* find(Name x) const {
    auto it = map_.find(x);
    return it == map_.end() ? nullptr : &it->second;
  }
  void set(Name x, Term t) { map_.insert_or_assign(x, std::move(t)); }
  const std::map<Name, Term>& mapping() const { return map_; }

 private:
  std::map<Name, Term> map_;
};

inline Term apply_substitution(const Term& t, const Substitution& sigma) {
  switch (t.kind()) {
    case TermKind::Nil:
    case TermKind::Var:
      return t;
    case TermKind::Prefix:
      return Term::prefix(sigma(t.head()), apply_substitution(t.continuation(), sigma));
    case TermKind::Sum:
    case TermKind::Par: {
      std::vector<Term> kids;
      kids.reserve(t.children().size());
      for (const auto& k : t.children()) kids.push_back(apply_substitution(k, sigma));
      return t.kind() == TermKind::Sum ? Term::sum(std::move(kids)) : Term::par(std::move(kids));
    }
  }
  return t;
}

/// Replaces each variable by its image. With `require_ground`, a variable
/// missing from the instantiation is an error.
inline Term instantiate(const Term& m, const Instantiation& inst, bool require_ground = false) {
  switch (m.kind()) {
    case TermKind::Nil:
      return m;
    case TermKind::Var:
      if (const Term* image = inst.find(m.ident())) return canonicalize(*image);
      if (require_ground) throw std::invalid_argument("variable " + m.ident().str() + " is not instantiated");
      return m;
    case TermKind::Prefix:
      return Term::prefix(m.head(), instantiate(m.continuation(), inst, require_ground));
    case TermKind::Sum:
    case TermKind::Par: {
      std::vector<Term> kids;
      kids.reserve(m.children().size());
      for (const auto& k : m.children()) kids.push_back(instantiate(k, inst, require_ground));
      return m.kind() == TermKind::Sum ? Term::sum(std::move(kids)) : Term::par(std::move(kids));
    }
  }
  return m;
}

namespace detail {
inline void collect(const Term& t, std::set<Name>* names, std::set<Name>* vars) {
  switch (t.kind()) {
    case TermKind::Nil:
      return;
    case TermKind::Var:
      if (vars) vars->insert(t.ident());
      return;
    case TermKind::Prefix:
      if (names) names->insert(t.head().name);
      collect(t.continuation(), names, vars);
      return;
    default:
      for (const auto& k : t.children()) collect(k, names, vars);
  }
}
}  // namespace detail

/// Channel names occurring in prefixes of t.
inline std::set<Name> names_of(const Term& t) {
  std::set<Name> out;
  detail::collect(t, &out, nullptr);
  return out;
}

inline std::set<Name> variables_of(const Term& t) {
  std::set<Name> out;
  detail::collect(t, nullptr, &out);
  return out;
}

/// eta^k: k parallel copies of eta.0.
inline Term power(const Term& t, std::size_t k) { return Term::par(std::vector<Term>(k, t)); }

}  // namespace bisimkit

template <>
struct std::hash<bisimkit::Term> {
  std::size_t operator()(const bisimkit::Term& t) const noexcept { return t.hash(); }
};

#endif  // BISIMKIT_CCS_TERM_HPP
