// The erasing map from pi processes to microCCS.
//
// Relative to two distinct names (a, b): an input on a becomes the CCS
// action a, an output on b the coaction 'b, restriction is dropped, and a
// component headed by any other prefix erases to 0.

#ifndef BISIMKIT_ERASURE_HPP
#define BISIMKIT_ERASURE_HPP

#include <stdexcept>
#include <vector>

#include "bisimkit/ccs_lts.hpp"
#include "bisimkit/ccs_term.hpp"
#include "bisimkit/normalizer.hpp"
#include "bisimkit/pi_bisim.hpp"
#include "bisimkit/pi_lts.hpp"
#include "bisimkit/pi_term.hpp"

namespace bisimkit {

struct ErasureContext {
  Name input_name;   // a
  Name output_name;  // b

  ErasureContext(Name a, Name b) : input_name(a), output_name(b) {
    if (a == b) throw std::invalid_argument("erasure names must be distinct");
  }
};

namespace detail {
inline Term erase_raw(const PiTerm& p, const ErasureContext& ctx) {
  switch (p.kind()) {
    case PiKind::Nil:
      return Term::nil();
    case PiKind::Input:
      if (p.channel() != ctx.input_name) return Term::nil();
      return Term::prefix(Prefix::action(ctx.input_name), erase_raw(p.continuation(), ctx));
    case PiKind::Output:
      if (p.channel() != ctx.output_name) return Term::nil();
      return Term::prefix(Prefix::coaction(ctx.output_name), erase_raw(p.continuation(), ctx));
    case PiKind::Par: {
      std::vector<Term> kids;
      for (const auto& k : p.children()) kids.push_back(erase_raw(k, ctx));
      return Term::par(std::move(kids));
    }
    case PiKind::Nu:
      return erase_raw(p.continuation(), ctx);
  }
  return Term::nil();
}
}  // namespace detail

/// Erasure of the canonical form of p (binders renamed apart from a, b).
inline Term erase(const PiTerm& p, const ErasureContext& ctx) { return detail::erase_raw(canonicalize(p), ctx); }

/// The three-part correspondence between the transitions of p on a / b
/// and the transitions of erase(p).
inline bool check_erasure_transitions(const PiTerm& p0, const ErasureContext& ctx) {
  const PiTerm p = canonicalize(p0);
  const Term e = erase(p, ctx);
  const auto ccs = transitions(e);
  std::set<Name> avoid = free_names(p);
  avoid.insert(ctx.input_name);
  avoid.insert(ctx.output_name);
  const Name fresh = reserved_fresh_names(1, avoid).front();

  // erased residual of every a-input / b-output of p, by CCS label
  std::vector<CcsTransition> lifted;
  for (const auto& t : late_transitions(p)) {
    const auto& mu = t.action;
    if (mu.kind == PiActionKind::Input && mu.channel == ctx.input_name)
      lifted.push_back({CcsAction::of(Prefix::action(ctx.input_name)), erase(open(t.target, fresh), ctx)});
    else if (mu.kind == PiActionKind::FreeOutput && mu.channel == ctx.output_name)
      lifted.push_back({CcsAction::of(Prefix::coaction(ctx.output_name)), erase(t.target, ctx)});
    else if (mu.kind == PiActionKind::BoundOutput && mu.channel == ctx.output_name)
      lifted.push_back({CcsAction::of(Prefix::coaction(ctx.output_name)), erase(open(t.target, fresh), ctx)});
  }
  // forward: each lifted move is a move of erase(p)
  for (const auto& m : lifted)
    if (!std::binary_search(ccs.begin(), ccs.end(), m)) return false;
  // converse: each move of erase(p) comes from some pi transition
  for (const auto& m : ccs)
    if (std::find(lifted.begin(), lifted.end(), m) == lifted.end()) return false;
  return true;
}

/// Ground-bisimilar processes have bisimilar erasures.
inline bool transfer_check(const PiTerm& p, const PiTerm& q, const ErasureContext& ctx) {
  if (!ground_bisim(p, q)) throw std::invalid_argument("transfer premise violated");
  return decide_bisim(erase(p, ctx), erase(q, ctx));
}

}  // namespace bisimkit

#endif  // BISIMKIT_ERASURE_HPP
