// bisimkit/pi_bisim.hpp: ground, late and early bisimilarity
//
// All three are decided by refinement over one finite graph whose states
// are (canonical term, depth). The depth counts steps taken from a root;
// a binding transition taken at depth d uses the reserved name z_d, the
// d-th member of z0, z1, ... not free in any root. Every free name of a
// depth-d state lies in F u {z_0..z_(d-1)}, where F is the free names of
// the roots, so z_d is fresh for both sides of any pair compared in
// lockstep.
//
//   ground: an input is one edge, instantiated with z_d;
//   late:   an input is one hyper-edge with a target for every n in
//           N_d = F u {z_0..z_d}, so one responder must fit all n;
//   early:  an input yields one edge per n in N_d, labelled with n.

#ifndef BISIMKIT_PI_BISIM_HPP
#define BISIMKIT_PI_BISIM_HPP

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bisimkit/lts.hpp"
#include "bisimkit/pi_lts.hpp"
#include "bisimkit/pi_term.hpp"

namespace bisimkit {

enum class PiStyle { Ground, Late, Early };

struct PiState {
  PiTerm term;
  std::uint32_t depth = 0;
  friend bool operator==(const PiState&, const PiState&) = default;
};

struct PiStateHash {
  std::size_t operator()(const PiState& s) const noexcept {
    std::size_t h = s.term.hash();
    hash_combine(h, s.depth);
    return h;
  }
};

using PiGraph = TransitionGraph<PiState, PiAction, PiStateHash>;

/// z_0, z_1, ... skipping names in `avoid`.
inline std::vector<Name> reserved_fresh_names(std::size_t count, const std::set<Name>& avoid) {
  std::vector<Name> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    Name n = Name::intern("z" + std::to_string(i));
    if (!avoid.count(n)) out.push_back(n);
  }
  return out;
}

inline PiGraph reachable_pi(std::span<const PiTerm> roots, PiStyle style, std::set<Name> universe = {}) {
  std::vector<PiState> starts;
  std::uint32_t longest = 0;
  for (const auto& r : roots) {
    PiTerm c = canonicalize(r);
    auto fn = free_names(c);
    universe.insert(fn.begin(), fn.end());
    longest = std::max(longest, size(c));
    starts.push_back({c, 0});
  }
  const auto z = reserved_fresh_names(longest + 1, universe);
  std::vector<Name> base(universe.begin(), universe.end());

  return explore<PiState, PiAction, PiStateHash>(std::span<const PiState>(starts), [&](const PiState& s) {
    std::vector<std::pair<PiAction, std::vector<PiState>>> succ;
    const std::uint32_t d = s.depth;
    std::set<PiTransition> seen;
    for (auto& der : late_derivations(s.term)) {
      const auto& tr = der.transition;
      if (!seen.insert(tr).second) continue;
      switch (tr.action.kind) {
        case PiActionKind::Tau:
        case PiActionKind::FreeOutput:
          succ.push_back({tr.action, {{tr.target, d + 1}}});
          break;
        case PiActionKind::BoundOutput:
          succ.push_back({tr.action, {{open(tr.target, z[d]), d + 1}}});
          break;
        case PiActionKind::Input: {
          if (style == PiStyle::Ground) {
            succ.push_back({tr.action, {{open(tr.target, z[d]), d + 1}}});
            break;
          }
          std::vector<Name> names = base;
          names.insert(names.end(), z.begin(), z.begin() + d + 1);
          if (style == PiStyle::Late) {
            std::vector<PiState> targets;
            for (Name n : names) targets.push_back({open(tr.target, n), d + 1});
            succ.push_back({tr.action, std::move(targets)});
          } else {
            for (Name n : names) {
              PiAction labelled = tr.action;
              labelled.object = n;
              succ.push_back({labelled, {{open(tr.target, n), d + 1}}});
            }
          }
          break;
        }
      }
    }
    return succ;
  });
}

/// Bisimilarity classes of depth-0 states over a set of roots.
class PiBisimClasses {
 public:
  PiBisimClasses(std::span<const PiTerm> roots, PiStyle style, std::set<Name> universe = {})
      : graph_(reachable_pi(roots, style, std::move(universe))), refinement_(refine(graph_)) {}

  std::uint32_t block_of(const PiTerm& t) const { return refinement_.blocks[graph_.id_of({canonicalize(t), 0})]; }
  bool related(const PiTerm& p, const PiTerm& q) const { return block_of(p) == block_of(q); }
  const PiGraph& graph() const { return graph_; }

 private:
  PiGraph graph_;
  Refinement refinement_;
};

inline bool pi_bisimilar(const PiTerm& p, const PiTerm& q, PiStyle style) {
  const PiTerm roots[] = {p, q};
  return PiBisimClasses(std::span<const PiTerm>(roots), style).related(p, q);
}

inline bool ground_bisim(const PiTerm& p, const PiTerm& q) { return pi_bisimilar(p, q, PiStyle::Ground); }
inline bool late_bisim(const PiTerm& p, const PiTerm& q) { return pi_bisimilar(p, q, PiStyle::Late); }
inline bool early_bisim(const PiTerm& p, const PiTerm& q) { return pi_bisimilar(p, q, PiStyle::Early); }

}  // namespace bisimkit

#endif  // BISIMKIT_PI_BISIM_HPP
