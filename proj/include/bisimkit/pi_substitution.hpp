// bisimkit/pi_substitution.hpp: transitions of p.sigma explained by p
//
// Every derivation of p.sigma comes from one component of p (a visible
// action) or from an output component i and an input component j of p
// (tau). The derivation's provenance fixes its case:
//
//   1   visible: p --mu'--> p'' with mu'.sigma = mu and p''.sigma = p';
//   2a  tau, i and j already share their subject in p:
//       p --tau--> p'' with p''.sigma = p';
//   2b  tau on subjects identified by sigma, free object c:
//       p --b<c>--> . --a(x)--> p'' with p''[c/x].sigma ~g p';
//   2c  as 2b with a bound object:
//       p --b<(q)>--> . --a(x)--> p'' with ((nu q) p''[q/x]).sigma ~g p'.
//
// In 2b and 2c the input must also be offered by p itself. A derivation
// passes when the existential of its case is witnessed by p's transitions.

#ifndef BISIMKIT_PI_SUBSTITUTION_HPP
#define BISIMKIT_PI_SUBSTITUTION_HPP

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bisimkit/pi_bisim.hpp"
#include "bisimkit/pi_lts.hpp"
#include "bisimkit/pi_term.hpp"

namespace bisimkit {

enum class SubstCase { Visible = 0, TauDirect = 1, TauFreeObject = 2, TauBoundObject = 3 };

struct SubstitutionReport {
  bool ok = true;
  std::array<std::size_t, 4> cases{};  // derivations per case
  std::string failure;
};

inline SubstitutionReport check_substitution_cases(const PiTerm& p0, const std::map<Name, Name>& sigma) {
  SubstitutionReport report;
  const PiTerm p = canonicalize(p0);
  const PiTerm psigma = pi_substitute(p, sigma);
  auto image = [&](Name n) {
    auto it = sigma.find(n);
    return it == sigma.end() ? n : it->second;
  };
  auto fail = [&](std::string why) {
    if (report.ok) report.failure = std::move(why);
    report.ok = false;
  };

  const auto derivations = late_derivations(p, sigma);
  {
    std::set<PiTransition> traced, direct;
    for (const auto& d : derivations) traced.insert(d.transition);
    auto ts = late_transitions(psigma);
    direct.insert(ts.begin(), ts.end());
    if (traced != direct) fail("traced derivations differ from the transitions of p.sigma");
  }

  const auto own = late_transitions(p);
  const auto comps = shape_of(p).components;
  std::set<Name> avoid = free_names(p);
  for (const auto& kv : sigma) avoid.insert(kv.second);
  const Name q = reserved_fresh_names(1, avoid).front();

  auto inputs_after = [](const PiTerm& state) {
    std::vector<PiTransition> out;
    for (auto& t : late_transitions(state))
      if (t.action.kind == PiActionKind::Input) out.push_back(std::move(t));
    return out;
  };
  auto offered = [&](Name a) {
    return std::any_of(own.begin(), own.end(), [&](const PiTransition& t) {
      return t.action.kind == PiActionKind::Input && t.action.channel == a;
    });
  };

  for (const auto& d : derivations) {
    const auto& mu = d.transition.action;
    const PiTerm& target = d.transition.target;
    bool witnessed = false;
    if (mu.kind != PiActionKind::Tau) {
      ++report.cases[static_cast<int>(SubstCase::Visible)];
      const std::uint32_t depth = mu.binds() ? 1 : 0;
      for (const auto& t : own) {
        PiAction renamed = t.action;
        renamed.channel = image(renamed.channel);
        if (renamed.kind == PiActionKind::FreeOutput) renamed.object = image(renamed.object);
        if (renamed == mu && pi_substitute(t.target, sigma, depth) == target) {
          witnessed = true;
          break;
        }
      }
    } else if (comps[d.first].channel() == comps[d.second].channel()) {
      ++report.cases[static_cast<int>(SubstCase::TauDirect)];
      for (const auto& t : own)
        if (t.action.kind == PiActionKind::Tau && pi_substitute(t.target, sigma) == target) {
          witnessed = true;
          break;
        }
    } else {
      const bool bound_object = is_level_name(comps[d.first].object());
      ++report.cases[static_cast<int>(bound_object ? SubstCase::TauBoundObject : SubstCase::TauFreeObject)];
      for (const auto& out : own) {
        if (witnessed) break;
        const auto kind = bound_object ? PiActionKind::BoundOutput : PiActionKind::FreeOutput;
        if (out.action.kind != kind) continue;
        const Name b = out.action.channel;
        const PiTerm after = bound_object ? open(out.target, q) : out.target;
        for (const auto& in : inputs_after(after)) {
          const Name a = in.action.channel;
          if (image(a) != image(b) || !offered(a)) continue;
          PiTerm candidate = bound_object ? restrict(open(in.target, q), {q}) : open(in.target, out.action.object);
          if (ground_bisim(pi_substitute(candidate, sigma), target)) {
            witnessed = true;
            break;
          }
        }
      }
    }
    if (!witnessed) fail("unexplained transition " + mu.str());
  }
  return report;
}

}  // namespace bisimkit

#endif  // BISIMKIT_PI_SUBSTITUTION_HPP
