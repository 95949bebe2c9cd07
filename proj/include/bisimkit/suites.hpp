// bisimkit/suites.hpp: the property suites behind `enumerate` and the
// acceptance run
//
// Each suite is exhaustive up to a bound or sampled with a fixed seed, and
// reports how many instances it checked, how many failed, and the first
// failing instance in a deterministic order. Work is sharded over
// BISIMKIT_WORKERS threads where it is embarrassingly parallel; results are
// collected by index, so reports do not depend on scheduling.

#ifndef BISIMKIT_SUITES_HPP
#define BISIMKIT_SUITES_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "bisimkit/ccs_lts.hpp"
#include "bisimkit/ccs_plus.hpp"
#include "bisimkit/ccs_syntax.hpp"
#include "bisimkit/enumerate.hpp"
#include "bisimkit/erasure.hpp"
#include "bisimkit/md_analysis.hpp"
#include "bisimkit/normalizer.hpp"
#include "bisimkit/pi_bisim.hpp"
#include "bisimkit/pi_enumerate.hpp"
#include "bisimkit/pi_substitution.hpp"
#include "bisimkit/pi_syntax.hpp"

namespace bisimkit {

struct SuiteOptions {
  std::uint32_t ccs_size = 4;          // suites 1, 3, 5
  std::uint32_t cancel_size = 5;       // suite 4
  std::uint32_t plus_size = 3;         // suites 8, 9
  std::uint32_t pi_size = 3;           // suite 11
  std::uint32_t samples = 0;           // 0 keeps each suite's own count
  std::uint64_t seed = 20240601;
  unsigned workers = 0;                // 0 reads BISIMKIT_WORKERS
};

struct SuiteReport {
  SuiteReport() = default;
  SuiteReport(int id_, std::string name_, std::string title_)
      : id(id_), name(std::move(name_)), title(std::move(title_)) {}

  int id = 0;
  std::string name;
  std::string title;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string counterexample;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failures == 0 && checked > 0; }

  void fail(const std::string& what) {
    if (failures++ == 0) counterexample = what;
  }
};

inline unsigned worker_count(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BISIMKIT_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs f(i) for i in [0, n) on `workers` threads and returns the results
/// in index order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned workers, F&& f) {
  std::vector<R> out(n);
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) out[i] = f(i);
  };
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    drain();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
  return out;
}

namespace detail {

inline const std::vector<Name>& two_names() {
  static const std::vector<Name> ab{Name::intern("a"), Name::intern("b")};
  return ab;
}

inline std::vector<Term> suite1_terms(const SuiteOptions& o) {
  return ccs_terms_up_to(both_polarities(two_names()), o.ccs_size);
}

inline std::string pair_text(const Term& p, const Term& q) { return print_term(p) + "  vs  " + print_term(q); }
inline std::string pair_text(const PiTerm& p, const PiTerm& q) { return print_term(p) + "  vs  " + print_term(q); }

// Groups indices by a key, preserving first-seen order.
template <class Key>
std::vector<std::vector<std::size_t>> classes_by(std::size_t n, const std::function<Key(std::size_t)>& key) {
  std::map<Key, std::size_t> slot;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = slot.emplace(key(i), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

}  // namespace detail

// 1: normal forms decide the oracle's bisimilarity on every pair.
inline SuiteReport suite_agreement(const SuiteOptions& o) {
  SuiteReport r{1, "agreement", "normal-form equality agrees with the oracle on all pairs"};
  const auto terms = detail::suite1_terms(o);
  const auto nfs = parallel_map<Term>(terms.size(), worker_count(o.workers),
                                      [&](std::size_t i) { return normalize(terms[i]).term; });
  const StrongBisimClasses oracle{std::span<const Term>(terms)};
  std::vector<std::uint32_t> block(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) block[i] = oracle.block_of(terms[i]);
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i; j < terms.size(); ++j) {
      ++r.checked;
      if ((nfs[i] == nfs[j]) != (block[i] == block[j]))
        r.fail(detail::pair_text(terms[i], terms[j]) + (block[i] == block[j] ? " (oracle: bisimilar)" : " (oracle: not bisimilar)"));
    }
  r.notes.push_back(std::to_string(terms.size()) + " terms, " + std::to_string(oracle.block_count()) + " oracle classes");
  return r;
}

// 2: a.a^n ~ a^(n+1), and a.a^n decomposes into n+1 copies of a.0.
inline SuiteReport suite_witnesses(const SuiteOptions&) {
  SuiteReport r{2, "witnesses", "a.a^n ~ a^(n+1) with n+1 prime factors a.0"};
  const Term a = Term::prefix(Prefix::action(Name::intern("a")), Term::nil());
  for (std::size_t n = 1; n <= 10; ++n) {
    ++r.checked;
    const Term lhs = Term::prefix(Prefix::action(Name::intern("a")), power(a, n));
    const Term rhs = power(a, n + 1);
    const auto primes = prime_decompose(lhs).components;
    const bool ok = decide_bisim(lhs, rhs) && primes.size() == n + 1 &&
                    std::all_of(primes.begin(), primes.end(), [&](const Term& c) { return c == a; });
    if (!ok) r.fail("n = " + std::to_string(n));
  }
  return r;
}

// 3: every rewrite order reaches the same normal form, and weight drops on
// every step.
inline SuiteReport suite_confluence(const SuiteOptions& o) {
  SuiteReport r{3, "confluence", "all rewrite orders meet in one normal form within the weight bound"};
  const auto terms = detail::suite1_terms(o);
  struct Outcome {
    bool ok = true;
    std::string why;
    std::size_t states = 0;
  };
  const auto results = parallel_map<Outcome>(terms.size(), worker_count(o.workers), [&](std::size_t i) {
    Outcome out;
    const Term& t = terms[i];
    std::map<Term, std::vector<Term>> succ;
    std::vector<Term> stack{t};
    std::set<Term> normal;
    while (!stack.empty()) {
      Term u = stack.back();
      stack.pop_back();
      if (succ.count(u)) continue;
      auto next = all_rewrite_steps(u);
      for (const auto& v : next) {
        if (weight(v) >= weight(u)) {
          out.ok = false;
          out.why = "weight does not drop: " + print_term(u) + " -> " + print_term(v);
        }
        stack.push_back(v);
      }
      if (next.empty()) normal.insert(u);
      succ.emplace(u, std::move(next));
    }
    // longest rewrite sequence, on the acyclic step graph
    std::map<Term, std::uint64_t> longest;
    auto depth = [&](auto&& self, const Term& u) -> std::uint64_t {
      if (auto it = longest.find(u); it != longest.end()) return it->second;
      std::uint64_t best = 0;
      for (const auto& v : succ.at(u)) best = std::max(best, 1 + self(self, v));
      return longest[u] = best;
    };
    if (depth(depth, t) > weight(t)) {
      out.ok = false;
      out.why = "rewrite sequence longer than the weight bound: " + print_term(t);
    }
    if (normal.size() != 1 || *normal.begin() != normalize(t).term) {
      out.ok = false;
      out.why = std::to_string(normal.size()) + " normal forms: " + print_term(t);
    }
    out.states = succ.size();
    return out;
  });
  std::size_t explored = 0;
  for (const auto& res : results) {
    ++r.checked;
    explored += res.states;
    if (!res.ok) r.fail(res.why);
  }
  r.notes.push_back(std::to_string(explored) + " rewrite states explored");
  return r;
}

// 4: p | r ~ q | r implies p ~ q.
inline SuiteReport suite_cancellation(const SuiteOptions& o) {
  SuiteReport r{4, "cancellation", "p | r ~ q | r implies p ~ q"};
  const auto prefixes = both_polarities(detail::two_names());
  TermEnumerator e(prefixes);
  const auto all = e.up_to(o.cancel_size);
  const StrongBisimClasses oracle{std::span<const Term>(all)};
  for (std::uint32_t k = 0; k <= o.cancel_size; ++k)
    for (const auto& rest : e.of_size(k)) {
      // p ranges over size <= bound - k, so both p | r and q | r stay in bound
      std::map<std::uint32_t, std::pair<std::uint32_t, Term>> seen;  // block(p|r) -> (block(p), p)
      for (std::uint32_t m = 0; m + k <= o.cancel_size; ++m)
        for (const auto& p : e.of_size(m)) {
          const auto joint = oracle.block_of(Term::par(p, rest));
          const auto own = oracle.block_of(p);
          auto [it, fresh] = seen.emplace(joint, std::make_pair(own, p));
          ++r.checked;
          if (!fresh && it->second.first != own)
            r.fail("p = " + print_term(it->second.second) + ", q = " + print_term(p) + ", r = " + print_term(rest));
        }
    }
  r.notes.push_back(std::to_string(all.size()) + " terms of size <= " + std::to_string(o.cancel_size));
  return r;
}

// 5: bisimilar terms have equal contributions at every prefix.
inline SuiteReport suite_contribution(const SuiteOptions& o) {
  SuiteReport r{5, "contribution", "bisimilar terms have equal contributions"};
  const auto terms = detail::suite1_terms(o);
  const auto prefixes = both_polarities(detail::two_names());
  const StrongBisimClasses oracle{std::span<const Term>(terms)};
  auto groups = detail::classes_by<std::uint32_t>(terms.size(), [&](std::size_t i) { return oracle.block_of(terms[i]); });
  for (const auto& g : groups) {
    const Term& rep = terms[g.front()];
    for (std::size_t idx : g) {
      ++r.checked;
      for (const auto& eta : prefixes)
        if (contribution(rep, eta) != contribution(terms[idx], eta)) {
          r.fail(detail::pair_text(rep, terms[idx]) + " at " + eta.str());
          break;
        }
    }
  }
  return r;
}

// 6: no mirrored dependency in microCCS.
inline SuiteReport suite_md_absence(const SuiteOptions&) {
  SuiteReport r{6, "md-absence", "microCCS has no mirrored dependency"};
  ParallelSearchStats stats;
  ++r.checked;
  if (auto w = search_md_parallel_shape(3, detail::two_names(), &stats))
    r.fail("parallel shape: " + print_term(w->left()) + "  ~  " + print_term(w->right()));
  ++r.checked;
  if (auto w = search_md_diagram(Calculus::Ccs, 4, detail::two_names())) r.fail("diagram shape at " + print_term(w->q));
  r.notes.push_back(std::to_string(stats.candidates) + " parallel-shape candidates, size argument failed on " +
                    std::to_string(stats.size_argument_failures));
  return r;
}

// 7: the expansion law in microCCS+ and the mirrored dependency it yields.
inline SuiteReport suite_md_sum(const SuiteOptions&) {
  SuiteReport r{7, "md-sum", "a.0 | 'b.0 ~ a.'b.0 + 'b.a.0, lost under a,b -> p; MD found in microCCS+"};
  const Term par = parse_ccs_plus("a.0 | 'b.0");
  const Term sum = parse_ccs_plus("a.'b.0 + 'b.a.0");
  ++r.checked;
  if (!strong_bisim_plus(par, sum)) r.fail("expansion pair not bisimilar");
  const Substitution to_p{{Name::intern("a"), Name::intern("p")}, {Name::intern("b"), Name::intern("p")}};
  ++r.checked;
  if (strong_bisim_plus(apply_substitution(par, to_p), apply_substitution(sum, to_p)))
    r.fail("substituted pair still bisimilar");
  ++r.checked;
  auto w = search_md_diagram(Calculus::CcsPlus, 4, detail::two_names());
  if (!w) {
    r.fail("no diagram MD found in microCCS+ up to size 4");
    return r;
  }
  auto fires = [](const Term& from, const Prefix& eta, const Term& to) {
    for (const auto& t : transitions(from))
      if (t.action == CcsAction::of(eta) && t.target == canonicalize(to)) return true;
    return false;
  };
  auto path_ok = [&](const DependentFiring& f) {
    for (const auto& t : transitions(w->q))
      if (t.action == CcsAction::of(f.first) && fires(t.target, f.second, f.end)) return true;
    return false;
  };
  const bool valid = w->eta1 != w->eta2 && path_ok(w->path12) && path_ok(w->path21) && bisimilar_oracle(w->q12, w->q21);
  const bool small = w->q == sum || (size(w->q) <= size(sum) && w->q < sum);
  if (!valid || !small) r.fail("witness " + print_term(w->q) + " is not a valid minimal MD");
  ++r.checked;
  if (!find_diagram_md(sum)) r.fail("a.'b.0 + 'b.a.0 carries no MD");
  r.notes.push_back("witness q = " + print_term(w->q) + " via " + w->eta1.str() + ", " + w->eta2.str());
  return r;
}

namespace detail {
struct PlusUniverse {
  std::vector<Term> terms;
  std::vector<std::uint32_t> block;
  std::vector<std::pair<std::size_t, std::size_t>> related;  // i <= j
};

inline PlusUniverse plus_universe(const SuiteOptions& o) {
  PlusUniverse u;
  u.terms = ccs_plus_terms_up_to(both_polarities(two_names()), o.plus_size);
  const DistributedBisimClasses classes{std::span<const Term>(u.terms)};
  for (const auto& t : u.terms) u.block.push_back(classes.block_of(t));
  for (std::size_t i = 0; i < u.terms.size(); ++i)
    for (std::size_t j = i; j < u.terms.size(); ++j)
      if (u.block[i] == u.block[j]) u.related.emplace_back(i, j);
  return u;
}
}  // namespace detail

// 8: dsim is canonical-form equality, and closed under substitution.
inline SuiteReport suite_dsim_canonical(const SuiteOptions& o) {
  SuiteReport r{8, "dsim-canonical", "dsim coincides with canonical equality and is substitution-closed"};
  const auto u = detail::plus_universe(o);
  for (std::size_t i = 0; i < u.terms.size(); ++i)
    for (std::size_t j = i; j < u.terms.size(); ++j) {
      ++r.checked;
      if ((u.block[i] == u.block[j]) != (u.terms[i] == u.terms[j])) r.fail(detail::pair_text(u.terms[i], u.terms[j]));
    }
  std::uint64_t substitutions = 0;
  for (auto [i, j] : u.related) {
    const Term& p = u.terms[i];
    const Term& q = u.terms[j];
    std::set<Name> dom = names_of(p);
    auto nq = names_of(q);
    dom.insert(nq.begin(), nq.end());
    for (const auto& sigma : all_substitutions({dom.begin(), dom.end()}, detail::two_names())) {
      ++r.checked;
      ++substitutions;
      if (!dsim(apply_substitution(p, sigma), apply_substitution(q, sigma)))
        r.fail("substitution breaks " + detail::pair_text(p, q));
    }
  }
  r.notes.push_back(std::to_string(u.terms.size()) + " terms, " + std::to_string(u.related.size()) +
                    " related pairs, " + std::to_string(substitutions) + " substituted pairs");
  return r;
}

// 9: related parallel products match component by component.
inline SuiteReport suite_separation(const SuiteOptions& o) {
  SuiteReport r{9, "separation", "dsim-related products have a perfect component matching"};
  const auto u = detail::plus_universe(o);
  for (auto [i, j] : u.related) {
    const Term& p = u.terms[i];
    const Term& q = u.terms[j];
    if (p.kind() != TermKind::Par || q.kind() != TermKind::Par) continue;
    ++r.checked;
    if (!perfect_matching(p.components(), q.components(), [](const Term& x, const Term& y) { return dsim(x, y); }))
      r.fail(detail::pair_text(p, q));
  }
  return r;
}

namespace detail {
inline const std::vector<Name>& three_names() {
  static const std::vector<Name> abc{Name::intern("a"), Name::intern("b"), Name::intern("c")};
  return abc;
}
}  // namespace detail

// 10: transitions of the erasure mirror a/b transitions of the process.
inline SuiteReport suite_erasure_transitions(const SuiteOptions& o) {
  SuiteReport r{10, "erasure-transitions", "erasure transitions mirror a-inputs and b-outputs"};
  const std::size_t n = o.samples ? o.samples : 1000;
  std::mt19937_64 rng(o.seed);
  std::vector<PiTerm> ps;
  for (std::size_t i = 0; i < n; ++i) ps.push_back(random_pi(rng, 6, 2, detail::three_names()));
  const ErasureContext ctx(Name::intern("a"), Name::intern("b"));
  const auto ok = parallel_map<char>(n, worker_count(o.workers),
                                     [&](std::size_t i) { return static_cast<char>(check_erasure_transitions(ps[i], ctx)); });
  for (std::size_t i = 0; i < n; ++i) {
    ++r.checked;
    if (!ok[i]) r.fail(print_term(canonicalize(ps[i])));
  }
  return r;
}

// 11: transfer, substitution closure, and ground = late = early.
inline SuiteReport suite_pi_transfer(const SuiteOptions& o) {
  SuiteReport r{11, "pi-transfer", "transfer to microCCS, substitution closure, ground = late = early"};
  const auto& ab = detail::two_names();
  const auto terms = pi_terms_up_to(o.pi_size, ab, 1);
  const std::set<Name> universe(ab.begin(), ab.end());
  const std::span<const PiTerm> roots(terms);

  std::vector<std::vector<std::uint32_t>> blocks;
  for (auto style : {PiStyle::Ground, PiStyle::Late, PiStyle::Early}) {
    const PiBisimClasses classes(roots, style, universe);
    std::vector<std::uint32_t> b;
    for (const auto& t : terms) b.push_back(classes.block_of(t));
    blocks.push_back(std::move(b));
  }
  const auto& ground = blocks[0];
  auto groups = detail::classes_by<std::uint32_t>(terms.size(), [&](std::size_t i) { return ground[i]; });

  // (iii) the three partitions agree: compare each to ground's, both ways
  for (std::size_t s = 1; s < 3; ++s) {
    std::map<std::uint32_t, std::uint32_t> fwd, bwd;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      ++r.checked;
      auto [f, nf] = fwd.emplace(ground[i], blocks[s][i]);
      auto [b, nb] = bwd.emplace(blocks[s][i], ground[i]);
      if (f->second != blocks[s][i] || b->second != ground[i])
        r.fail(std::string(s == 1 ? "late" : "early") + " verdict differs from ground at " + print_term(terms[i]));
    }
  }

  // (i) transfer, for both orientations of the name pair
  std::uint64_t pairs = 0;
  for (const auto& g : groups) pairs += g.size() * (g.size() + 1) / 2;
  for (const auto& ctx : {ErasureContext(ab[0], ab[1]), ErasureContext(ab[1], ab[0])}) {
    std::map<PiTerm, Term> nf;
    for (std::size_t i = 0; i < terms.size(); ++i) nf.emplace(terms[i], normalize(erase(terms[i], ctx)).term);
    for (const auto& g : groups) {
      const PiTerm& rep = terms[g.front()];
      for (std::size_t idx : g) {
        ++r.checked;
        if (nf.at(rep) != nf.at(terms[idx])) r.fail("transfer fails: " + detail::pair_text(rep, terms[idx]));
      }
    }
    // the library entry point itself, on one pair per class
    for (const auto& g : groups) {
      ++r.checked;
      if (!transfer_check(terms[g.front()], terms[g.back()], ctx)) r.fail("transfer_check false");
    }
  }

  // (ii) closure under every substitution over the free names
  std::uint64_t substituted = 0;
  for (const auto& sigma_s : all_substitutions(ab, ab)) {
    const std::map<Name, Name> sigma = sigma_s.mapping();
    std::vector<PiTerm> images;
    for (const auto& t : terms) images.push_back(pi_substitute(t, sigma));
    const PiBisimClasses classes(std::span<const PiTerm>(images), PiStyle::Ground, universe);
    for (const auto& g : groups) {
      const auto want = classes.block_of(images[g.front()]);
      for (std::size_t idx : g) {
        ++r.checked;
        ++substituted;
        if (classes.block_of(images[idx]) != want)
          r.fail("substitution breaks " + detail::pair_text(terms[g.front()], terms[idx]));
      }
    }
  }
  r.notes.push_back(std::to_string(terms.size()) + " terms, " + std::to_string(groups.size()) + " ground classes, " +
                    std::to_string(pairs) + " related pairs");
  return r;
}

// 12: normalizing then instantiating freshly equals the reverse order.
inline SuiteReport suite_open_normalization(const SuiteOptions& o) {
  SuiteReport r{12, "open-normalization", "open normal forms commute with fresh instantiation"};
  const std::size_t n = o.samples ? o.samples : 500;
  std::mt19937_64 rng(o.seed + 12);
  const auto prefixes = both_polarities(detail::two_names());
  const std::vector<Name> vars{Name::intern("X"), Name::intern("Y"), Name::intern("Z")};
  for (std::size_t i = 0; i < n; ++i) {
    const auto sz = static_cast<std::uint32_t>(std::uniform_int_distribution<int>(0, 5)(rng));
    const Term m = canonicalize(random_ccs(rng, sz, prefixes, vars));
    const auto inst = fresh_instantiation({m});
    ++r.checked;
    if (instantiate(normalize_open(m), inst, true) != normalize(instantiate(m, inst, true)).term) r.fail(print_term(m));
  }
  return r;
}

// 13: every transition of p.sigma is explained by p.
inline SuiteReport suite_substitution_cases(const SuiteOptions& o) {
  SuiteReport r{13, "substitution-cases", "transitions of p.sigma fall into exactly one explained case"};
  const std::size_t n = o.samples ? o.samples : 1000;
  std::mt19937_64 rng(o.seed + 13);
  const auto& names = detail::three_names();
  std::vector<std::pair<PiTerm, std::map<Name, Name>>> inputs;
  for (std::size_t i = 0; i < n; ++i) {
    PiTerm p;
    std::set<Name> fn;
    do {
      p = canonicalize(random_pi(rng, 6, 2, names));
      fn = free_names(p);
    } while (fn.size() < 2);
    std::vector<Name> pool(fn.begin(), fn.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    inputs.push_back({p, {{pool[0], pool[1]}}});
  }
  const auto reports = parallel_map<SubstitutionReport>(n, worker_count(o.workers), [&](std::size_t i) {
    return check_substitution_cases(inputs[i].first, inputs[i].second);
  });
  std::array<std::uint64_t, 4> totals{};
  for (std::size_t i = 0; i < n; ++i) {
    ++r.checked;
    for (int c = 0; c < 4; ++c) totals[c] += reports[i].cases[c];
    if (!reports[i].ok) {
      const auto& [from, to] = *inputs[i].second.begin();
      r.fail(print_term(inputs[i].first) + " with " + from.str() + " -> " + to.str() + ": " + reports[i].failure);
    }
  }
  r.notes.push_back("cases 1/2a/2b/2c: " + std::to_string(totals[0]) + "/" + std::to_string(totals[1]) + "/" +
                    std::to_string(totals[2]) + "/" + std::to_string(totals[3]));
  return r;
}

struct SuiteEntry {
  int id;
  const char* name;
  std::function<SuiteReport(const SuiteOptions&)> run;
};

inline const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> all{
      {1, "agreement", suite_agreement},
      {2, "witnesses", suite_witnesses},
      {3, "confluence", suite_confluence},
      {4, "cancellation", suite_cancellation},
      {5, "contribution", suite_contribution},
      {6, "md-absence", suite_md_absence},
      {7, "md-sum", suite_md_sum},
      {8, "dsim-canonical", suite_dsim_canonical},
      {9, "separation", suite_separation},
      {10, "erasure-transitions", suite_erasure_transitions},
      {11, "pi-transfer", suite_pi_transfer},
      {12, "open-normalization", suite_open_normalization},
      {13, "substitution-cases", suite_substitution_cases},
  };
  return all;
}

inline const SuiteEntry* find_suite(const std::string& key) {
  for (const auto& s : suites())
    if (key == s.name || key == std::to_string(s.id)) return &s;
  return nullptr;
}

inline SuiteReport run_suite(const SuiteEntry& s, const SuiteOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = s.run(o);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace bisimkit

#endif  // BISIMKIT_SUITES_HPP
