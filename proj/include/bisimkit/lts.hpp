// bisimkit/lts.hpp: finite transition graphs and signature refinement
//
// TransitionGraph stores the reachable part of a transition system from a
// set of roots. An edge carries one label and a tuple of targets: a plain
// LTS uses one target per edge, distributed transitions use two (local and
// concurrent residual), late input clauses use one per instantiating name.
//
// refine() computes the coarsest partition that is stable for the
// signature  sig(s) = { (label, block(t_1), ..., block(t_k)) | s -> (t_1..t_k) }.
// Two states end in the same block iff they are related by the largest
// bisimulation of that shape. Round r of the history is the partition
// induced by r steps of the bisimulation game.

#ifndef BISIMKIT_LTS_HPP
#define BISIMKIT_LTS_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bisimkit {

using StateId = std::uint32_t;

template <class State, class Label, class Hash = std::hash<State>>
class TransitionGraph {
 public:
  struct Edge {
    StateId source;
    Label label;
    std::vector<StateId> targets;
  };

  /// Returns the id of `s`, adding it when new.
  std::pair<StateId, bool> add_state(const State& s) {
    auto [it, inserted] = index_.emplace(s, static_cast<StateId>(states_.size()));
    if (inserted) {
      states_.push_back(s);
      out_.emplace_back();
    }
    return {it->second, inserted};
  }

  void add_edge(StateId source, Label label, std::vector<StateId> targets) {
    out_[source].push_back(edges_.size());
    edges_.push_back(Edge{source, std::move(label), std::move(targets)});
  }

  std::optional<StateId> find(const State& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  StateId id_of(const State& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::out_of_range("state not in graph");
    return it->second;
  }

  const std::vector<State>& states() const { return states_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& out_edges(StateId s) const { return out_[s]; }
  std::vector<StateId>& roots() { return roots_; }
  const std::vector<StateId>& roots() const { return roots_; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  std::vector<State> states_;
  std::unordered_map<State, StateId, Hash> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<StateId> roots_;
};

/// Breadth-first exploration. `successors(state)` returns a range of
/// (label, std::vector<State>) pairs.
template <class State, class Label, class Hash = std::hash<State>, class Successors>
TransitionGraph<State, Label, Hash> explore(std::span<const State> roots, Successors&& successors) {
  TransitionGraph<State, Label, Hash> g;
  std::deque<StateId> work;
  for (const auto& r : roots) {
    auto [id, fresh] = g.add_state(r);
    g.roots().push_back(id);
    if (fresh) work.push_back(id);
  }
  while (!work.empty()) {
    StateId s = work.front();
    work.pop_front();
    State current = g.states()[s];
    for (auto& [label, targets] : successors(current)) {
      std::vector<StateId> ids;
      ids.reserve(targets.size());
      for (const auto& t : targets) {
        auto [id, fresh] = g.add_state(t);
        if (fresh) work.push_back(id);
        ids.push_back(id);
      }
      g.add_edge(s, label, std::move(ids));
    }
  }
  return g;
}

struct Refinement {
  std::vector<std::uint32_t> blocks;                // final block per state
  std::vector<std::vector<std::uint32_t>> history;  // history[r] = partition after r rounds
  std::size_t block_count = 0;
};

namespace detail {
struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
}  // namespace detail

template <class Graph>
Refinement refine(const Graph& g, bool keep_history = false) {
  const std::size_t n = g.state_count();
  // Labels are ranked once so signatures are plain integer vectors.
  std::map<typename std::decay_t<decltype(g.edges().front().label)>, std::uint32_t> label_rank;
  for (const auto& e : g.edges()) label_rank.emplace(e.label, 0);
  {
    std::uint32_t r = 0;
    for (auto& kv : label_rank) kv.second = r++;
  }
  std::vector<std::uint32_t> edge_label(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) edge_label[i] = label_rank.at(g.edges()[i].label);

  Refinement result;
  result.blocks.assign(n, 0);
  result.block_count = n == 0 ? 0 : 1;
  if (keep_history) result.history.push_back(result.blocks);

  std::vector<std::vector<std::uint32_t>> items;
  while (true) {
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::VectorHash> ids;
    std::vector<std::uint32_t> next(n);
    for (StateId s = 0; s < n; ++s) {
      items.clear();
      for (std::size_t e : g.out_edges(s)) {
        const auto& edge = g.edges()[e];
        std::vector<std::uint32_t> item;
        item.reserve(edge.targets.size() + 1);
        item.push_back(edge_label[e]);
        for (StateId t : edge.targets) item.push_back(result.blocks[t]);
        items.push_back(std::move(item));
      }
      std::sort(items.begin(), items.end());
      items.erase(std::unique(items.begin(), items.end()), items.end());
      std::vector<std::uint32_t> sig;
      sig.push_back(result.blocks[s]);
      for (const auto& item : items) {
        sig.push_back(static_cast<std::uint32_t>(item.size()));
        sig.insert(sig.end(), item.begin(), item.end());
      }
      auto [it, inserted] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()));
      next[s] = it->second;
    }
    std::size_t count = ids.size();
    bool stable = count == result.block_count;
    result.blocks = std::move(next);
    result.block_count = count;
    if (keep_history) result.history.push_back(result.blocks);
    if (stable) break;
  }
  return result;
}

}  // namespace bisimkit

#endif  // BISIMKIT_LTS_HPP
