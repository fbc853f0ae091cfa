#include "isolation/exact.hpp"

#include <algorithm>
#include <vector>

namespace isolation {

namespace {

class BudgetExceeded {};

class IotaSearch {
 public:
  IotaSearch(const Graph& g, const TargetPattern& t, std::uint64_t max_nodes)
      : g_(g), t_(t), max_nodes_(max_nodes) {}

  bool run(int size, VertexSet& witness) {
    VertexSet d;
    if (!dfs(d, VertexSet{}, size)) return false;
    witness = solution_;
    return true;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Closed neighborhood of a surviving pattern, minus forbidden vertices; the
  // smallest one over the patterns inspected. Empty optional: no pattern left.
  std::optional<VertexSet> branch_set(VertexSet rest, VertexSet forbidden) const {
    if (t_.is_cycle()) {
      auto cycle = shortest_cycle(g_, rest);
      if (!cycle) return std::nullopt;
      return closed_neighborhood(g_, VertexSet::from_range(*cycle)) - forbidden;
    }
    std::optional<VertexSet> best;
    if (t_.k() <= 2) {
      for (Vertex u : rest) {
        VertexSet partners = t_.k() == 1 ? VertexSet::single(u) : (g_.neighbors(u) & rest) - VertexSet::range(u + 1);
        for (Vertex w : partners) {
          VertexSet hit = (closed_neighborhood(g_, u) | closed_neighborhood(g_, w)) - forbidden;
          if (!best || hit.size() < best->size()) best = hit;
        }
      }
      return best;
    }
    for (VertexSet clique : all_k_cliques(g_, t_.k(), rest)) {
      VertexSet hit = closed_neighborhood(g_, clique) - forbidden;
      if (!best || hit.size() < best->size()) best = hit;
    }
    return best;
  }

  bool dfs(VertexSet d, VertexSet forbidden, int remaining) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded{};
    const VertexSet rest = g_.vertices() - closed_neighborhood(g_, d);
    auto candidates = branch_set(rest, forbidden);
    if (!candidates) {
      solution_ = d;
      return true;
    }
    if (remaining == 0) return false;
    VertexSet tried;
    for (Vertex w : *candidates) {
      VertexSet next = d;
      next.insert(w);
      if (dfs(next, forbidden | tried, remaining - 1)) return true;
      tried.insert(w);
    }
    return false;
  }

  const Graph& g_;
  const TargetPattern& t_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  VertexSet solution_;
};

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const TargetPattern& t, int classes, std::uint64_t max_nodes)
      : g_(g), t_(t), m_(classes), max_nodes_(max_nodes), need_nonempty_(has_pattern(g, t, g.vertices())),
        sets_(classes), colors_(g.order(), 0) {}

  bool run() { return place(0, 0); }
  Coloring coloring() const { return Coloring(colors_, m_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool isolates(VertexSet d) const {
    return !has_pattern(g_, t_, g_.vertices() - closed_neighborhood(g_, d));
  }

  bool place(Vertex v, int used) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded{};
    const int n = g_.order();
    const VertexSet unassigned = g_.vertices() - VertexSet::range(v);
    if (need_nonempty_ && unassigned.size() < m_ - used) return false;
    // Monotonicity: a class can only grow into D_i plus the unassigned vertices.
    for (int i = 0; i < used; ++i) {
      if (!isolates(sets_[i] | unassigned)) return false;
    }
    if (used < m_ && !isolates(unassigned)) return false;
    if (v == n) return true;
    const int limit = std::min(used + 1, m_);
    for (int c = 0; c < limit; ++c) {
      sets_[c].insert(v);
      colors_[v] = c + 1;
      if (place(v + 1, std::max(used, c + 1))) return true;
      sets_[c].erase(v);
    }
    colors_[v] = 0;
    return false;
  }

  const Graph& g_;
  const TargetPattern& t_;
  int m_;
  std::uint64_t max_nodes_;
  bool need_nonempty_;
  std::vector<VertexSet> sets_;
  std::vector<int> colors_;
  std::uint64_t nodes_ = 0;
};

std::string order_too_large(const Graph& g, const SearchBudget& budget) {
  return "graph order " + std::to_string(g.order()) + " exceeds search limit " + std::to_string(budget.max_order);
}

}  // namespace

IsolationNumberResult min_isolating(const Graph& g, const TargetPattern& t, SearchBudget budget) {
  IsolationNumberResult result;
  if (g.order() > budget.max_order) {
    result.abort_reason = order_too_large(g, budget);
    return result;
  }
  IotaSearch search(g, t, budget.max_nodes);
  try {
    for (int size = 0; size <= g.order(); ++size) {
      VertexSet witness;
      if (search.run(size, witness)) {
        result.status = SearchStatus::Solved;
        result.value = witness.size();
        result.witness = witness;
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    result.abort_reason = "node budget of " + std::to_string(budget.max_nodes) + " exhausted";
  }
  result.nodes = search.nodes();
  return result;
}

PartitionSearchResult find_isomatic_partition(const Graph& g, const TargetPattern& t, int classes,
                                              SearchBudget budget) {
  if (classes < 1) throw Error("a partition needs at least one class");
  PartitionSearchResult result;
  if (g.order() > budget.max_order) return result;
  PartitionSearch search(g, t, classes, budget.max_nodes);
  try {
    if (search.run()) result.coloring = search.coloring();
    result.status = SearchStatus::Solved;
  } catch (const BudgetExceeded&) {
  }
  result.nodes = search.nodes();
  return result;
}

IsomaticResult max_isomatic(const Graph& g, const TargetPattern& t, SearchBudget budget) {
  IsomaticResult result;
  const int n = g.order();
  if (n > budget.max_order) {
    result.abort_reason = order_too_large(g, budget);
    return result;
  }
  if (!has_pattern(g, t, g.vertices())) {
    std::vector<int> singletons(n);
    for (Vertex v = 0; v < n; ++v) singletons[v] = v + 1;
    result.status = SearchStatus::Solved;
    result.value = n;
    result.unbounded = true;
    result.witness = Coloring(singletons, std::max(n, 1));
    return result;
  }
  // Every class is nonempty and has at least iota vertices.
  IsolationNumberResult iota = min_isolating(g, t, {n, budget.max_nodes});
  result.nodes = iota.nodes;
  if (!iota.solved()) {
    result.abort_reason = iota.abort_reason;
    return result;
  }
  for (int m = n / iota.value; m >= 1; --m) {
    SearchBudget left{budget.max_order, budget.max_nodes > result.nodes ? budget.max_nodes - result.nodes : 0};
    PartitionSearchResult found = find_isomatic_partition(g, t, m, left);
    result.nodes += found.nodes;
    if (found.status == SearchStatus::Aborted) {
      result.abort_reason = "node budget of " + std::to_string(budget.max_nodes) + " exhausted";
      return result;
    }
    if (found.coloring) {
      result.status = SearchStatus::Solved;
      result.value = m;
      result.witness = *found.coloring;
      return result;
    }
  }
  throw Error("no isomatic partition found, not even the trivial one");
}

Coloring clique_isomatic_k_partition(const Graph& g, int k) {
  if (k < 1) throw Error("clique order must be positive");
  std::vector<int> colors(g.order(), k);
  VertexSet rest = g.vertices();
  while (auto clique = find_k_clique(g, k, rest)) {
    int color = 1;
    for (Vertex v : *clique) colors[v] = color++;
    rest -= *clique;
  }
  return Coloring(colors, k);
}

Coloring cycle_isomatic_3_partition(const Graph& g, SearchBudget budget) {
  std::vector<int> colors(g.order(), 3);
  const TargetPattern edge = TargetPattern::edge();
  for (VertexSet comp : components(g)) {
    if (is_forest(g, comp)) continue;
    if (is_cycle_graph(g, comp)) {
      // Walk the cycle from its smallest vertex; the first three get 1, 2, 3.
      Vertex prev = -1;
      Vertex cur = comp.first();
      for (int color = 1; color <= 3; ++color) {
        colors[cur] = color;
        Vertex next = (g.neighbors(cur) & comp).first();
        if (next == prev) next = ((g.neighbors(cur) & comp) - VertexSet::single(prev)).first();
        prev = cur;
        cur = next;
      }
      continue;
    }
    InducedSubgraph sub = induced_subgraph(g, comp);
    PartitionSearchResult found = find_isomatic_partition(sub.graph, edge, 3, budget);
    if (found.status == SearchStatus::Aborted) {
      throw SearchAbortedError("isolating 3-partition search aborted on a component of order " +
                               std::to_string(comp.size()));
    }
    if (!found.coloring) {
      throw Error("component of order " + std::to_string(comp.size()) + " has no isolating 3-partition");
    }
    for (std::size_t i = 0; i < sub.to_original.size(); ++i) {
      colors[sub.to_original[i]] = (*found.coloring)[static_cast<Vertex>(i)];
    }
  }
  return Coloring(colors, 3);
}

std::string to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::Holds: return "holds";
    case BoundStatus::Vacuous: return "vacuous";
    case BoundStatus::Violated: return "violated";
    case BoundStatus::Aborted: return "aborted";
  }
  return "aborted";
}

IsoIotaBound check_iso_iota_bound(const Graph& g, const TargetPattern& t, SearchBudget iota_budget,
                                  SearchBudget iso_budget) {
  IsoIotaBound out;
  out.order = g.order();
  IsolationNumberResult iota = min_isolating(g, t, iota_budget);
  if (!iota.solved()) return out;
  out.iota = iota.value;
  IsomaticResult iso = max_isomatic(g, t, iso_budget);
  if (!iso.solved()) return out;
  out.iso = iso.value;
  if (iota.value == 0) {
    out.status = BoundStatus::Vacuous;
  } else {
    out.status = iso.value * iota.value <= g.order() ? BoundStatus::Holds : BoundStatus::Violated;
  }
  return out;
}

}  // namespace isolation
