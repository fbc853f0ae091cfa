#include "isolation/enumerate.hpp"

#include <bit>

namespace isolation {

namespace {

bool claw_at(const std::array<VertexSet, kMaxVertices>& adj, Vertex v) {
  const VertexSet nbrs = adj[v];
  if (nbrs.size() < 3) return false;
  for (Vertex a : nbrs) {
    VertexSet after_a = nbrs - VertexSet::range(a + 1) - adj[a];
    for (Vertex b : after_a) {
      if (!(after_a - VertexSet::range(b + 1) - adj[b]).empty()) return true;
    }
  }
  return false;
}

}  // namespace

LabeledGraphStream::LabeledGraphStream(int n, EnumerationFilter filter) : n_(n), filter_(filter) {
  const bool degree_bounded = filter.max_degree >= 0 && filter.max_degree <= kMaxFilteredEnumerationDegree;
  const int limit = degree_bounded ? kMaxFilteredEnumerationOrder : kMaxEnumerationOrder;
  if (n < 1 || n > limit) {
    throw Error("enumeration order " + std::to_string(n) + " outside supported range 1.." + std::to_string(limit) +
                (degree_bounded ? "" : " (orders up to 10 need a max-degree filter <= 4)"));
  }
}

void LabeledGraphStream::apply(int v, std::uint64_t choice) {
  adj_[v] = VertexSet(choice);
  for (Vertex u : VertexSet(choice)) adj_[u].insert(v);
}

void LabeledGraphStream::retract(int v) {
  for (Vertex u : adj_[v]) adj_[u].erase(v);
  adj_[v] = VertexSet{};
}

bool LabeledGraphStream::prefix_ok(int v) const {
  const VertexSet prefix = VertexSet::range(v + 1);
  if (filter_.claw_free) {
    // Only claws through v are new; their centers are v or a neighbor of v.
    if (claw_at(adj_, v)) return false;
    for (Vertex u : adj_[v]) {
      if (claw_at(adj_, u)) return false;
    }
  }
  if (filter_.connected && filter_.max_degree >= 0 && v + 1 < n_) {
    // A component whose vertices are all saturated can never reach later vertices.
    VertexSet rest = prefix;
    while (!rest.empty()) {
      VertexSet comp = VertexSet::single(rest.first());
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        VertexSet next;
        for (Vertex x : frontier) next |= adj_[x];
        next -= comp;
        comp |= next;
        frontier = next;
      }
      bool saturated = true;
      for (Vertex x : comp) {
        if (adj_[x].size() < filter_.max_degree) {
          saturated = false;
          break;
        }
      }
      if (saturated) return false;
      rest -= comp;
    }
  }
  return true;
}

// Moves level v to its next admissible neighbor choice; false once exhausted.
bool LabeledGraphStream::advance(int v) {
  Level& level = levels_[v];
  if (level.fresh) {
    level.fresh = false;
    std::uint64_t available = (std::uint64_t{1} << v) - 1;
    if (filter_.max_degree >= 0) {
      for (Vertex u = 0; u < v; ++u) {
        if (adj_[u].size() >= filter_.max_degree) available &= ~(std::uint64_t{1} << u);
      }
    }
    level.available = available;
    level.choice = 0;
  } else {
    retract(v);
    if (level.choice == level.available) return false;
    level.choice = ((level.choice | ~level.available) + 1) & level.available;
  }
  while (true) {
    if (filter_.max_degree < 0 || std::popcount(level.choice) <= filter_.max_degree) {
      apply(v, level.choice);
      if (prefix_ok(v)) return true;
      retract(v);
    }
    if (level.choice == level.available) return false;
    level.choice = ((level.choice | ~level.available) + 1) & level.available;
  }
}

std::optional<Graph> LabeledGraphStream::next() {
  if (done_) return std::nullopt;
  // depth_ is the number of levels currently holding a choice.
  if (depth_ == n_) --depth_;
  else levels_[depth_].fresh = true;
  while (true) {
    if (advance(depth_)) {
      if (depth_ + 1 == n_) {
        depth_ = n_;
        Graph g = Graph::adopt(n_, adj_);
        if (filter_.connected && !is_connected(g)) {
          --depth_;
          continue;
        }
        return g;
      }
      ++depth_;
      levels_[depth_].fresh = true;
    } else {
      if (depth_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      --depth_;
    }
  }
}

}  // namespace isolation
