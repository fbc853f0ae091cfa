#include "isolation/partition_cycle.hpp"

#include <algorithm>
#include <utility>

#include "isolation/graph_io.hpp"

namespace isolation {

namespace {

// Canonical cycle DFS shared by the public enumerators and the classifier.
template <typename Visit>
class CycleWalker {
 public:
  CycleWalker(const Graph& g, VertexSet within, std::size_t max_count, Visit& visit)
      : g_(g), within_(within), max_count_(max_count), visit_(visit) {}

  bool run() {
    for (Vertex s : within_) {
      start_ = s;
      allowed_ = within_ - VertexSet::range(s + 1);
      path_.assign(1, s);
      if (extend(VertexSet::single(s))) return true;
    }
    return false;
  }

 private:
  bool extend(VertexSet on_path) {
    const Vertex cur = path_.back();
    const VertexSet next = g_.neighbors(cur) & within_;
    if (path_.size() >= 3 && next.contains(start_) && path_[1] < cur) {
      if (++count_ > max_count_) {
        throw SearchAbortedError("more than " + std::to_string(max_count_) + " cycles");
      }
      if (visit_(static_cast<const Cycle&>(path_))) return true;
    }
    for (Vertex w : (next & allowed_) - on_path) {
      path_.push_back(w);
      VertexSet grown = on_path;
      grown.insert(w);
      const bool stop = extend(grown);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  VertexSet within_;
  std::size_t max_count_;
  Visit& visit_;
  Vertex start_ = 0;
  VertexSet allowed_;
  Cycle path_;
  std::size_t count_ = 0;
};

template <typename Visit>
bool walk_cycles(const Graph& g, VertexSet within, Visit&& visit, std::size_t max_count = kCycleBudget) {
  CycleWalker<std::remove_reference_t<Visit>> walker(g, within, max_count, visit);
  return walker.run();
}

std::vector<Edge> attachments_of(const Graph& g, const Cycle& c, VertexSet outside) {
  std::vector<Edge> out;
  for (Vertex x : c) {
    for (Vertex y : g.neighbors(x) & outside) out.emplace_back(x, y);
  }
  return out;
}

VertexSet set_of(const Cycle& c) { return VertexSet::from_range(c); }

// Degree-2 walk around a cycle component from its least vertex toward the
// smaller neighbor.
Cycle walk_cycle_component(const Graph& g, VertexSet comp) {
  Cycle out;
  Vertex prev = -1;
  Vertex cur = comp.first();
  do {
    out.push_back(cur);
    const VertexSet nb = g.neighbors(cur) & comp;
    Vertex next = nb.first();
    if (next == prev) next = (nb - VertexSet::single(prev)).first();
    prev = cur;
    cur = next;
  } while (cur != out.front());
  return out;
}

std::optional<Cycle> find_mod4_cycle(const Graph& g, VertexSet within) {
  if (auto four = find_four_cycle(g, within)) return four;
  std::optional<Cycle> found;
  walk_cycles(g, within, [&](const Cycle& c) {
    if (c.size() % 4 != 0) return false;
    found = c;
    return true;
  });
  return found;
}

CycleStructure classify_within(const Graph& g, VertexSet scope) {
  int max_deg = 0;
  for (Vertex v : scope) max_deg = std::max(max_deg, (g.neighbors(v) & scope).size());
  if (max_deg <= 2) {
    if (edge_count(g, scope) == scope.size() - 1) return BaseCase{BaseCase::Shape::Path, {}};
    return BaseCase{BaseCase::Shape::Cycle, walk_cycle_component(g, scope)};
  }
  if (scope.size() == 4 && is_complete(g, scope)) return BaseCase{BaseCase::Shape::K4, {}};
  if (auto c = find_mod4_cycle(g, scope)) return Mod4Cycle{*c};

  std::vector<Cycle> induced;
  walk_cycles(g, scope, [&](const Cycle& c) {
    if (c.size() >= 4 && is_induced_cycle(g, c)) induced.push_back(c);
    return false;
  });
  for (const Cycle& c : induced) {
    auto att = attachments_of(g, c, scope - set_of(c));
    if (att.size() <= 2) return SparselyAttachedInducedCycle{c, std::move(att)};
  }
  for (const Cycle& c : induced) {
    if (c.size() >= 9 && c.size() % 4 == 1) return Mod4Plus1InducedCycle{c, attachments_of(g, c, scope - set_of(c))};
  }
  for (const Cycle& c : induced) {
    if (c.size() == 5) return InducedC5{c, attachments_of(g, c, scope - set_of(c))};
  }

  const std::vector<VertexSet> triangles = all_k_cliques(g, 3, scope);
  for (VertexSet h : triangles) {
    const VertexSet rest = scope - h;
    if (!rest.empty() && is_connected(g, rest)) return NonSeparatingTriangle{h};
  }
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      if (triangles[i].intersects(triangles[j])) continue;
      for (Vertex a : triangles[i]) {
        const VertexSet hit = g.neighbors(a) & triangles[j];
        if (!hit.empty()) return DoubleTriangle{triangles[i], triangles[j], Edge{a, hit.first()}};
      }
    }
  }
  for (VertexSet h : triangles) {
    for (Vertex u : scope - h) {
      const VertexSet hit = g.neighbors(u) & h;
      if (!hit.empty()) return TrianglePlus{h, u, hit.first()};
    }
  }
  return ProofContradiction{};
}

// Position of v in c, or -1.
int index_of(const Cycle& c, Vertex v) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == v) return static_cast<int>(i);
  }
  return -1;
}

// The cycle read from position `from`, stepping by dir (+1 or -1).
Cycle rotate(const Cycle& c, int from, int dir) {
  const int len = static_cast<int>(c.size());
  Cycle out;
  for (int i = 0; i < len; ++i) out.push_back(c[((from + dir * i) % len + len) % len]);
  return out;
}

class CyclePartitioner {
 public:
  CyclePartitioner(const Graph& g, CycleCaseTally* tally)
      : g_(g), target_(TargetPattern::cycle()), colors_(g.order(), 1), tally_(tally) {}

  Coloring run() {
    color(g_.vertices());
    return Coloring(colors_, 4);
  }

 private:
  [[noreturn]] void gap(const std::string& stage, const std::string& detail, VertexSet scope,
                        Certificate failure = {}) const {
    ProofGapReport report;
    report.graph6 = describe_graph(g_);
    report.stage = stage;
    report.detail = detail;
    report.scope = scope;
    report.coloring = colors_;
    report.failure = std::move(failure);
    throw ProofGapError(std::move(report));
  }

  Certificate check(VertexSet scope) const { return verify_partition_within(g_, colors_, 4, scope, target_); }

  void verify(const std::string& stage, VertexSet scope) const {
    Certificate cert = check(scope);
    if (!cert.passed()) gap(stage, "class " + std::to_string(cert.class_index) + " leaves a cycle", scope, cert);
  }

  void paint(const Cycle& walk, const std::vector<int>& pattern) {
    for (std::size_t i = 0; i < walk.size(); ++i) colors_[walk[i]] = pattern[i];
  }

  void paint_distinct(VertexSet set, int skip) {
    int c = 1;
    for (Vertex x : set) {
      if (c == skip) ++c;
      colors_[x] = c++;
    }
  }

  void color_components(const std::string& stage, VertexSet rest) {
    for (VertexSet comp : components(g_, rest)) {
      if (comp.size() == 3 && is_complete(g_, comp)) gap(stage, "a component of the remainder is C_3", comp);
      color(comp);
    }
  }

  // Pulls the triangle components of scope - core into S, colors each with
  // [4] minus the color of its first attachment in core, and colors the rest.
  void absorb_triangles(const std::string& stage, VertexSet scope, VertexSet core) {
    VertexSet rest;
    for (VertexSet comp : components(g_, scope - core)) {
      if (comp.size() == 3 && is_complete(g_, comp)) {
        Vertex att = -1;
        for (Vertex x : core) {
          if (g_.neighbors(x).intersects(comp)) {
            att = x;
            break;
          }
        }
        if (att < 0) gap(stage, "triangle component not attached", comp);
        paint_distinct(comp, colors_[att]);
      } else {
        rest |= comp;
      }
    }
    color_components(stage, rest);
  }

  void color(VertexSet scope) {
    if (scope.empty()) return;
    if (scope.size() == 3 && is_complete(g_, scope)) gap("recursion", "reached C_3", scope);
    const CycleStructure s = classify_within(g_, scope);
    if (tally_) ++(*tally_)[s.index()];
    std::visit([&](const auto& c) { apply(scope, c); }, s);
  }

  void apply(VertexSet scope, const BaseCase& c) {
    switch (c.shape) {
      case BaseCase::Shape::Path:
        for (Vertex v : scope) colors_[v] = 1;
        return;
      case BaseCase::Shape::Cycle:
        paint(c.cycle, repeating_pattern(static_cast<int>(c.cycle.size())));
        break;
      case BaseCase::Shape::K4:
        paint_distinct(scope, 0);
        break;
    }
    verify("base case", scope);
  }

  void apply(VertexSet scope, const Mod4Cycle& c) {
    paint(c.cycle, repeating_pattern(static_cast<int>(c.cycle.size())));
    absorb_triangles("cycle of length 0 mod 4", scope, set_of(c.cycle));
    verify("cycle of length 0 mod 4", scope);
  }

  void apply(VertexSet scope, const SparselyAttachedInducedCycle& c) {
    const std::string stage = "sparsely attached induced cycle";
    const std::vector<Edge> att = attachments_of(g_, c.cycle, scope - set_of(c.cycle));
    if (att.size() != 2 || att[0].second != att[1].second) {
      gap(stage, "expected two edges to one outside vertex", scope);
    }
    const int len = static_cast<int>(c.cycle.size());
    const int a = index_of(c.cycle, att[0].first);
    const int b = index_of(c.cycle, att[1].first);
    int dir = 0;
    if ((a + 1) % len == b) dir = -1;  // walk from a away from b
    if ((b + 1) % len == a) dir = 1;
    if (dir == 0) gap(stage, "attachment vertices are not consecutive", scope);
    std::vector<int> tail;
    if (len % 4 == 1) {
      tail = {3};
    } else if (len % 4 == 2) {
      tail = {3, 4};
    } else {
      gap(stage, "cycle length " + std::to_string(len) + " is 3 mod 4", scope);
    }
    color_components(stage, scope - set_of(c.cycle));
    paint(rotate(c.cycle, a, dir), repeating_pattern(len - static_cast<int>(tail.size()), tail));
    verify(stage, scope);
  }

  struct AttachedPair {
    Vertex outside;
    VertexSet on_cycle;
  };

  // Outside neighbors of an induced cycle, each expected to touch exactly two
  // consecutive cycle vertices; empty on any other shape.
  std::vector<AttachedPair> attached_pairs(const Cycle& cycle, VertexSet scope) const {
    const VertexSet on = set_of(cycle);
    std::vector<AttachedPair> out;
    int edges = 0;
    for (Vertex x : closed_neighborhood(g_, on) & scope) {
      if (on.contains(x)) continue;
      const VertexSet hit = g_.neighbors(x) & on;
      edges += hit.size();
      out.push_back({x, hit});
    }
    const int len = static_cast<int>(cycle.size());
    if (out.size() != 2 || edges != 4) return {};
    for (const AttachedPair& p : out) {
      if (p.on_cycle.size() != 2) return {};
      const int i = index_of(cycle, p.on_cycle.first());
      const int j = index_of(cycle, (p.on_cycle - VertexSet::single(p.on_cycle.first())).first());
      if ((i + 1) % len != j && (j + 1) % len != i) return {};
    }
    if (out[0].on_cycle.intersects(out[1].on_cycle)) return {};
    return out;
  }

  void apply(VertexSet scope, const Mod4Plus1InducedCycle& c) {
    const std::string stage = "induced cycle of length 1 mod 4";
    const std::vector<AttachedPair> pairs = attached_pairs(c.cycle, scope);
    if (pairs.empty()) gap(stage, "attachment pattern is not two vertices on disjoint consecutive pairs", scope);
    const VertexSet on = set_of(c.cycle);
    color_components(stage, scope - on);
    const int len = static_cast<int>(c.cycle.size());
    // Labelings in fixed order: which pair is first, then which end of it is u_1^1.
    for (int first = 0; first < 2; ++first) {
      const VertexSet p1 = pairs[first].on_cycle;
      const VertexSet p2 = pairs[1 - first].on_cycle;
      for (Vertex u11 : p1) {
        const Vertex u21 = (p1 - VertexSet::single(u11)).first();
        const int i11 = index_of(c.cycle, u11);
        const int i21 = index_of(c.cycle, u21);
        const int dir = (i11 + 1) % len == i21 ? 1 : -1;
        // u_2^1 first, ending at u_1^1.
        const Cycle walk = rotate(c.cycle, i21, dir);
        std::vector<int> pattern = repeating_pattern(len - 1, {3});
        // u_1^1, u_2^1, u_1^2, u_2^2 consecutive: walk[1], walk[2] are the second pair.
        if (p2.contains(walk[1]) && p2.contains(walk[2])) std::swap(pattern[2], pattern[3]);
        paint(walk, pattern);
        if (check(scope).passed()) return;
      }
    }
    gap(stage, "no labeling of the attachment pairs verifies", scope, check(scope));
  }

  void apply(VertexSet scope, const InducedC5& c) {
    const std::string stage = "induced C_5";
    const std::vector<AttachedPair> pairs = attached_pairs(c.cycle, scope);
    if (pairs.empty()) gap(stage, "attachment pattern is not two vertices on disjoint consecutive pairs", scope);
    const VertexSet on = set_of(c.cycle);
    const Vertex u3 = (on - pairs[0].on_cycle - pairs[1].on_cycle).first();
    const int i3 = index_of(c.cycle, u3);
    Certificate last;
    for (int dir : {1, -1}) {
      const Cycle w = rotate(c.cycle, i3, dir);  // u3, u11, u21, u12, u22
      auto outside_of = [&](Vertex a) { return pairs[0].on_cycle.contains(a) ? pairs[0].outside : pairs[1].outside; };
      const Vertex v1 = outside_of(w[1]);
      const Vertex v2 = outside_of(w[3]);
      const Cycle seven{w[1], v1, w[2], w[3], v2, w[4], w[0]};
      paint(seven, {1, 2, 3, 4, 1, 2, 4});
      absorb_triangles(stage, scope, set_of(seven));
      last = check(scope);
      if (last.passed()) return;
    }
    gap(stage, "neither orientation of the 7-cycle verifies", scope, last);
  }

  // c(u)=4, c(v)=3, the other two vertices of each triangle 1 and 2.
  void six_vertex_coloring(VertexSet t1, VertexSet t2, Vertex u, Vertex v) {
    paint_distinct(t1 - VertexSet::single(u), 3);
    paint_distinct(t2 - VertexSet::single(v), 3);
    colors_[u] = 4;
    colors_[v] = 3;
  }

  void apply(VertexSet scope, const NonSeparatingTriangle& c) {
    const std::string stage = "non-separating triangle";
    const VertexSet rest = scope - c.triangle;
    Vertex u = -1;
    Vertex v = -1;
    for (Vertex a : c.triangle) {
      const VertexSet hit = g_.neighbors(a) & rest;
      if (!hit.empty()) {
        u = a;
        v = hit.first();
        break;
      }
    }
    if (rest.size() == 3 && is_complete(g_, rest)) {
      six_vertex_coloring(c.triangle, rest, u, v);
      verify(stage + ", remainder C_3", scope);
      return;
    }
    color(rest);
    const int was = colors_[v];
    for (Vertex x : rest) {
      if (colors_[x] == was) {
        colors_[x] = 4;
      } else if (colors_[x] == 4) {
        colors_[x] = was;
      }
    }
    paint_distinct(c.triangle, 4);
    verify(stage, scope);
  }

  void apply(VertexSet scope, const DoubleTriangle& c) {
    const std::string stage = "double triangle";
    color_components(stage, scope - c.first - c.second);
    six_vertex_coloring(c.first, c.second, c.bridge.first, c.bridge.second);
    verify(stage, scope);
  }

  void apply(VertexSet scope, const TrianglePlus& c) {
    const std::string stage = "triangle with pendant";
    color_components(stage, scope - c.triangle - VertexSet::single(c.pendant));
    colors_[c.pendant] = 1;
    colors_[c.attachment] = 2;
    int next = 3;
    for (Vertex x : c.triangle - VertexSet::single(c.attachment)) colors_[x] = next++;
    verify(stage, scope);
  }

  void apply(VertexSet scope, const ProofContradiction&) { gap("classification", "no case applies", scope); }

  const Graph& g_;
  TargetPattern target_;
  std::vector<int> colors_;
  CycleCaseTally* tally_;
};

}  // namespace

bool for_each_cycle(const Graph& g, VertexSet within, const std::function<bool(const Cycle&)>& visit,
                    std::size_t max_count) {
  return walk_cycles(g, within, visit, max_count);
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_count) {
  return enumerate_cycles(g, g.vertices(), max_count);
}

std::vector<Cycle> enumerate_cycles(const Graph& g, VertexSet within, std::size_t max_count) {
  std::vector<Cycle> out;
  walk_cycles(
      g, within,
      [&](const Cycle& c) {
        out.push_back(c);
        return false;
      },
      max_count);
  return out;
}

std::optional<Cycle> find_four_cycle(const Graph& g, VertexSet within) {
  for (Vertex a : within) {
    const VertexSet above = within - VertexSet::range(a + 1);
    const VertexSet around = g.neighbors(a) & above;
    if (around.size() < 2) continue;
    for (Vertex b : above) {
      const VertexSet common = g.neighbors(b) & around;
      if (common.size() < 2) continue;
      const Vertex x = common.first();
      const Vertex y = (common - VertexSet::single(x)).first();
      return Cycle{a, x, b, y};
    }
  }
  return std::nullopt;
}

bool is_induced_cycle(const Graph& g, const Cycle& c) {
  const VertexSet on = set_of(c);
  if (c.size() < 3 || on.size() != static_cast<int>(c.size())) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  }
  return edge_count(g, on) == static_cast<int>(c.size());
}

std::string structure_name(const CycleStructure& s) {
  static const char* const names[] = {"base case",           "cycle of length 0 mod 4", "sparsely attached induced cycle",
                                      "induced cycle of length 1 mod 4", "induced C_5",  "non-separating triangle",
                                      "double triangle",     "triangle with pendant",   "no case applies"};
  return names[s.index()];
}

void check_cycle_partition_hypotheses(const Graph& g) {
  using H = PreconditionError::Hypothesis;
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError(H::Disconnected, "input graph is not connected");
  if (g.max_degree() > 3) {
    throw PreconditionError(H::DegreeTooLarge, "maximum degree " + std::to_string(g.max_degree()) + " exceeds 3");
  }
  if (!is_claw_free(g)) throw PreconditionError(H::NotClawFree, "input graph contains a claw");
  if (g.order() == 3 && is_complete(g, g.vertices())) {
    throw PreconditionError(H::ExcludedGraph, "input is C_3, the excluded graph");
  }
}

CycleStructure classify_cycle_structure(const Graph& g) {
  check_cycle_partition_hypotheses(g);
  return classify_within(g, g.vertices());
}

Coloring partition_cycle(const Graph& g, CycleCaseTally* tally) {
  check_cycle_partition_hypotheses(g);
  return CyclePartitioner(g, tally).run();
}

std::vector<int> repeating_pattern(int length, const std::vector<int>& tail) {
  std::vector<int> out;
  out.reserve(length + tail.size());
  for (int i = 0; i < length; ++i) out.push_back(i % 4 + 1);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace isolation
