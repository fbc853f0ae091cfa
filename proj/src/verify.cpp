#include "isolation/verify.hpp"

#include <array>
#include <charconv>

namespace isolation {

TargetPattern TargetPattern::clique(int k) {
  if (k < 1) throw Error("clique target needs k >= 1");
  return TargetPattern(Kind::KClique, k);
}

TargetPattern TargetPattern::parse(std::string_view text) {
  if (text == "cycle") return cycle();
  if (text == "dominate") return dominate();
  constexpr std::string_view prefix = "kclique:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view digits = text.substr(prefix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 1) return clique(k);
  }
  throw Error("unknown target '" + std::string(text) + "' (expected kclique:<k>, cycle or dominate)");
}

std::string TargetPattern::to_string() const {
  if (is_cycle()) return "cycle";
  return "kclique:" + std::to_string(k_);
}

Coloring::Coloring(std::vector<int> colors, int classes) : colors_(std::move(colors)), classes_(classes) {
  if (classes < 1) throw Error("a coloring needs at least one class");
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 1 || colors_[v] > classes) {
      throw Error("vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v]) + " outside 1.." +
                  std::to_string(classes));
    }
  }
}

Coloring Coloring::uniform(int n, int classes, int color) {
  return Coloring(std::vector<int>(n, color), classes);
}

VertexSet Coloring::color_class(int color) const {
  VertexSet out;
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] == color) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

std::string to_string(Verdict verdict) { return verdict == Verdict::Pass ? "PASS" : "FAIL"; }

VertexSet residual_vertices(const Graph& g, VertexSet d) { return g.vertices() - closed_neighborhood(g, d); }

InducedSubgraph residual(const Graph& g, VertexSet d) { return induced_subgraph(g, residual_vertices(g, d)); }

std::optional<std::vector<Vertex>> find_pattern(const Graph& g, const TargetPattern& t, VertexSet within) {
  if (t.is_cycle()) return find_cycle(g, within);
  if (auto clique = find_k_clique(g, t.k(), within)) return clique->to_vector();
  return std::nullopt;
}

bool has_pattern(const Graph& g, const TargetPattern& t, VertexSet within) {
  if (t.is_cycle()) return !is_forest(g, within);
  switch (t.k()) {
    case 1: return !within.empty();
    case 2: return edge_count(g, within) > 0;
    default: return find_k_clique(g, t.k(), within).has_value();
  }
}

Certificate is_isolating(const Graph& g, VertexSet d, const TargetPattern& t) {
  Certificate cert;
  cert.target = t;
  if (!has_pattern(g, t, residual_vertices(g, d))) return cert;
  if (auto found = find_pattern(g, t, residual_vertices(g, d))) {
    cert.verdict = Verdict::Fail;
    cert.witness = std::move(*found);
  }
  return cert;
}

Certificate verify_partition(const Graph& g, const Coloring& c, const TargetPattern& t) {
  if (c.size() != g.order()) throw Error("coloring size does not match graph order");
  return verify_partition_within(g, c.colors(), c.classes(), g.vertices(), t);
}

Certificate verify_partition_within(const Graph& g, const std::vector<int>& colors, int classes, VertexSet scope,
                                    const TargetPattern& t) {
  constexpr int kInline = 16;
  std::array<VertexSet, kInline> small{};
  std::vector<VertexSet> large;
  VertexSet* members = small.data();
  if (classes >= kInline) {
    large.resize(classes + 1);
    members = large.data();
  }
  for (Vertex v : scope) members[colors[v]].insert(v);
  Certificate cert;
  cert.target = t;
  for (int i = 1; i <= classes; ++i) {
    const VertexSet rest = scope - closed_neighborhood(g, members[i]);
    if (!has_pattern(g, t, rest)) continue;
    cert.verdict = Verdict::Fail;
    cert.class_index = i;
    cert.witness = *find_pattern(g, t, rest);
    return cert;
  }
  return cert;
}

bool is_dominating(const Graph& g, VertexSet d) { return closed_neighborhood(g, d) == g.vertices(); }

bool witness_is_valid(const Graph& g, VertexSet d, const Certificate& cert) {
  if (cert.passed()) return cert.witness.empty();
  const auto& w = cert.witness;
  for (Vertex x : w) {
    if (x < 0 || x >= g.order()) return false;
    if (d.contains(x)) return false;
    for (Vertex y : d) {
      if (g.has_edge(x, y)) return false;
    }
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) return false;
    }
  }
  if (cert.target.is_cycle()) {
    if (w.size() < 3) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!g.has_edge(w[i], w[(i + 1) % w.size()])) return false;
    }
    return true;
  }
  if (static_cast<int>(w.size()) != cert.target.k()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!g.has_edge(w[i], w[j])) return false;
    }
  }
  return true;
}

bool witness_is_valid(const Graph& g, const Coloring& c, const Certificate& cert) {
  if (cert.passed()) return cert.witness.empty();
  if (cert.class_index < 1 || cert.class_index > c.classes()) return false;
  return witness_is_valid(g, c.color_class(cert.class_index), cert);
}

}  // namespace isolation
