#include "isolation/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace isolation {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
    line.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  line = trim_line_end(line);
  if (line.empty()) throw ParseError("empty graph6 record", base);

  const auto size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte == 126) throw ParseError("graph6 orders above 62 are not supported", base);
  if (size_byte < 63 || size_byte > 126) throw ParseError("malformed graph6 size byte", base);
  const int n = size_byte - 63;

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", base + i);
  }
  if (line.size() < 1 + byte_count) throw ParseError("truncated graph6 record", base + line.size());
  if (line.size() > 1 + byte_count) throw ParseError("trailing bytes after graph6 record", base + 1 + byte_count);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const int value = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (byte_count > 0) {
    const int last = static_cast<unsigned char>(line[byte_count]) - 63;
    const int padding = static_cast<int>(6 * byte_count - bit_count);
    if ((last & ((1 << padding) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", base + byte_count);
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw Error("graph6 output limited to order 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace {

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("unparsable token '" + std::string(token) + "'", line_no);
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(trim(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size()) throw ParseError("missing vertex count", 1);

  const auto header = split_ws(lines[i]);
  if (header.size() != 1) throw ParseError("first line must hold only the vertex count", i + 1);
  const int n = parse_int(header[0], i + 1);
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", i + 1);

  std::vector<Edge> edges;
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto tokens = split_ws(lines[i]);
    if (tokens.size() != 2) throw ParseError("expected 'u v'", i + 1);
    const int u = parse_int(tokens[0], i + 1);
    const int v = parse_int(tokens[1], i + 1);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("endpoint out of range", i + 1);
    if (u == v) throw ParseError("self-loop", i + 1);
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string describe_graph(const Graph& g) {
  if (g.order() <= kMaxGraph6Order) return emit_graph6(g);
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

std::vector<Graph> parse_graph_text(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && lines[first].empty()) ++first;
  if (first == lines.size()) return {};

  const auto head = split_ws(lines[first]);
  bool bare_integer = head.size() == 1 && !head[0].empty();
  for (char c : head.empty() ? std::string_view{} : head[0]) {
    if (c < '0' || c > '9') bare_integer = false;
  }
  if (bare_integer) return {parse_edge_list(text)};

  std::vector<Graph> out;
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      out.push_back(parse_graph6(lines[i]));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(i + 1) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str());
}

}  // namespace isolation
