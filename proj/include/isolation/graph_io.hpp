#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

/// Malformed input; `offset` is the byte offset (graph6) or the 1-based line
/// number (edge lists) where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest order representable with the one-byte graph6 size field.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// CR/LF are stripped; orders above 62 are rejected.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "n" on the first line, then one "u v" pair per line. Blank lines are skipped.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// graph6 when it fits, otherwise "n:u-v,u-v,...". For reports.
std::string describe_graph(const Graph& g);

/// Reads every graph of a file: graph6 records one per line, or a single
/// edge list when the first non-blank line is a bare integer.
std::vector<Graph> read_graph_file(const std::string& path);
/// Same, from in-memory text.
std::vector<Graph> parse_graph_text(std::string_view text);

}  // namespace isolation
