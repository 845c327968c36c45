#pragma once

#include <stdexcept>
#include <string>

#include "tpf/graph.hpp"

namespace tpf {

// Thrown on malformed input; `offset` is the byte position of the first
// offending character in the input text.
struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"),
        offset(off) {}
};

// graph6 (undirected, no header, n <= 62 or the 4-byte long form).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

// {"n": int, "edges": [[u,v], ...]}
std::string to_edge_json(const Graph& g);
Graph from_edge_json(const std::string& text);

// Dispatch on leading '{' (JSON) vs anything else (graph6). Trims whitespace.
Graph parse_graph(const std::string& text);

// Read a whole file or (path == "-") stdin.
std::string slurp(const std::string& path);

}  // namespace tpf
