#include "tpf/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace tpf {

namespace {

// Append `width` bits of x, most significant first.
void push_bits(std::vector<bool>& bits, uint64_t x, int width) {
  for (int i = width - 1; i >= 0; i--) bits.push_back((x >> i) & 1);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  if (g.n > 258047)
    throw std::invalid_argument("to_graph6: graph too large");
  std::vector<bool> bits;
  std::string out;
  if (g.n <= 62) {
    out.push_back((char)(g.n + 63));
  } else {
    out.push_back(126);
    push_bits(bits, (uint64_t)g.n, 18);
    for (size_t i = 0; i < bits.size(); i += 6) {
      int v = 0;
      for (size_t j = i; j < i + 6; j++) v = v * 2 + (bits[j] ? 1 : 0);
      out.push_back((char)(v + 63));
    }
    bits.clear();
  }
  // Upper triangle, column by column: bit (i,j) for i < j, j ascending.
  for (int j = 1; j < g.n; j++)
    for (int i = 0; i < j; i++) bits.push_back(g.adjacent(i, j));
  while (bits.size() % 6) bits.push_back(false);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (size_t j = i; j < i + 6; j++) v = v * 2 + (bits[j] ? 1 : 0);
    out.push_back((char)(v + 63));
  }
  return out;
}

Graph from_graph6(const std::string& text) {
  // Strip surrounding whitespace but keep offsets into the original text.
  size_t end = text.size();
  while (end > 0 && (text[end - 1] == '\n' || text[end - 1] == '\r' ||
                     text[end - 1] == ' ' || text[end - 1] == '\t'))
    end--;
  size_t pos = 0;
  while (pos < end && (text[pos] == ' ' || text[pos] == '\t')) pos++;
  if (pos == end) throw ParseError("graph6: empty input", pos);

  auto need = [&](size_t k, const char* what) {
    if (pos + k > end)
      throw ParseError(std::string("graph6: truncated ") + what, end);
  };
  auto byte_val = [&](size_t at) -> int {
    unsigned char c = (unsigned char)text[at];
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte out of printable range", at);
    return c - 63;
  };

  long long n;
  if ((unsigned char)text[pos] == 126) {
    need(2, "size field");
    if ((unsigned char)text[pos + 1] == 126)
      throw ParseError("graph6: 36-bit sizes not supported", pos + 1);
    need(4, "size field");
    n = 0;
    for (int i = 1; i <= 3; i++) n = n * 64 + byte_val(pos + i);
    pos += 4;
  } else {
    n = byte_val(pos);
    pos += 1;
  }
  long long nbits = n * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if ((long long)(end - pos) != nbytes)
    throw ParseError("graph6: adjacency field has wrong length for n=" +
                         std::to_string(n),
                     pos + std::min<long long>(end - pos, nbytes));

  std::vector<Edge> edges;
  long long bit = 0;
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++, bit++) {
      int v = byte_val(pos + bit / 6);
      if ((v >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  // Padding bits must be zero.
  for (long long b = nbits; b < nbytes * 6; b++)
    if ((byte_val(pos + b / 6) >> (5 - b % 6)) & 1)
      throw ParseError("graph6: nonzero padding bit", pos + b / 6);
  return Graph((int)n, edges);
}

std::string to_edge_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edge_list) j["edges"].push_back({u, v});
  return j.dump();
}

Graph from_edge_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("json: expected object with \"n\" and \"edges\"", 0);
  if (!j["n"].is_number_integer())
    throw ParseError("json: \"n\" must be an integer", 0);
  int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("json: each edge must be a pair of integers", 0);
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("json: ") + e.what(), 0);
  }
}

Graph parse_graph(const std::string& text) {
  size_t pos = 0;
  while (pos < text.size() && isspace((unsigned char)text[pos])) pos++;
  if (pos == text.size()) throw ParseError("empty input", pos);
  if (text[pos] == '{') return from_edge_json(text);
  return from_graph6(text);
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace tpf
