#include "treecodes/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace treecodes {

namespace {

// Strips comments/blanks and returns the remaining tokens of each line.
std::vector<std::vector<long long>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok +
                         "'");
      }
    }
    if (row.empty()) continue;
    if (row.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected two integers, got " +
                       std::to_string(row.size()));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Graph from_edge_list(const std::string& text) {
  auto rows = tokenize_lines(text);
  if (rows.empty()) throw ParseError("no data lines in edge list");

  size_t first_edge = 0;
  long long n;
  // The first row counts as a header only when reading it as (order, edge
  // count) is fully consistent: the edge count matches the number of
  // remaining rows and every remaining endpoint fits under the order.
  // Otherwise it is an ordinary edge.
  long long max_rest = -1;
  for (size_t i = 1; i < rows.size(); ++i) max_rest = std::max({max_rest, rows[i][0], rows[i][1]});
  if (rows[0][0] >= 1 && rows[0][1] == static_cast<long long>(rows.size()) - 1 &&
      rows[0][0] > max_rest) {
    n = rows[0][0];
    first_edge = 1;
  } else {
    long long max_id = -1;
    for (const auto& r : rows) max_id = std::max({max_id, r[0], r[1]});
    n = max_id + 1;
  }
  if (n < 1 || n > VertexSet::kMaxVertices)
    throw InvalidGraph("graph order out of range: " + std::to_string(n));

  Graph g(static_cast<int>(n));
  for (size_t i = first_edge; i < rows.size(); ++i) {
    long long u = rows[i][0], v = rows[i][1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidGraph("edge endpoint out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") with n=" + std::to_string(n));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  // Upper triangle in column order: for each column j, rows i < j.
  std::vector<bool> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  while (bits.size() % 6) bits.push_back(false);
  for (size_t k = 0; k < bits.size(); k += 6) {
    int val = 0;
    for (int b = 0; b < 6; ++b) val = (val << 1) | (bits[k + b] ? 1 : 0);
    out += static_cast<char>(val + 63);
  }
  return out;
}

Graph graph6_decode(const std::string& text) {
  std::string s = text;
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw ParseError("empty graph6 string");
  s.erase(0, start);

  auto need = [&](size_t i) {
    if (i >= s.size()) throw ParseError("truncated graph6 string");
    int c = static_cast<unsigned char>(s[i]) - 63;
    if (c < 0 || c > 63) throw ParseError("invalid graph6 character at position " + std::to_string(i));
    return c;
  };

  size_t pos = 0;
  long long n;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~') throw ParseError("graph6 orders beyond 258047 unsupported");
    n = (static_cast<long long>(need(1)) << 12) | (need(2) << 6) | need(3);
    pos = 4;
  } else {
    n = need(0);
    pos = 1;
  }
  if (n < 1 || n > VertexSet::kMaxVertices)
    throw InvalidGraph("graph order out of range: " + std::to_string(n));

  Graph g(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() - pos < nbytes) throw ParseError("truncated graph6 string");
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = need(pos + static_cast<size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::string to_dot(const Graph& g, const std::optional<VertexSet>& code) {
  std::string out = "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (code && code->contains(v)) out += " [style=filled, fillcolor=gray80]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace treecodes
