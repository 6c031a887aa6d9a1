#include "alliance/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "alliance/errors.hpp"

namespace alliance {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  auto last = line.find_last_not_of(" \t\r");
  return std::string(line.substr(first, last - first + 1));
}

bool parse_two_ints(const std::string& s, long& a, long& b) {
  std::istringstream in(s);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text, bool strict) {
  std::istringstream in{std::string(text)};
  std::string raw;
  long n = -1, m = -1;
  int line_no = 0;
  std::vector<Edge> edges;
  long edge_lines = 0;
  // Tracks already-seen normalized edges for duplicate detection.
  std::vector<std::pair<int, int>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = clean_line(raw);
    if (line.empty()) continue;
    long a, b;
    if (!parse_two_ints(line, a, b))
      throw parse_error("line " + std::to_string(line_no) + ": expected two integers, got \"" +
                        line + "\"");
    if (n < 0) {
      n = a;
      m = b;
      if (n < 1) throw parse_error("header: vertex count must be at least 1");
      if (n > kMaxVertices)
        throw limit_error("header: " + std::to_string(n) + " vertices exceeds cap of " +
                          std::to_string(kMaxVertices));
      if (m < 0) throw parse_error("header: negative edge count");
      continue;
    }
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw parse_error("line " + std::to_string(line_no) + ": vertex out of range [0, " +
                        std::to_string(n - 1) + "]");
    if (a == b)
      throw parse_error("line " + std::to_string(line_no) + ": self-loop at vertex " +
                        std::to_string(a));
    ++edge_lines;
    std::pair<int, int> e{std::min<long>(a, b), std::max<long>(a, b)};
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) {
      if (strict)
        throw parse_error("line " + std::to_string(line_no) + ": duplicate edge " +
                          std::to_string(e.first) + " " + std::to_string(e.second));
      std::fprintf(stderr, "note: dropping duplicate edge %d %d\n", e.first, e.second);
      continue;
    }
    seen.push_back(e);
    edges.emplace_back(e.first, e.second);
  }
  if (n < 0) throw parse_error("empty input, expected \"n m\" header");
  if (edge_lines != m)
    throw parse_error("header announced " + std::to_string(m) + " edges, found " +
                      std::to_string(edge_lines));
  return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw parse_error("graph6: empty input");
  auto byte = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw parse_error("graph6: byte out of printable range at position " + std::to_string(i));
    return c - 63;
  };
  int first = byte(0);
  if (first == 63)
    throw limit_error("graph6: multi-byte vertex counts (n > " +
                      std::to_string(kGraph6MaxVertices) + ") not supported");
  int n = first;
  if (n < 1) throw parse_error("graph6: vertex count must be at least 1");
  std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t body = (bits_needed + 5) / 6;
  if (text.size() != 1 + body)
    throw parse_error("graph6: expected " + std::to_string(1 + body) + " bytes for n = " +
                      std::to_string(n) + ", got " + std::to_string(text.size()));
  std::vector<Edge> edges;
  std::size_t bit = 0;
  // Bits run through the upper triangle column by column: (0,1), (0,2), (1,2), ...
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int chunk = byte(1 + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  // Padding bits past the triangle must be zero.
  for (; bit < body * 6; ++bit) {
    int chunk = byte(1 + bit / 6);
    if ((chunk >> (5 - bit % 6)) & 1) throw parse_error("graph6: nonzero padding bit");
  }
  return Graph(n, edges);
}

}  // namespace alliance
