#include "alliance/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "alliance/errors.hpp"

namespace alliance {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices)
    throw limit_error("graph has " + std::to_string(n) + " vertices, cap is " +
                      std::to_string(kMaxVertices));
  adj_.assign(n, 0);
  degree_.assign(n, 0);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    ++degree_[u];
    ++degree_[v];
  }
}

int Graph::max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }

int Graph::min_degree() const { return *std::min_element(degree_.begin(), degree_.end()); }

bool Graph::is_connected() const { return is_connected_subset(*this, vertices()); }

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet rest = vertices();
  while (!rest.empty()) {
    VertexSet comp = component_of(*this, rest, rest.min());
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  VertexSet nb;
  for (int v : s) nb = nb | g.adjacent_to(v);
  return nb - s;
}

VertexSet component_of(const Graph& g, VertexSet s, int start) {
  VertexSet comp = VertexSet::single(start) & s;
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next = next | (g.adjacent_to(v) & s);
    frontier = next - comp;
    comp = comp | frontier;
  }
  return comp;
}

bool is_connected_subset(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  return component_of(g, s, s.min()) == s;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), edges);
}

Graph delete_edges(const Graph& g, std::span<const Edge> to_remove) {
  std::vector<Edge> keep;
  auto normalized = [](Edge e) { return Edge(std::min(e.first, e.second), std::max(e.first, e.second)); };
  std::vector<Edge> removed;
  removed.reserve(to_remove.size());
  for (Edge e : to_remove) {
    Edge norm = normalized(e);
    if (norm.first < 0 || norm.second >= g.n() || norm.first == norm.second ||
        !g.has_edge(norm.first, norm.second))
      throw std::invalid_argument("edge (" + std::to_string(e.first) + ", " +
                                  std::to_string(e.second) + ") is not in the graph");
    removed.push_back(norm);
  }
  std::sort(removed.begin(), removed.end());
  for (Edge e : g.edges())
    if (!std::binary_search(removed.begin(), removed.end(), e)) keep.push_back(e);
  return Graph(g.n(), keep);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph of empty set");
  std::vector<int> label(g.n(), -1);
  int next = 0;
  for (int v : s) label[v] = next++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) edges.emplace_back(label[u], label[v]);
  return Graph(s.size(), edges);
}

Graph permute_vertices(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("permutation length mismatch");
  VertexSet seen;
  for (int v : perm) {
    if (v < 0 || v >= g.n() || seen.contains(v))
      throw std::invalid_argument("not a permutation");
    seen = seen.with(v);
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), edges);
}

}  // namespace alliance
