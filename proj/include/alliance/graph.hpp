#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace alliance {

// Vertex sets are 64-bit masks, which caps graphs at 64 vertices.
inline constexpr int kMaxVertices = 64;

// Subset of {0, ..., 63} backed by a single word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  static constexpr VertexSet from_mask(std::uint64_t bits) { return VertexSet(bits); }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  // The full set {0, ..., n-1}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet of(std::initializer_list<int> vs) {
    std::uint64_t bits = 0;
    for (int v : vs) bits |= std::uint64_t{1} << v;
    return VertexSet(bits);
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
  // Lowest-numbered member; the set must be nonempty.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr VertexSet complement_in(int n) const {
    return VertexSet(full(n).bits_ & ~bits_);
  }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  // Iterates members in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with word-mask adjacency rows.
// Edges are normalized to u < v, sorted, and deduplicated on construction.
class Graph {
 public:
  // Throws std::invalid_argument on n < 1, out-of-range endpoints or
  // self-loops, and limit_error on n > kMaxVertices.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool has_edge(int u, int v) const { return adjacent_to(u).contains(v); }
  VertexSet adjacent_to(int v) const { return VertexSet::from_mask(adj_[v]); }
  int degree(int v) const { return degree_[v]; }
  int max_degree() const;
  int min_degree() const;

  bool is_connected() const;
  // Connected components as vertex sets, ordered by lowest member.
  std::vector<VertexSet> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  std::vector<Edge> edges_;
};

// Degree of v inside s, i.e. |N(v) ∩ s|. Ignores whether v itself is in s.
inline int degree_in_set(const Graph& g, int v, VertexSet s) {
  return (g.adjacent_to(v) & s).size();
}

// Neighborhood of the whole set: union of N(v) over v in s, minus s itself.
VertexSet open_neighborhood(const Graph& g, VertexSet s);

// Whether the subgraph induced by s is connected. Empty sets count as not
// connected; singletons are connected.
bool is_connected_subset(const Graph& g, VertexSet s);

// Connected component of `start` inside the induced subgraph on s.
VertexSet component_of(const Graph& g, VertexSet s, int start);

Graph disjoint_union(const Graph& a, const Graph& b);
// Copy of g without the listed edges (order-insensitive); every listed edge
// must be present.
Graph delete_edges(const Graph& g, std::span<const Edge> to_remove);
// Subgraph induced by s, vertices relabeled to 0..|s|-1 preserving order.
Graph induced_subgraph(const Graph& g, VertexSet s);
// Image of g under the bijection v -> perm[v]; perm must be a permutation of 0..n-1.
Graph permute_vertices(const Graph& g, std::span<const int> perm);

}  // namespace alliance
