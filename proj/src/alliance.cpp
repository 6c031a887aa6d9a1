#include "alliance/alliance.hpp"

#include <cstdlib>
#include <stdexcept>

namespace alliance {

bool is_defensive_alliance(const Graph& g, VertexSet s, DefenseLevel level) {
  if (s.empty()) throw std::invalid_argument("alliance must be nonempty");
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("set outside vertex range");
  if (std::abs(level.k) > g.max_degree())
    throw std::invalid_argument("defense level exceeds maximum degree");
  for (int v : s) {
    int inside = degree_in_set(g, v, s);
    int outside = g.degree(v) - inside;
    if (inside < outside + level.k) return false;
  }
  return true;
}

bool is_strong_alliance_connected(const Graph& g, VertexSet s) {
  return is_defensive_alliance(g, s) && is_connected_subset(g, s);
}

bool is_deficient(const Graph& g, VertexSet s, int v) {
  // Floor of (deg(v) - 1)/2. Division would round toward zero and wrongly
  // flag isolated vertices; the arithmetic shift keeps the floor at deg = 0.
  return degree_in_set(g, v, s) <= ((g.degree(v) - 1) >> 1);
}

namespace {

// Expands a connected set rooted at its minimum vertex, pruned at `cap`
// vertices; returns true once any strong alliance of exactly `cap` vertices
// appears. `banned` blocks vertices already exhausted at this level, which
// keeps each set reachable exactly once.
bool find_alliance_of_size(const Graph& g, VertexSet s, VertexSet banned, int cap) {
  if (s.size() == cap) return is_defensive_alliance(g, s);
  VertexSet frontier = open_neighborhood(g, s) - banned;
  for (int v : frontier) {
    if (find_alliance_of_size(g, s.with(v), banned, cap)) return true;
    banned = banned.with(v);
  }
  return false;
}

}  // namespace

int strong_alliance_number(const Graph& g) {
  for (int size = 1;; ++size) {
    for (int r = 0; r + size <= g.n(); ++r) {
      // Roots below r are banned so r stays the minimum of every set.
      VertexSet banned = VertexSet::full(r);
      if (find_alliance_of_size(g, VertexSet::single(r), banned, size)) return size;
    }
    if (size == g.n()) throw std::logic_error("no alliance found, graph invariant broken");
  }
}

}  // namespace alliance
