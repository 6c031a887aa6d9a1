#pragma once

#include "alliance/graph.hpp"

namespace alliance {

// Defense threshold for the k-alliance condition; k = 0 is the strong case.
struct DefenseLevel {
  int k = 0;
};

// True iff s is nonempty and every v in s has at least as many neighbors
// inside s as outside, shifted by level.k:
//   deg_s(v) >= deg_{V \ s}(v) + level.k.
// Connectivity of s is not required here. Throws std::invalid_argument when s
// is empty, lies outside the vertex range, or |level.k| exceeds the maximum
// degree.
bool is_defensive_alliance(const Graph& g, VertexSet s, DefenseLevel level = {});

// The polynomial's defining predicate: defensive at level 0 and inducing a
// connected subgraph.
bool is_strong_alliance_connected(const Graph& g, VertexSet s);

// Smallest cardinality of a set satisfying is_strong_alliance_connected.
// Every graph
// has one (any vertex of minimum degree extends to one), so this is always
// in [1, n].
int strong_alliance_number(const Graph& g);

// Whether v in s is deficient in the floor sense: deg_s(v) <= (deg(v)-1)/2
// with integer division, i.e. strictly fewer defenders than attackers.
bool is_deficient(const Graph& g, VertexSet s, int v);

}  // namespace alliance
