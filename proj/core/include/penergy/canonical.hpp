#pragma once

#include <span>
#include <string>
#include <vector>

#include "penergy/graph.hpp"

namespace penergy {

inline constexpr int kCanonicalMaxOrder = 16;

// position[v] is the canonical index of vertex v; form is the graph6 string
// of the relabelled graph. Two graphs get the same form iff they are
// isomorphic; with colours, the same holds for colour-preserving maps between
// colourings whose classes have matching sizes.
struct CanonicalLabeling {
  std::vector<int> position;
  std::string form;
};

// Equitable-partition refinement plus a backtracking search over
// individualizations; the leaf with the lexicographically largest adjacency
// bit string (graph6 order) wins. Automorphisms found at equal leaves prune
// the search. `colors`, if given, fixes an initial ordered partition: vertices
// are grouped by ascending colour value.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

std::string canonical_form(const Graph& g);

// g relabelled so that vertex k is the vertex with canonical position k.
Graph canonical_graph(const Graph& g);

// True iff some automorphism of g maps u to v.
bool same_orbit(const Graph& g, int u, int v);

}  // namespace penergy
