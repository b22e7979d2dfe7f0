#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "penergy/matrix.hpp"
#include "penergy/spectra.hpp"

namespace penergy {

using VertexSet = std::uint64_t;

// Simple undirected graph on at most 64 vertices; row i is the neighbour
// bitset of vertex i.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  explicit Graph(int n);

  int order() const { return n_; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const;
  int edge_count() const;
  VertexSet all_vertices() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Adds an isolated vertex (or one joined to `neighbours`) and returns its index.
  int add_vertex(VertexSet neighbours = 0);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<VertexSet> rows_;
};

enum class Family { path, cycle, complete, star, edgeless };

// Canonical labelling 0..n-1: paths and cycles in order, star centred at 0.
// n counts vertices (star(4) is K_{1,3}).
Graph family(Family kind, int n);

struct FamilySpec {
  Family kind;
  int n;  // vertex count
};

// "P7", "C12", "K5", "E3" (edgeless), "S4" (star with 4 leaves).
FamilySpec parse_family(std::string_view spec);
Graph parse_family_spec(std::string_view spec);

// Adjacency matrix of family(kind, n) without going through Graph, so the
// order is not limited to 64.
SymmetricMatrix family_adjacency(Family kind, int n);

// Sorted non-increasing; scale is the maximum degree.
Spectrum closed_form_spectrum(Family kind, int n);

SymmetricMatrix adjacency(const Graph& g);

struct StructuralPredicates {
  bool connected = false;
  bool complete = false;
  VertexSet dominating_vertices = 0;
  bool is_disjoint_union_of_cliques = false;
  std::vector<VertexSet> components;
};

StructuralPredicates structural_predicates(const Graph& g);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool has_dominating_vertex(const Graph& g);
bool is_disjoint_union_of_cliques(const Graph& g);
// Vertices of the component containing `start`, restricted to `within`.
VertexSet component_of(const Graph& g, int start, VertexSet within);
// Vertices whose removal keeps the graph connected (all vertices when n == 1).
VertexSet non_cut_vertices(const Graph& g);

// Vertices relabelled 0..|S|-1 in increasing original order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
// new vertex k is old vertex perm[k].
Graph relabel(const Graph& g, std::span<const int> perm);
Graph disjoint_union(const Graph& a, const Graph& b);

// graph6 for n <= 62.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);
// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace penergy
