#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "penergy/graph.hpp"

namespace penergy {

inline constexpr int kMaxEnumerationOrder = 10;

using GraphSink = std::function<void(const Graph&)>;

struct EnumerateOptions {
  bool connected_only = true;
  unsigned workers = 1;
};

// Isomorphism-free generation by canonical augmentation: each graph on n
// vertices is produced from the class of G - w, where w is its canonical
// deletion vertex (minimum degree among non-cut vertices, ties broken by
// canonical position). Children of one parent are deduplicated by canonical
// form.
//
// Graphs are emitted in canonical labelling; the order is parents in
// emission order of the previous level, then each parent's children sorted
// by canonical form. The result does not depend on the worker count.
std::size_t enumerate_graphs(int n, const GraphSink& sink, const EnumerateOptions& options = {});

// Connected graphs, one per isomorphism class, 1 <= n <= 10.
std::size_t enumerate_connected(int n, const GraphSink& sink, unsigned workers = 1);

std::vector<Graph> connected_graphs(int n, unsigned workers = 1);
std::vector<Graph> all_graphs(int n, unsigned workers = 1);

// One level of the generation tree: all accepted children of `parents`,
// in the order described above.
std::vector<Graph> augment_level(const std::vector<Graph>& parents, bool connected_only,
                                 unsigned workers);

// Connected graphs on n vertices with a dominating vertex, built by joining
// a new vertex to every graph on n-1 vertices; sorted by canonical form.
std::vector<Graph> dominated_graphs(int n, unsigned workers = 1);

}  // namespace penergy
