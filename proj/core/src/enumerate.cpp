#include "penergy/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>
#include <utility>

#include "penergy/canonical.hpp"
#include "penergy/error.hpp"
#include "parallel.hpp"

namespace penergy {
namespace {

using Child = std::pair<std::string, Graph>;

std::vector<Child> children_of(const Graph& parent, bool connected_only) {
  const int m = parent.order();
  std::vector<Child> out;
  std::unordered_set<std::string> seen;
  const VertexSet first = connected_only ? 1 : 0;
  const VertexSet limit = VertexSet{1} << m;
  for (VertexSet s = first; s < limit; ++s) {
    Graph child = parent;
    const int added = child.add_vertex(s);
    const VertexSet candidates = connected_only ? non_cut_vertices(child) : child.all_vertices();

    int min_degree = child.order();
    for (VertexSet c = candidates; c != 0; c &= c - 1) {
      min_degree = std::min(min_degree, child.degree(std::countr_zero(c)));
    }
    if (child.degree(added) != min_degree) continue;

    VertexSet ties = 0;
    for (VertexSet c = candidates; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      if (child.degree(v) == min_degree) ties |= VertexSet{1} << v;
    }
    CanonicalLabeling lab = canonical_labeling(child);
    if (ties != (VertexSet{1} << added)) {
      int chosen = -1;
      for (VertexSet c = ties; c != 0; c &= c - 1) {
        const int v = std::countr_zero(c);
        if (chosen < 0 || lab.position[v] > lab.position[chosen]) chosen = v;
      }
      if (chosen != added && !same_orbit(child, added, chosen)) continue;
    }
    if (seen.insert(lab.form).second) {
      Graph canonical = graph6_decode(lab.form);
      out.emplace_back(std::move(lab.form), std::move(canonical));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Child& a, const Child& b) { return a.first < b.first; });
  return out;
}

void check_order(int n, int cap) {
  if (n < 1 || n > cap) {
    throw InvalidArgument("enumeration order must be in [1, " + std::to_string(cap) + "], got " +
                          std::to_string(n));
  }
}

}  // namespace

std::vector<Graph> augment_level(const std::vector<Graph>& parents, bool connected_only,
                                 unsigned workers) {
  std::vector<std::vector<Child>> per_parent(parents.size());
  detail::parallel_for(parents.size(), workers, [&](std::size_t i) {
    per_parent[i] = children_of(parents[i], connected_only);
  });
  std::vector<Graph> out;
  for (auto& kids : per_parent) {
    for (auto& kid : kids) out.push_back(std::move(kid.second));
  }
  return out;
}

std::size_t enumerate_graphs(int n, const GraphSink& sink, const EnumerateOptions& options) {
  check_order(n, kMaxEnumerationOrder);
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k < n; ++k) level = augment_level(level, options.connected_only, options.workers);
  if (n == 1) {
    sink(level.front());
    return 1;
  }

  // Last level is streamed in parent batches to bound memory.
  constexpr std::size_t kBatch = 4096;
  std::size_t count = 0;
  for (std::size_t start = 0; start < level.size(); start += kBatch) {
    const std::size_t stop = std::min(level.size(), start + kBatch);
    std::vector<std::vector<Child>> per_parent(stop - start);
    detail::parallel_for(per_parent.size(), options.workers, [&](std::size_t i) {
      per_parent[i] = children_of(level[start + i], options.connected_only);
    });
    for (const auto& kids : per_parent) {
      for (const auto& kid : kids) {
        sink(kid.second);
        ++count;
      }
    }
  }
  return count;
}

std::size_t enumerate_connected(int n, const GraphSink& sink, unsigned workers) {
  return enumerate_graphs(n, sink, EnumerateOptions{true, workers});
}

std::vector<Graph> connected_graphs(int n, unsigned workers) {
  std::vector<Graph> out;
  enumerate_connected(n, [&](const Graph& g) { out.push_back(g); }, workers);
  return out;
}

std::vector<Graph> all_graphs(int n, unsigned workers) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); }, EnumerateOptions{false, workers});
  return out;
}

std::vector<Graph> dominated_graphs(int n, unsigned workers) {
  check_order(n, kMaxEnumerationOrder);
  if (n < 2) throw InvalidArgument("dominated_graphs needs n >= 2");
  std::vector<Child> found;
  std::unordered_set<std::string> seen;
  for (const Graph& base : all_graphs(n - 1, workers)) {
    Graph g = base;
    g.add_vertex(base.all_vertices());
    std::string form = canonical_form(g);
    if (seen.insert(form).second) {
      Graph canonical = graph6_decode(form);
      found.emplace_back(std::move(form), std::move(canonical));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Child& a, const Child& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace penergy
