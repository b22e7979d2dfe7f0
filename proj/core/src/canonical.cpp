#include "penergy/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>

#include "penergy/error.hpp"

namespace penergy {
namespace {

using Cells = std::vector<std::vector<int>>;
// Upper-triangle adjacency bits in graph6 order, most significant first.
using LeafBits = std::array<std::uint64_t, 2>;

constexpr int kNoAbort = INT_MAX;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run(Cells initial) {
    search(std::move(initial));
    CanonicalLabeling out;
    out.position = best_position_;
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) perm[best_position_[v]] = v;
    out.form = graph6_encode(relabel(g_, perm));
    return out;
  }

 private:
  VertexSet mask(const std::vector<int>& cell) const {
    VertexSet m = 0;
    for (int v : cell) m |= VertexSet{1} << v;
    return m;
  }

  // Splits cells until every vertex of a cell has the same number of
  // neighbours in every cell. Sub-cells are ordered by that count.
  void refine(Cells& cells) const {
    bool changed = true;
    std::vector<std::pair<int, int>> keyed;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        const VertexSet splitter = mask(cells[s]);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() == 1) continue;
          keyed.clear();
          for (int v : cells[c]) keyed.emplace_back(std::popcount(g_.neighbors(v) & splitter), v);
          const bool uniform = std::all_of(keyed.begin(), keyed.end(), [&](const auto& k) {
            return k.first == keyed.front().first;
          });
          if (uniform) continue;
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          Cells pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  LeafBits leaf_bits(const std::vector<int>& position) const {
    std::vector<int> at(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) at[position[v]] = v;
    LeafBits bits{0, 0};
    int k = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if (g_.has_edge(at[i], at[j])) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
    return bits;
  }

  // Union-find orbits of the group generated by the stored automorphisms
  // that fix the current path pointwise.
  bool pruned(int v, const std::vector<int>& explored) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes_path =
          std::all_of(path_.begin(), path_.end(), [&](int u) { return gamma[u] == u; });
      if (!fixes_path) continue;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x), b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
  }

  // Returns the depth at which the search should resume, or kNoAbort.
  int search(Cells cells) {
    refine(cells);
    const int depth = static_cast<int>(path_.size());
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    const std::vector<int> candidates = cells[target];
    std::vector<int> explored;
    for (int v : candidates) {
      if (pruned(v, explored)) continue;
      Cells child = cells;
      std::vector<int> rest;
      for (int u : candidates) {
        if (u != v) rest.push_back(u);
      }
      child[target] = {v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
      path_.push_back(v);
      const int resume = search(std::move(child));
      path_.pop_back();
      explored.push_back(v);
      if (resume < depth) return resume;
    }
    return kNoAbort;
  }

  int leaf(const Cells& cells) {
    std::vector<int> position(static_cast<std::size_t>(n_));
    for (std::size_t c = 0; c < cells.size(); ++c) position[cells[c][0]] = static_cast<int>(c);
    const LeafBits bits = leaf_bits(position);
    if (!have_best_ || bits > best_bits_) {
      have_best_ = true;
      best_bits_ = bits;
      best_position_ = std::move(position);
      best_path_ = path_;
      return kNoAbort;
    }
    if (bits != best_bits_) return kNoAbort;

    // Equal leaves: position^-1 after best_position is an automorphism, and
    // the current subtree mirrors one already searched.
    std::vector<int> best_at(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) best_at[best_position_[v]] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = best_at[position[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
    std::size_t common = 0;
    while (common < path_.size() && common < best_path_.size() &&
           path_[common] == best_path_[common]) {
      ++common;
    }
    return static_cast<int>(common);
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  bool have_best_ = false;
  LeafBits best_bits_{};
  std::vector<int> best_position_;
  std::vector<int> best_path_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) {
    throw InvalidArgument("canonical labeling supports n <= " + std::to_string(kCanonicalMaxOrder));
  }
  Cells initial;
  if (colors.empty()) {
    initial.emplace_back(static_cast<std::size_t>(n));
    std::iota(initial[0].begin(), initial[0].end(), 0);
  } else {
    if (static_cast<int>(colors.size()) != n) throw InvalidArgument("one colour per vertex required");
    std::vector<int> byColor(static_cast<std::size_t>(n));
    std::iota(byColor.begin(), byColor.end(), 0);
    std::stable_sort(byColor.begin(), byColor.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    for (std::size_t i = 0; i < byColor.size(); ++i) {
      if (i == 0 || colors[byColor[i]] != colors[byColor[i - 1]]) initial.emplace_back();
      initial.back().push_back(byColor[i]);
    }
  }
  return CanonicalSearch(g).run(std::move(initial));
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return graph6_decode(canonical_form(g)); }

bool same_orbit(const Graph& g, int u, int v) {
  if (u == v) return true;
  if (g.degree(u) != g.degree(v)) return false;
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
  colors[u] = 0;
  const std::string fu = canonical_labeling(g, colors).form;
  colors[u] = 1;
  colors[v] = 0;
  return fu == canonical_labeling(g, colors).form;
}

}  // namespace penergy
