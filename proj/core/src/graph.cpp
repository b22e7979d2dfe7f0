#include "penergy/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <string>

#include "penergy/error.hpp"

namespace penergy {
namespace {

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

// Vertex k of the result is vertices[k] of g; no validation.
Graph pick(const Graph& g, std::span<const int> vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) {
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1 || n > kMaxOrder) {
    throw InvalidArgument("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet r : rows_) twice += std::popcount(r);
  return twice / 2;
}

VertexSet Graph::all_vertices() const { return full_set(n_); }

void Graph::add_edge(int u, int v) {
  if (u == v) throw InvalidArgument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

int Graph::add_vertex(VertexSet neighbours) {
  if (n_ == kMaxOrder) throw InvalidArgument("graph already has 64 vertices");
  if ((neighbours & ~full_set(n_)) != 0) throw InvalidArgument("neighbour out of range");
  const int v = n_++;
  rows_.push_back(neighbours);
  for (int u = 0; u < v; ++u) {
    if ((neighbours >> u) & 1U) rows_[u] |= bit(v);
  }
  return v;
}

Graph family(Family kind, int n) {
  if (n < 1) throw InvalidArgument("family order must be positive");
  if (kind == Family::cycle && n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g(n);
  switch (kind) {
    case Family::path:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      break;
    case Family::cycle:
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      break;
    case Family::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      break;
    case Family::star:
      for (int i = 1; i < n; ++i) g.add_edge(0, i);
      break;
    case Family::edgeless:
      break;
  }
  return g;
}

FamilySpec parse_family(std::string_view spec) {
  if (spec.size() < 2) throw InvalidArgument("bad family spec '" + std::string(spec) + "'");
  int value = 0;
  const auto digits = spec.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("bad family spec '" + std::string(spec) + "'");
  }
  switch (spec[0]) {
    case 'P': return {Family::path, value};
    case 'C': return {Family::cycle, value};
    case 'K': return {Family::complete, value};
    case 'E': return {Family::edgeless, value};
    case 'S': return {Family::star, value + 1};
    default: throw InvalidArgument("unknown family '" + std::string(1, spec[0]) + "'");
  }
}

Graph parse_family_spec(std::string_view spec) {
  const auto [kind, n] = parse_family(spec);
  return family(kind, n);
}

SymmetricMatrix family_adjacency(Family kind, int n) {
  if (n < 1) throw InvalidArgument("family order must be positive");
  if (kind == Family::cycle && n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  const auto un = static_cast<std::size_t>(n);
  SymmetricMatrix a(un);
  switch (kind) {
    case Family::path:
      for (std::size_t i = 0; i + 1 < un; ++i) a.set(i, i + 1, 1.0);
      break;
    case Family::cycle:
      for (std::size_t i = 0; i < un; ++i) a.set(i, (i + 1) % un, 1.0);
      break;
    case Family::complete:
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) a.set(i, j, 1.0);
      break;
    case Family::star:
      for (std::size_t i = 1; i < un; ++i) a.set(0, i, 1.0);
      break;
    case Family::edgeless:
      break;
  }
  return a;
}

Spectrum closed_form_spectrum(Family kind, int n) {
  if (n < 1) throw InvalidArgument("family order must be positive");
  Spectrum s;
  s.values.reserve(static_cast<std::size_t>(n));
  const double pi = std::numbers::pi;
  switch (kind) {
    case Family::path:
      for (int k = 1; k <= n; ++k) s.values.push_back(2.0 * std::cos(k * pi / (n + 1)));
      s.scale = n == 1 ? 0.0 : (n == 2 ? 1.0 : 2.0);
      break;
    case Family::cycle:
      if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
      for (int k = 0; k < n; ++k) s.values.push_back(2.0 * std::cos(2.0 * pi * k / n));
      s.scale = 2.0;
      break;
    case Family::complete:
      s.values.push_back(n - 1.0);
      for (int k = 1; k < n; ++k) s.values.push_back(-1.0);
      s.scale = n - 1.0;
      break;
    case Family::star: {
      const double r = std::sqrt(static_cast<double>(n - 1));
      s.values.push_back(r);
      for (int k = 0; k < n - 2; ++k) s.values.push_back(0.0);
      if (n > 1) s.values.push_back(-r);
      s.scale = n - 1.0;
      break;
    }
    case Family::edgeless:
      s.values.assign(static_cast<std::size_t>(n), 0.0);
      break;
  }
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

SymmetricMatrix adjacency(const Graph& g) {
  SymmetricMatrix m(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (g.has_edge(i, j)) m.set(i, j, 1.0);
    }
  }
  return m;
}

VertexSet component_of(const Graph& g, int start, VertexSet within) {
  VertexSet seen = bit(start) & within;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  return component_of(g, 0, g.all_vertices()) == g.all_vertices();
}

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != g.order() - 1) return false;
  }
  return true;
}

bool has_dominating_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return true;
  }
  return false;
}

bool is_disjoint_union_of_cliques(const Graph& g) {
  // Each vertex's closed neighbourhood must equal its component.
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet closed = g.neighbors(v) | bit(v);
    if (component_of(g, v, g.all_vertices()) != closed) return false;
  }
  return true;
}

VertexSet non_cut_vertices(const Graph& g) {
  const VertexSet all = g.all_vertices();
  if (g.order() == 1) return all;
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet rest = all & ~bit(v);
    const int start = std::countr_zero(rest);
    if (component_of(g, start, rest) == rest) out |= bit(v);
  }
  return out;
}

StructuralPredicates structural_predicates(const Graph& g) {
  StructuralPredicates p;
  VertexSet remaining = g.all_vertices();
  while (remaining != 0) {
    const VertexSet comp = component_of(g, std::countr_zero(remaining), g.all_vertices());
    p.components.push_back(comp);
    remaining &= ~comp;
  }
  p.connected = p.components.size() == 1;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) p.dominating_vertices |= bit(v);
  }
  p.complete = p.dominating_vertices == g.all_vertices();
  p.is_disjoint_union_of_cliques = is_disjoint_union_of_cliques(g);
  return p;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  s &= g.all_vertices();
  if (s == 0) throw InvalidArgument("induced_subgraph: empty vertex set");
  std::vector<int> vertices;
  for (VertexSet t = s; t != 0; t &= t - 1) vertices.push_back(std::countr_zero(t));
  return pick(g, vertices);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("induced_subgraph: vertex out of range");
    s |= bit(v);
  }
  return induced_subgraph(g, s);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("relabel: wrong length");
  VertexSet seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= g.order() || ((seen >> v) & 1U)) {
      throw InvalidArgument("relabel: not a permutation");
    }
    seen |= bit(v);
  }
  return pick(g, perm);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (a.has_edge(i, j)) out.add_edge(i, j);
  for (int i = 0; i < b.order(); ++i)
    for (int j = i + 1; j < b.order(); ++j)
      if (b.has_edge(i, j)) out.add_edge(a.order() + i, a.order() + j);
  return out;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw InvalidArgument("graph6 encoder supports n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("graph6: empty string");
  for (char c : text) {
    if (c < 63 || c > 126) throw InvalidArgument("graph6: invalid character");
  }
  const int n = text[0] - 63;
  if (n > 62) throw InvalidArgument("graph6: only the single-byte size form (n <= 62) is supported");
  if (n < 1) throw InvalidArgument("graph6: graphs must have at least one vertex");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw InvalidArgument("graph6: expected " + std::to_string(1 + bytes) + " bytes for n=" +
                          std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bytes > 0) {
    const int last = text.back() - 63;
    const int pad = static_cast<int>(bytes * 6 - bits);
    if ((last & ((1 << pad) - 1)) != 0) throw InvalidArgument("graph6: nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace penergy
