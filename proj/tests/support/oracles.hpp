#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the eigen solver or the enumeration code it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "penergy/canonical.hpp"
#include "penergy/graph.hpp"
#include "penergy/matrix.hpp"

namespace oracle {

// Cyclic Jacobi rotations; slow but simple. Returns eigenvalues sorted
// non-increasing.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i, i);
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

inline std::vector<double> jacobi_eigenvalues(const penergy::SymmetricMatrix& m) {
  return jacobi_eigenvalues({m.data().begin(), m.data().end()}, m.order());
}

// Eigenvalues of a 3x3 Hermitian matrix from its characteristic polynomial,
// trigonometric form of the cubic roots. Sorted non-increasing.
inline std::array<double, 3> hermitian3_eigenvalues(const std::array<std::complex<double>, 9>& h) {
  auto e = [&](int i, int j) { return h[i * 3 + j]; };
  double tr = (e(0, 0) + e(1, 1) + e(2, 2)).real();
  double minors = (e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0)).real() +
                  (e(0, 0) * e(2, 2) - e(0, 2) * e(2, 0)).real() +
                  (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)).real();
  std::complex<double> det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                             e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                             e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  // x^3 - tr x^2 + minors x - det = 0; shift x = y + tr/3.
  double a = tr / 3.0;
  double pp = minors - tr * tr / 3.0;
  double qq = -2.0 * a * a * a + a * minors - det.real();
  // y^3 + pp y + qq = 0 with three real roots (pp <= 0).
  std::array<double, 3> r{a, a, a};
  if (pp < -1e-300) {
    double m = 2.0 * std::sqrt(-pp / 3.0);
    double arg = std::clamp(3.0 * qq / (pp * m), -1.0, 1.0);
    double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) r[k] = a + m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  }
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

inline bool bfs_connected(const penergy::Graph& g) {
  int n = g.order();
  std::vector<int> stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (g.has_edge(v, u) && !seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

inline long triangles(const penergy::Graph& g) {
  long t = 0;
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++t;
  return t;
}

// 4-cycles as subgraphs (not necessarily induced): each 4-set carries up to
// three distinct cyclic orders.
inline long four_cycles(const penergy::Graph& g) {
  long c4 = 0;
  int n = g.order();
  auto cyc = [&](int a, int b, int c, int d) {
    return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a);
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          c4 += cyc(a, b, c, d) + cyc(a, b, d, c) + cyc(a, c, b, d);
  return c4;
}

// Every labelled graph on n vertices; the connected ones bucketed by
// canonical form.
inline std::size_t labeled_connected_classes(int n) {
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::unordered_set<std::string> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    penergy::Graph g(n);
    for (int k = 0; k < pairs; ++k)
      if ((mask >> k) & 1U) g.add_edge(slots[k].first, slots[k].second);
    if (!bfs_connected(g)) continue;
    classes.insert(penergy::canonical_form(g));
  }
  return classes.size();
}

inline penergy::Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  penergy::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
