#include "penergy/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "penergy/error.hpp"

namespace penergy {
namespace {

// Row-major n x n scratch matrix.
struct Dense {
  std::size_t n;
  std::vector<double> a;
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

void check_order(const SymmetricMatrix& m, const EigenOptions& options) {
  if (m.order() > options.max_order) {
    throw InvalidArgument("matrix order " + std::to_string(m.order()) + " exceeds cap " +
                          std::to_string(options.max_order));
  }
}

// Reduces the symmetric matrix held in `a` to tridiagonal form T = Q^T A Q.
// On return diag/off hold T (off[i] couples i and i+1, off[n-1] = 0). When
// q is non-null it receives Q.
void tridiagonalize(Dense& a, std::vector<double>& diag, std::vector<double>& off, Dense* q) {
  const std::size_t n = a.n;
  diag.assign(n, 0.0);
  off.assign(n, 0.0);
  std::vector<double> v(n), p(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    double norm = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = a(k + 1 + i, k);
      norm = std::hypot(norm, v[i]);
    }
    if (norm == 0.0) {
      off[k] = 0.0;
      continue;
    }
    const double alpha = v[0] > 0.0 ? -norm : norm;
    v[0] -= alpha;
    double vnorm = 0.0;
    for (std::size_t i = 0; i < len; ++i) vnorm = std::hypot(vnorm, v[i]);
    if (vnorm == 0.0) {
      off[k] = alpha;
      continue;
    }
    for (std::size_t i = 0; i < len; ++i) v[i] /= vnorm;

    // Trailing block update A22 <- H A22 H with H = I - 2 v v^T.
    double vp = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < len; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = s;
      vp += v[i] * s;
    }
    for (std::size_t i = 0; i < len; ++i) p[i] -= vp * v[i];
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; j < len; ++j) {
        a(k + 1 + i, k + 1 + j) -= 2.0 * (v[i] * p[j] + p[i] * v[j]);
      }
    }
    off[k] = alpha;
    for (std::size_t i = 0; i < len; ++i) {
      a(k + 1 + i, k) = 0.0;
      a(k, k + 1 + i) = 0.0;
    }

    if (q != nullptr) {
      for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (std::size_t j = 0; j < len; ++j) s += (*q)(r, k + 1 + j) * v[j];
        s *= 2.0;
        for (std::size_t j = 0; j < len; ++j) (*q)(r, k + 1 + j) -= s * v[j];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  if (n >= 2) off[n - 2] = a(n - 1, n - 2);
  off[n - 1] = 0.0;
}

// Implicit-shift QL on the tridiagonal (diag, off). Rotations are applied to
// the columns of z when it is non-null.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, Dense* z, int max_sweeps) {
  const int n = static_cast<int>(d.size());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == max_sweeps) {
        throw NumericalFailure("QL iteration did not converge within " +
                               std::to_string(max_sweeps) + " sweeps");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          for (std::size_t k = 0; k < z->n; ++k) {
            const double t = (*z)(k, i + 1);
            (*z)(k, i + 1) = s * (*z)(k, i) + c * t;
            (*z)(k, i) = c * (*z)(k, i) - s * t;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

Dense to_dense(const SymmetricMatrix& m) {
  const auto data = m.data();
  return Dense{m.order(), std::vector<double>(data.begin(), data.end())};
}

}  // namespace

double default_tolerance(std::size_t n) {
  return 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<std::size_t>(n, 1));
}

Spectrum eigenvalues(const SymmetricMatrix& m, const EigenOptions& options) {
  check_order(m, options);
  Dense a = to_dense(m);
  std::vector<double> d, e;
  tridiagonalize(a, d, e, nullptr);
  tridiagonal_ql(d, e, nullptr, options.max_sweeps);
  std::sort(d.begin(), d.end(), std::greater<>());
  return Spectrum{std::move(d), m.max_abs_row_sum()};
}

Eigendecomposition eigendecompose(const SymmetricMatrix& m, const EigenOptions& options) {
  check_order(m, options);
  const std::size_t n = m.order();
  Dense a = to_dense(m);
  Dense q{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) q(i, i) = 1.0;
  std::vector<double> d, e;
  tridiagonalize(a, d, e, &q);
  tridiagonal_ql(d, e, &q, options.max_sweeps);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });
  Eigendecomposition out;
  out.values.resize(n);
  out.vectors.resize(n * n);
  out.scale = m.max_abs_row_sum();
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.vectors[r * n + k] = q(r, order[k]);
  }
  return out;
}

Inertia inertia(const Spectrum& s, double tol) {
  if (tol < 0.0) throw InvalidArgument("tolerance must be non-negative");
  const double t = s.threshold(tol);
  Inertia result;
  for (double x : s.values) {
    if (x > t) {
      ++result.n_pos;
    } else if (x < -t) {
      ++result.n_neg;
    } else {
      ++result.n_zero;
    }
  }
  return result;
}

Inertia exact_inertia(const SymmetricMatrix& m) {
  using boost::multiprecision::cpp_rational;
  const std::size_t n = m.order();
  if (n > 64) throw InvalidArgument("exact_inertia supports order <= 64");
  if (!m.all_integer()) throw InvalidArgument("exact_inertia requires integer entries");

  std::vector<cpp_rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = cpp_rational(static_cast<long long>(m(i, j)));
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> cpp_rational& { return a[i * n + j]; };
  auto swap_index = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(at(x, k), at(y, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(at(k, x), at(k, y));
  };

  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i) {
      if (at(i, i) != 0) pivot = i;
    }
    if (pivot == n) {
      // Zero diagonal: congruence row_i += row_j makes a nonzero a_ij a
      // diagonal entry 2 a_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (at(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        result.n_zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) at(pi, c) += at(pj, c);
      for (std::size_t r = 0; r < n; ++r) at(r, pi) += at(r, pj);
      pivot = pi;
    }
    swap_index(k, pivot);
    const cpp_rational p = at(k, k);
    if (p > 0) {
      ++result.n_pos;
    } else {
      ++result.n_neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const cpp_rational factor = at(i, k) / p;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      at(i, k) = 0;
      at(k, i) = 0;
    }
  }
  return result;
}

SpectralParts spectral_parts(const SymmetricMatrix& m, double tol) {
  const Eigendecomposition eig = eigendecompose(m);
  const std::size_t n = m.order();
  const double t = tol * eig.scale;
  SymmetricMatrix pos(n), neg(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double bp = 0.0, bn = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.values[k];
        const double outer = eig.vector_entry(i, k) * eig.vector_entry(j, k);
        if (lambda > t) {
          bp += lambda * outer;
        } else if (lambda < -t) {
          bn -= lambda * outer;
        }
      }
      pos.set(i, j, bp);
      neg.set(i, j, bn);
    }
  }
  return SpectralParts{std::move(pos), std::move(neg)};
}

SymmetricMatrix hermitian_embed(const HermitianMatrix& h) {
  const std::size_t n = h.order();
  SymmetricMatrix out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.set(i, j, h.real(i, j));
      out.set(n + i, n + j, h.real(i, j));
    }
    for (std::size_t j = 0; j < n; ++j) out.set(i, n + j, -h.imag(i, j));
  }
  return out;
}

Spectrum hermitian_eigenvalues(const HermitianMatrix& h, const EigenOptions& options) {
  const SymmetricMatrix embedded = hermitian_embed(h);
  Spectrum doubled = eigenvalues(embedded, options);
  Spectrum out;
  out.scale = doubled.scale;
  out.values.reserve(h.order());
  for (std::size_t k = 0; k < doubled.values.size(); k += 2) {
    out.values.push_back(0.5 * (doubled.values[k] + doubled.values[k + 1]));
  }
  return out;
}

SymmetricMatrix principal_submatrix(const SymmetricMatrix& m, std::span<const std::size_t> keep) {
  if (keep.empty()) throw InvalidArgument("principal_submatrix: empty index set");
  std::vector<std::size_t> idx(keep.begin(), keep.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw InvalidArgument("principal_submatrix: duplicate index");
  }
  if (idx.back() >= m.order()) throw InvalidArgument("principal_submatrix: index out of range");
  SymmetricMatrix out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i; j < idx.size(); ++j) out.set(i, j, m(idx[i], idx[j]));
  }
  return out;
}

}  // namespace penergy
