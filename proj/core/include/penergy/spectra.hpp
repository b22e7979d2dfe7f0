#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "penergy/matrix.hpp"

namespace penergy {

// Eigenvalues in non-increasing order together with the magnitude used to
// turn relative tolerances into absolute thresholds (max absolute row sum,
// an upper bound on the spectral radius).
struct Spectrum {
  std::vector<double> values;
  double scale = 0.0;

  std::size_t size() const { return values.size(); }
  double threshold(double tol) const { return tol * scale; }
};

struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_zero = 0;
  std::size_t n_neg = 0;

  std::size_t order() const { return n_pos + n_zero + n_neg; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct EigenOptions {
  std::size_t max_order = 4096;
  // QL iterations allowed per eigenvalue before giving up.
  int max_sweeps = 30;
};

// Orthonormal eigenbasis; vectors is n*n row-major with column k holding the
// eigenvector of values[k].
struct Eigendecomposition {
  std::vector<double> values;
  std::vector<double> vectors;
  double scale = 0.0;

  double vector_entry(std::size_t row, std::size_t k) const {
    return vectors[row * values.size() + k];
  }
};

// Zero-classification tolerance used when the caller does not supply one:
// 64 * machine epsilon * n, applied relative to Spectrum::scale.
double default_tolerance(std::size_t n);

// Householder tridiagonalization followed by implicit-shift QL.
Spectrum eigenvalues(const SymmetricMatrix& m, const EigenOptions& options = {});
Eigendecomposition eigendecompose(const SymmetricMatrix& m, const EigenOptions& options = {});

// Eigenvalues above tol*scale count positive, below -tol*scale negative.
Inertia inertia(const Spectrum& s, double tol);
inline Inertia inertia(const Spectrum& s) { return inertia(s, default_tolerance(s.size())); }

// Exact signature of an integer symmetric matrix by congruence elimination
// over the rationals. Requires integer entries and order <= 64.
Inertia exact_inertia(const SymmetricMatrix& m);

// M = B - C with B, C positive semidefinite and BC = CB = 0: B collects the
// positive part of the spectral decomposition, C the negated negative part.
struct SpectralParts {
  SymmetricMatrix positive;
  SymmetricMatrix negative;
};
SpectralParts spectral_parts(const SymmetricMatrix& m, double tol);
inline SpectralParts spectral_parts(const SymmetricMatrix& m) {
  return spectral_parts(m, default_tolerance(m.order()));
}

// Real 2n x 2n form [[X, -Y], [Y, X]] of H = X + iY. Its spectrum is the
// spectrum of H with every multiplicity doubled.
SymmetricMatrix hermitian_embed(const HermitianMatrix& h);

// Spectrum of H itself, recovered from the embedding by dropping the
// duplicate of each eigenvalue pair.
Spectrum hermitian_eigenvalues(const HermitianMatrix& h, const EigenOptions& options = {});

// Rows and columns restricted to `keep` (distinct, in range), in index order.
SymmetricMatrix principal_submatrix(const SymmetricMatrix& m, std::span<const std::size_t> keep);

}  // namespace penergy
