#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace penergy {

// Dense real symmetric matrix stored row-major. Symmetry is checked when the
// matrix is built from raw entries; every other constructor produces an
// exactly symmetric matrix.
class SymmetricMatrix {
 public:
  // Zero matrix of order n (n >= 1).
  explicit SymmetricMatrix(std::size_t n);

  // Builds from n*n row-major entries. Entries whose mirror differs by more
  // than rel_tol * max|entry| are rejected; accepted pairs are averaged.
  static SymmetricMatrix from_entries(std::size_t n, std::span<const double> entries,
                                      double rel_tol = 0.0);

  static SymmetricMatrix identity(std::size_t n);

  std::size_t order() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  // Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> data() const { return a_; }

  double trace() const;
  double frobenius_squared() const;
  // Largest absolute row sum; bounds the spectral radius.
  double max_abs_row_sum() const;
  double max_abs_entry() const;
  bool all_integer() const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

// Complex Hermitian matrix X + iY with X symmetric and Y antisymmetric.
class HermitianMatrix {
 public:
  HermitianMatrix(std::size_t n, std::span<const double> real_part,
                  std::span<const double> imag_part);

  std::size_t order() const { return n_; }
  double real(std::size_t i, std::size_t j) const { return re_[i * n_ + j]; }
  double imag(std::size_t i, std::size_t j) const { return im_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> re_;
  std::vector<double> im_;
};

// Plain dense product, used for B*C checks and reconstruction tests.
std::vector<double> multiply(const SymmetricMatrix& a, const SymmetricMatrix& b);

double max_abs_difference(const SymmetricMatrix& a, const SymmetricMatrix& b);

// Text format: first token n, then n rows of n whitespace-separated numbers.
// All-integer input must be exactly symmetric; otherwise a relative
// tolerance of 1e-12 is allowed.
SymmetricMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const SymmetricMatrix& m);

}  // namespace penergy
