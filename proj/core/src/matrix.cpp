#include "penergy/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "penergy/error.hpp"

namespace penergy {

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n == 0) throw InvalidArgument("matrix order must be at least 1");
}

SymmetricMatrix SymmetricMatrix::from_entries(std::size_t n, std::span<const double> entries,
                                              double rel_tol) {
  if (entries.size() != n * n) {
    throw InvalidArgument("expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(entries.size()));
  }
  SymmetricMatrix m(n);
  double scale = 0.0;
  for (double x : entries) {
    if (!std::isfinite(x)) throw InvalidArgument("matrix entries must be finite");
    scale = std::max(scale, std::abs(x));
  }
  const double limit = rel_tol * scale;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double upper = entries[i * n + j];
      const double lower = entries[j * n + i];
      if (std::abs(upper - lower) > limit) {
        std::ostringstream msg;
        msg << "matrix is not symmetric at (" << i << ", " << j << "): " << upper << " vs "
            << lower;
        throw InvalidArgument(msg.str());
      }
      m.set(i, j, upper == lower ? upper : 0.5 * (upper + lower));
    }
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  a_[i * n_ + j] = value;
  a_[j * n_ + i] = value;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

double SymmetricMatrix::frobenius_squared() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return s;
}

double SymmetricMatrix::max_abs_row_sum() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j) row += std::abs(a_[i * n_ + j]);
    best = std::max(best, row);
  }
  return best;
}

double SymmetricMatrix::max_abs_entry() const {
  double best = 0.0;
  for (double x : a_) best = std::max(best, std::abs(x));
  return best;
}

bool SymmetricMatrix::all_integer() const {
  return std::all_of(a_.begin(), a_.end(), [](double x) { return std::nearbyint(x) == x; });
}

HermitianMatrix::HermitianMatrix(std::size_t n, std::span<const double> real_part,
                                 std::span<const double> imag_part)
    : n_(n), re_(real_part.begin(), real_part.end()), im_(imag_part.begin(), imag_part.end()) {
  if (n == 0) throw InvalidArgument("matrix order must be at least 1");
  if (re_.size() != n * n || im_.size() != n * n) {
    throw InvalidArgument("Hermitian parts must each hold n*n entries");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (re_[i * n + j] != re_[j * n + i]) throw InvalidArgument("real part is not symmetric");
      if (im_[i * n + j] != -im_[j * n + i]) {
        throw InvalidArgument("imaginary part is not antisymmetric");
      }
    }
  }
}

std::vector<double> multiply(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) throw InvalidArgument("order mismatch in multiply");
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b(k, j);
    }
  }
  return c;
}

double max_abs_difference(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order()) throw InvalidArgument("order mismatch");
  double best = 0.0;
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) best = std::max(best, std::abs(x[i] - y[i]));
  return best;
}

SymmetricMatrix read_matrix(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1) throw InvalidArgument("matrix file: expected a positive order");
  const auto order = static_cast<std::size_t>(n);
  std::vector<double> entries;
  entries.reserve(order * order);
  bool integral = true;
  std::string token;
  for (std::size_t k = 0; k < order * order; ++k) {
    if (!(in >> token)) throw InvalidArgument("matrix file: too few entries");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw InvalidArgument("matrix file: bad entry '" + token + "'");
    if (std::nearbyint(value) != value) integral = false;
    entries.push_back(value);
  }
  if (in >> token) throw InvalidArgument("matrix file: trailing data '" + token + "'");
  return SymmetricMatrix::from_entries(order, entries, integral ? 0.0 : 1e-12);
}

void write_matrix(std::ostream& out, const SymmetricMatrix& m) {
  const auto old = out.precision(17);
  out << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  out.precision(old);
}

}  // namespace penergy
