#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "penergy/matrix.hpp"
#include "penergy/spectra.hpp"

namespace penergy {

// Sizes of the contiguous diagonal blocks of a square matrix.
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<std::size_t> sizes);

  // Parses "2,1,3".
  static BlockPartition parse(const std::string& text);
  static BlockPartition single(std::size_t n) { return BlockPartition({n}); }

  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t blocks() const { return sizes_.size(); }
  std::size_t total() const;

 private:
  std::vector<std::size_t> sizes_;
};

struct GapReport {
  double p = 1.0;
  double whole = 0.0;
  double parts_sum = 0.0;
  double gap = 0.0;
};

// Theorem-level tolerance for a gap: gap >= -1e-8 * max(1, |whole|).
inline constexpr double kGapRelTol = 1e-8;
bool gap_ok(const GapReport& g);

std::vector<SymmetricMatrix> diagonal_blocks(const SymmetricMatrix& m, const BlockPartition& part);

// whole = ||M||_p^p, parts_sum = sum of ||A_ii||_p^p.
GapReport pinching_gap(const SymmetricMatrix& m, const BlockPartition& part, double p);

struct SuperadditivityGap {
  GapReport pos;
  GapReport neg;
};

// E_p^+(M) - sum E_p^+(A_ii) and the same for E_p^-.
SuperadditivityGap superadditivity_gap(const SymmetricMatrix& m, const BlockPartition& part,
                                       double p, double tol);

// Spectra of the whole matrix and of each block, computed once so that many
// exponents can be evaluated without repeating the decompositions.
struct BlockSpectra {
  Spectrum whole;
  std::vector<Spectrum> blocks;
};
BlockSpectra block_spectra(const SymmetricMatrix& m, const BlockPartition& part);

GapReport pinching_gap(const BlockSpectra& spectra, double p);
SuperadditivityGap superadditivity_gap(const BlockSpectra& spectra, double p, double tol);

// Hermitian variant: each spectrum comes from the real embedding with the
// doubled eigenvalues collapsed, so energies are those of H and its blocks.
BlockSpectra block_spectra(const HermitianMatrix& h, const BlockPartition& part);

struct PermutedMatrix {
  SymmetricMatrix matrix;
  BlockPartition partition;
  std::vector<std::size_t> order;  // new position k holds old index order[k]
};

// Relabels rows and columns so that each group is contiguous, groups in the
// given order and indices ascending within a group.
PermutedMatrix conformal_permutation(const SymmetricMatrix& m,
                                     std::span<const std::vector<std::size_t>> groups);

}  // namespace penergy
