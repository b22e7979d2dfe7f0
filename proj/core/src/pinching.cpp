#include "penergy/pinching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "penergy/energy.hpp"
#include "penergy/error.hpp"

namespace penergy {

BlockPartition::BlockPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidArgument("block partition must have at least one block");
  for (std::size_t s : sizes_) {
    if (s == 0) throw InvalidArgument("block sizes must be positive");
  }
}

BlockPartition BlockPartition::parse(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v <= 0) {
      throw InvalidArgument("bad block size '" + item + "'");
    }
    sizes.push_back(static_cast<std::size_t>(v));
  }
  return BlockPartition(std::move(sizes));
}

std::size_t BlockPartition::total() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

bool gap_ok(const GapReport& g) {
  return g.gap >= -kGapRelTol * std::max(1.0, std::abs(g.whole));
}

std::vector<SymmetricMatrix> diagonal_blocks(const SymmetricMatrix& m, const BlockPartition& part) {
  if (part.total() != m.order()) {
    throw InvalidArgument("block sizes sum to " + std::to_string(part.total()) +
                          " but matrix order is " + std::to_string(m.order()));
  }
  std::vector<SymmetricMatrix> out;
  out.reserve(part.blocks());
  std::size_t offset = 0;
  for (std::size_t size : part.sizes()) {
    SymmetricMatrix b(size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i; j < size; ++j) b.set(i, j, m(offset + i, offset + j));
    }
    out.push_back(std::move(b));
    offset += size;
  }
  return out;
}

BlockSpectra block_spectra(const SymmetricMatrix& m, const BlockPartition& part) {
  BlockSpectra out;
  for (const auto& b : diagonal_blocks(m, part)) out.blocks.push_back(eigenvalues(b));
  out.whole = eigenvalues(m);
  return out;
}

BlockSpectra block_spectra(const HermitianMatrix& h, const BlockPartition& part) {
  const std::size_t n = h.order();
  if (part.total() != n) throw InvalidArgument("block sizes do not match Hermitian order");
  BlockSpectra out;
  out.whole = hermitian_eigenvalues(h);
  std::size_t offset = 0;
  for (std::size_t size : part.sizes()) {
    std::vector<double> re(size * size), im(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        re[i * size + j] = h.real(offset + i, offset + j);
        im[i * size + j] = h.imag(offset + i, offset + j);
      }
    }
    out.blocks.push_back(hermitian_eigenvalues(HermitianMatrix(size, re, im)));
    offset += size;
  }
  return out;
}

GapReport pinching_gap(const BlockSpectra& spectra, double p) {
  GapReport g;
  g.p = p;
  for (double x : spectra.whole.values) g.whole += abs_pow(x, p);
  for (const auto& b : spectra.blocks) {
    for (double x : b.values) g.parts_sum += abs_pow(x, p);
  }
  g.gap = g.whole - g.parts_sum;
  return g;
}

GapReport pinching_gap(const SymmetricMatrix& m, const BlockPartition& part, double p) {
  if (!(p >= 1.0)) throw InvalidArgument("p must be >= 1");
  return pinching_gap(block_spectra(m, part), p);
}

SuperadditivityGap superadditivity_gap(const BlockSpectra& spectra, double p, double tol) {
  SuperadditivityGap out;
  const EnergyReport whole = p_energy(spectra.whole, p, tol);
  out.pos.p = out.neg.p = p;
  out.pos.whole = whole.e_pos;
  out.neg.whole = whole.e_neg;
  for (const auto& b : spectra.blocks) {
    const EnergyReport part = p_energy(b, p, tol);
    out.pos.parts_sum += part.e_pos;
    out.neg.parts_sum += part.e_neg;
  }
  out.pos.gap = out.pos.whole - out.pos.parts_sum;
  out.neg.gap = out.neg.whole - out.neg.parts_sum;
  return out;
}

SuperadditivityGap superadditivity_gap(const SymmetricMatrix& m, const BlockPartition& part,
                                       double p, double tol) {
  if (!(p >= 1.0)) throw InvalidArgument("p must be >= 1");
  return superadditivity_gap(block_spectra(m, part), p, tol);
}

PermutedMatrix conformal_permutation(const SymmetricMatrix& m,
                                     std::span<const std::vector<std::size_t>> groups) {
  const std::size_t n = m.order();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> order;
  std::vector<std::size_t> sizes;
  order.reserve(n);
  for (const auto& group : groups) {
    if (group.empty()) throw InvalidArgument("conformal_permutation: empty group");
    std::vector<std::size_t> sorted(group);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t v : sorted) {
      if (v >= n) throw InvalidArgument("conformal_permutation: index out of range");
      if (seen[v]) throw InvalidArgument("conformal_permutation: groups overlap");
      seen[v] = 1;
      order.push_back(v);
    }
    sizes.push_back(sorted.size());
  }
  if (order.size() != n) throw InvalidArgument("conformal_permutation: groups do not cover all indices");

  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.set(i, j, m(order[i], order[j]));
  }
  return PermutedMatrix{std::move(out), BlockPartition(std::move(sizes)), std::move(order)};
}

}  // namespace penergy
