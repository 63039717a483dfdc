#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "qfq/scalar.hpp"

namespace qfq {

/// Sparse vector over Q(zeta5): column -> nonzero value.
using SparseVec = std::map<std::uint32_t, CycNum>;

/// Incremental Gauss-Jordan elimination over Q(zeta5).
///
/// Rows are kept fully reduced with unit pivots, so every stored row is zero
/// in the pivot columns of all other rows. On the monomial systems produced
/// by fiber algebras this never enlarges entries.
class RowEchelon {
public:
  explicit RowEchelon(std::uint32_t cols) : cols_(cols) {}

  std::uint32_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Residual of v after elimination against the stored rows.
  SparseVec reduce(SparseVec v) const;

  /// Adds v to the row space. Returns false if v was already in it.
  bool insert(SparseVec v);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Basis of { x : row . x = 0 for every stored row }.
  std::vector<SparseVec> nullspace() const;

private:
  std::uint32_t cols_;
  std::vector<SparseVec> rows_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_row_;  // pivot column -> row
};

/// v += f * w, dropping cancelled entries.
void axpy(SparseVec& v, const CycNum& f, const SparseVec& w);

std::size_t rank(const std::vector<SparseVec>& rows, std::uint32_t cols);

}  // namespace qfq
