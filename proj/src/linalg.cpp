#include "qfq/linalg.hpp"

namespace qfq {

void axpy(SparseVec& v, const CycNum& f, const SparseVec& w) {
  for (const auto& [col, x] : w) {
    auto [it, inserted] = v.try_emplace(col, f * x);
    if (!inserted) {
      it->second += f * x;
      if (it->second.is_zero()) v.erase(it);
    } else if (it->second.is_zero()) {
      v.erase(it);
    }
  }
}

SparseVec RowEchelon::reduce(SparseVec v) const {
  // Stored rows are zero in each other's pivot columns, so one pass over
  // the pivot columns present in v suffices; new entries introduced by a
  // row never land on another pivot column.
  std::vector<std::uint32_t> pivots;
  for (const auto& [col, x] : v)
    if (pivot_row_.count(col)) pivots.push_back(col);
  for (std::uint32_t col : pivots) {
    auto it = v.find(col);
    if (it == v.end()) continue;
    const CycNum f = -it->second;
    axpy(v, f, rows_[pivot_row_.at(col)]);
  }
  return v;
}

bool RowEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::uint32_t pc = v.begin()->first;
  const CycNum inv = cyc_inv(v.begin()->second);
  for (auto& [col, x] : v) x = x * inv;
  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    auto it = row.find(pc);
    if (it == row.end()) continue;
    const CycNum f = -it->second;
    axpy(row, f, v);
  }
  pivot_row_.emplace(pc, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseVec> RowEchelon::nullspace() const {
  std::vector<SparseVec> basis;
  // Column c free -> x_c = 1, x_{pivot(r)} = -row_r[c].
  std::vector<std::vector<std::pair<std::uint32_t, CycNum>>> by_col(cols_);
  for (const auto& [pc, r] : pivot_row_)
    for (const auto& [col, x] : rows_[r])
      if (col != pc) by_col[col].emplace_back(pc, x);
  for (std::uint32_t c = 0; c < cols_; ++c) {
    if (pivot_row_.count(c)) continue;
    SparseVec v;
    v.emplace(c, CycNum::one());
    for (const auto& [pc, x] : by_col[c]) v.emplace(pc, -x);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const std::vector<SparseVec>& rows, std::uint32_t cols) {
  RowEchelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace qfq
