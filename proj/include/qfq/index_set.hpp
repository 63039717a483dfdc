#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace qfq {

/// Element of I = { a in {0..4}^5 : a_0 + ... + a_4 = 5|a| }.
class MultiIndex {
public:
  MultiIndex() = default;
  /// Throws std::invalid_argument if a digit is outside {0..4} or the digit
  /// sum is not a multiple of 5.
  explicit MultiIndex(const std::array<int, 5>& digits);

  int operator[](int i) const { return d_[i]; }
  const std::array<std::uint8_t, 5>& digits() const { return d_; }

  /// Position of this element in enumerate_index_set() (0..624).
  int id() const;
  static MultiIndex from_id(int id);

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
  std::array<std::uint8_t, 5> d_{};
};

/// Positions i with a_i + b_i >= 5.
class CarryVector {
public:
  constexpr CarryVector() = default;
  constexpr explicit CarryVector(std::uint8_t mask) : mask_(mask & 0x1F) {}
  constexpr bool operator[](int i) const { return (mask_ >> i) & 1u; }
  constexpr std::uint8_t mask() const { return mask_; }
  constexpr int count() const { return __builtin_popcount(mask_); }
  friend constexpr bool operator==(CarryVector, CarryVector) = default;

private:
  std::uint8_t mask_ = 0;
};

inline constexpr int kIndexCount = 625;

/// All 625 elements of I in lexicographic order.
const std::vector<MultiIndex>& enumerate_index_set();

/// |a| = (a_0 + ... + a_4) / 5, computed on the digit representatives.
int weight(const MultiIndex& a);

/// Digitwise sum mod 5 with the carry positions.
std::pair<MultiIndex, CarryVector> index_add(const MultiIndex& a, const MultiIndex& b);

/// 4bar - a, the unique partner of a whose sum with a is (4,4,4,4,4) without carries.
MultiIndex complement(const MultiIndex& a);

/// Additive inverse in I.
MultiIndex negate(const MultiIndex& a);

/// Precomputed addition data over ids, shared by every structure table.
struct IndexTables {
  std::vector<std::uint16_t> sum;    // sum[a * 625 + b] = id of a + b
  std::vector<std::uint8_t> carry;   // carry mask of a + b
  std::array<std::uint8_t, kIndexCount> weight{};
  int zero_id = 0;
  int top_id = 0;  // id of (4,4,4,4,4)
};
const IndexTables& index_tables();

}  // namespace qfq
