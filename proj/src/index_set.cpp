#include "qfq/index_set.hpp"

#include <stdexcept>

namespace qfq {

namespace {

int base5(const std::array<std::uint8_t, 5>& d) {
  int c = 0;
  for (auto x : d) c = c * 5 + x;
  return c;
}

// base-5 code (0..3124) -> id, or -1 for digit vectors outside I.
const std::array<std::int16_t, 3125>& code_to_id() {
  static const std::array<std::int16_t, 3125> table = [] {
    std::array<std::int16_t, 3125> t{};
    std::int16_t next = 0;
    for (int c = 0; c < 3125; ++c) {
      int s = 0;
      for (int x = c; x > 0; x /= 5) s += x % 5;
      t[c] = (s % 5 == 0) ? next++ : -1;
    }
    return t;
  }();
  return table;
}

}  // namespace

MultiIndex::MultiIndex(const std::array<int, 5>& digits) {
  int s = 0;
  for (int i = 0; i < 5; ++i) {
    if (digits[i] < 0 || digits[i] > 4) throw std::invalid_argument("MultiIndex: digit outside 0..4");
    d_[i] = static_cast<std::uint8_t>(digits[i]);
    s += digits[i];
  }
  if (s % 5 != 0) throw std::invalid_argument("MultiIndex: digit sum is not a multiple of 5");
}

int MultiIndex::id() const { return code_to_id()[base5(d_)]; }

MultiIndex MultiIndex::from_id(int id) {
  if (id < 0 || id >= kIndexCount) throw std::out_of_range("MultiIndex::from_id");
  return enumerate_index_set()[id];
}

const std::vector<MultiIndex>& enumerate_index_set() {
  static const std::vector<MultiIndex> all = [] {
    std::vector<MultiIndex> out;
    out.reserve(kIndexCount);
    for (int c = 0; c < 3125; ++c) {
      std::array<int, 5> d{};
      int x = c, s = 0;
      for (int i = 4; i >= 0; --i) {
        d[i] = x % 5;
        s += d[i];
        x /= 5;
      }
      if (s % 5 == 0) out.emplace_back(d);
    }
    return out;
  }();
  return all;
}

int weight(const MultiIndex& a) {
  int s = 0;
  for (auto x : a.digits()) s += x;
  return s / 5;
}

std::pair<MultiIndex, CarryVector> index_add(const MultiIndex& a, const MultiIndex& b) {
  std::array<int, 5> d{};
  std::uint8_t mask = 0;
  for (int i = 0; i < 5; ++i) {
    int s = a[i] + b[i];
    if (s >= 5) {
      s -= 5;
      mask |= static_cast<std::uint8_t>(1u << i);
    }
    d[i] = s;
  }
  return {MultiIndex(d), CarryVector(mask)};
}

MultiIndex complement(const MultiIndex& a) {
  std::array<int, 5> d{};
  for (int i = 0; i < 5; ++i) d[i] = 4 - a[i];
  return MultiIndex(d);
}

MultiIndex negate(const MultiIndex& a) {
  std::array<int, 5> d{};
  for (int i = 0; i < 5; ++i) d[i] = (5 - a[i]) % 5;
  return MultiIndex(d);
}

const IndexTables& index_tables() {
  static const IndexTables tables = [] {
    IndexTables t;
    const auto& all = enumerate_index_set();
    t.sum.resize(kIndexCount * kIndexCount);
    t.carry.resize(kIndexCount * kIndexCount);
    for (int a = 0; a < kIndexCount; ++a) {
      t.weight[a] = static_cast<std::uint8_t>(weight(all[a]));
      for (int b = 0; b < kIndexCount; ++b) {
        auto [s, c] = index_add(all[a], all[b]);
        t.sum[a * kIndexCount + b] = static_cast<std::uint16_t>(s.id());
        t.carry[a * kIndexCount + b] = c.mask();
      }
    }
    t.zero_id = MultiIndex({0, 0, 0, 0, 0}).id();
    t.top_id = MultiIndex({4, 4, 4, 4, 4}).id();
    return t;
  }();
  return tables;
}

}  // namespace qfq
