#pragma once

#include <random>
#include <vector>

#include "qfq/qparams.hpp"

namespace qfq::test {

/// Lexicographic minimum of the generic orbit.
inline QMatrix canonical_matrix() {
  return QMatrix({{{0, 0, 0, 0, 0}, {0, 0, 1, 1, 3}, {0, 4, 0, 2, 4}, {0, 4, 3, 0, 3}, {0, 2, 1, 2, 0}}});
}

/// A generic zero-row-sum matrix whose row 0 is not zero.
inline QMatrix generic_with_nonzero_row0() {
  return act_twist(canonical_matrix(), {Mod5(1), Mod5(0), Mod5(0), Mod5(0), Mod5(4)});
}

inline std::vector<QMatrix> seeded_admissible(std::size_t count, std::uint64_t seed) {
  static const std::vector<QMatrix> all = enumerate_admissible();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(all[pick(rng)]);
  return out;
}

}  // namespace qfq::test
