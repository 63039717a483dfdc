#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qfq/parallel.hpp"
#include "qfq/scalar.hpp"

namespace qfq {

/// 5x5 matrix of quantum exponents n_ij over Z/5, q_ij = q^{n_ij}.
/// No invariants are imposed at construction.
class QMatrix {
public:
  QMatrix() = default;
  explicit QMatrix(const std::array<std::array<int, 5>, 5>& rows);

  Mod5 operator()(int i, int j) const { return e_[5 * i + j]; }
  void set(int i, int j, Mod5 v) { e_[5 * i + j] = v; }

  /// Skew-symmetric matrix with the 10 strictly-upper entries taken from
  /// `upper` in row-major order (n01, n02, n03, n04, n12, ...).
  static QMatrix from_upper(const std::array<int, 10>& upper);

  /// Row-major base-5 code; order-isomorphic to the lexicographic order.
  std::uint64_t code() const;

  /// Row sum of row i, in Z/5.
  Mod5 row_sum(int i) const;

  const std::array<Mod5, 25>& entries() const { return e_; }

  friend auto operator<=>(const QMatrix&, const QMatrix&) = default;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  std::string to_string() const;

private:
  std::array<Mod5, 25> e_{};
};

using Permutation = std::array<int, 5>;

/// Zero diagonal, skew-symmetry, and all row sums equal in Z/5.
bool is_admissible(const QMatrix& n);

/// n_ij + n_jk != n_ik for all 60 ordered triples of distinct indices.
bool is_generic(const QMatrix& n);

/// Admissible with common row sum 0, i.e. prod_j q_ij = 1 for every i.
bool has_zero_row_sums(const QMatrix& n);

/// Change of primitive root q -> q^a. Throws std::invalid_argument on a = 0.
QMatrix act_scale(const QMatrix& n, Mod5 a);

/// Change of variables: result(i,j) = n(sigma(i), sigma(j)).
/// Throws std::invalid_argument unless sigma is a bijection of {0..4}.
QMatrix act_permute(const QMatrix& n, const Permutation& sigma);

/// Zhang twist: result(i,j) = n(i,j) + a_i - a_j.
QMatrix act_twist(const QMatrix& n, const std::array<Mod5, 5>& a);

/// Bit set over the three actions.
enum class Action : unsigned { scale = 1, permute = 2, twist = 4 };

class ActionSet {
public:
  constexpr ActionSet() = default;
  constexpr ActionSet(std::initializer_list<Action> as) {
    for (Action a : as) bits_ |= static_cast<unsigned>(a);
  }
  static constexpr ActionSet all() { return {Action::scale, Action::permute, Action::twist}; }
  constexpr bool has(Action a) const { return bits_ & static_cast<unsigned>(a); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Parses "scale,permute,twist" (any subset, any order; "" is empty).
  static ActionSet parse(const std::string& s);
  std::string to_string() const;
  friend constexpr bool operator==(ActionSet, ActionSet) = default;

private:
  unsigned bits_ = 0;
};

/// All 120 permutations of {0..4} in lexicographic order.
const std::vector<Permutation>& all_permutations();

/// Generic admissible matrices normalized to common row sum 0. Exactly the
/// 3000 matrices of the classification; a twist by any a with sum(a) = -c
/// maps the row-sum-c class bijectively onto this set.
std::vector<QMatrix> enumerate_generic(Exec exec = Exec::parallel);
std::vector<QMatrix> enumerate_generic_serial();

/// Generic admissible matrices with any common row sum (5 x 3000).
std::vector<QMatrix> enumerate_generic_any_row_sum(Exec exec = Exec::parallel);

/// All admissible matrices (equal row sums), in increasing code order.
std::vector<QMatrix> enumerate_admissible(Exec exec = Exec::parallel);

/// Breadth-first closure of {n} under the generators of the selected
/// actions: the 4 scalings, the 120 permutations, and the zero-sum twists
/// e_i - e_4 (i = 0..3), which keep the common row sum fixed.
/// Result is sorted. Throws std::invalid_argument if n is not admissible.
std::vector<QMatrix> orbit(const QMatrix& n, ActionSet actions);

/// Lexicographic minimum of orbit(n, actions).
QMatrix canonical_form(const QMatrix& n, ActionSet actions);

struct ClassificationReport {
  std::int64_t generic_count = 0;
  std::int64_t orbit_count_all_actions = 0;
  std::int64_t orbit_count_without_scaling = 0;
  std::vector<QMatrix> canonical_representatives;
  std::int64_t admissible_count = 0;
  /// Generic admissible matrices without the row-sum normalization.
  std::int64_t generic_count_any_row_sum = 0;
  /// Orbit count under the caller's selected action set.
  ActionSet selected_actions = ActionSet::all();
  std::int64_t orbit_count_selected = 0;
  std::vector<std::int64_t> orbit_sizes_selected;
};

/// Orbit partition of a set of admissible matrices.
struct OrbitPartition {
  std::vector<QMatrix> representatives;  // lexicographic minimum of each orbit
  std::vector<std::int64_t> sizes;
};
OrbitPartition partition_orbits(const std::vector<QMatrix>& set, ActionSet actions);

ClassificationReport classify(ActionSet selected = ActionSet::all(), Exec exec = Exec::parallel);

}  // namespace qfq
