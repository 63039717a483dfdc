#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfq/index_set.hpp"
#include "qfq/parallel.hpp"
#include "qfq/qparams.hpp"
#include "qfq/scalar.hpp"

namespace qfq {

/// q-exponent of the structure constant q_{a,b} = prod_{i>j} q_ij^{a_i b_j},
/// evaluated straight from the digits.
Mod5 bilinear_exponent(const QMatrix& n, const MultiIndex& a, const MultiIndex& b);

/// Multiplication data of the sheaf algebra: for every ordered pair (a, b)
/// of I, e_a * e_b = q^{exp(a,b)} * prod_{carry i} x_i * e_{a+b}.
///
/// Entries are addressed by ids (see MultiIndex::id). Target and carry data
/// is shared with index_tables() until an entry is overwritten.
class StructureTable {
public:
  struct Entry {
    MultiIndex a, b, target;
    Mod5 exp;
    CarryVector carry;
  };

  /// Table with all exponents zero; targets and carries from index_tables().
  explicit StructureTable(const QMatrix& source);

  const QMatrix& source_matrix() const { return source_; }

  Mod5 exponent(int a, int b) const { return Mod5(exp_[a * kIndexCount + b]); }
  CarryVector carry(int a, int b) const { return CarryVector((*carry_)[a * kIndexCount + b]); }
  int target(int a, int b) const { return (*target_)[a * kIndexCount + b]; }

  Entry entry(const MultiIndex& a, const MultiIndex& b) const;

  /// Overwrites one entry (deserialization and fault injection).
  void set_entry(int a, int b, Mod5 exp, CarryVector carry, int target);
  void set_exponent(int a, int b, Mod5 exp) { exp_[a * kIndexCount + b] = static_cast<std::uint8_t>(exp.value()); }

  std::vector<std::uint8_t>& exponent_data() { return exp_; }
  const std::vector<std::uint8_t>& exponent_data() const { return exp_; }

private:
  QMatrix source_;
  std::vector<std::uint8_t> exp_;
  std::shared_ptr<const std::vector<std::uint16_t>> target_;
  std::shared_ptr<const std::vector<std::uint8_t>> carry_;
  bool owns_target_ = false;
  bool owns_carry_ = false;
};

/// Builds the full 625 x 625 table. Throws std::invalid_argument for a
/// non-admissible matrix.
StructureTable build_table(const QMatrix& n, Exec exec = Exec::parallel);

/// Reference kernel: every entry from bilinear_exponent.
StructureTable build_table_serial(const QMatrix& n);

enum class VerifyMode { exact_bilinear, full_triple, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exact_bilinear;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Wall-clock limit for full_triple; 0 disables the limit.
  double budget_seconds = 0;
  Exec exec = Exec::parallel;
};

struct Violation {
  std::string kind;  // target | carry | exponent | bilinear-witness | cocycle | carry-associativity | target-associativity
  std::vector<MultiIndex> indices;
  std::string detail;
};

struct VerifyResult {
  bool ok = true;
  VerifyMode mode = VerifyMode::exact_bilinear;
  std::uint64_t checks = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<Violation> violation;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// exact_bilinear: checks targets and carries against the digit arithmetic,
/// every exponent against bilinear_exponent, and biadditivity of the stored
/// exponents along generators of I. A bicharacter is a 2-cocycle, and the
/// carry rule c_i = (a_i + b_i - (a+b)_i) / 5 telescopes over triples, so
/// passing proves associativity. O(625^2).
/// full_triple: both sides of (e_a e_b) e_c = e_a (e_b e_c) for all 625^3
/// triples. sampled: `samples` uniform triples from a seeded generator.
/// Throws BudgetExceeded when full_triple exceeds budget_seconds.
VerifyResult verify_associativity(const StructureTable& t, const VerifyOptions& opts);

/// True iff (e_a e_b) e_c = e_a (e_b e_c) as monomials: same target, same
/// root-of-unity exponent, same multiset of carry positions.
bool triple_associates(const StructureTable& t, int a, int b, int c);

struct PairingEntry {
  int row = 0;
  int col = 0;
  Mod5 exp;
  int carries = 0;
  CycNum value() const { return root_power(exp); }
};

/// Multiplication followed by projection onto the (4,4,4,4,4) component.
class PairingMatrix {
public:
  std::vector<PairingEntry> nonzeros;  // sorted by row

  /// Exactly one nonzero entry in every row and every column.
  bool is_perfect() const;
  CycNum entry(int a, int b) const;
};

PairingMatrix frobenius_pairing(const StructureTable& t);

/// q_{a, 4bar-a} == q_{4bar-a, a} for all a, checked entrywise on the table.
bool is_symmetric_pairing(const StructureTable& t);

/// Closed-form criterion: prod_j q_ij = 1 for all i (all row sums 0 mod 5).
bool row_sum_criterion(const QMatrix& n);

struct CyCertificate {
  VerifyResult associativity;
  bool nondegenerate = false;
  bool symmetric = false;
  bool row_sum_criterion = false;
  bool pass = false;
  std::string verdict;
};

CyCertificate cy_certificate(const StructureTable& t);
/// Throws std::invalid_argument for a non-admissible matrix.
CyCertificate cy_certificate(const QMatrix& n);

std::string to_string(VerifyMode m);

}  // namespace qfq
