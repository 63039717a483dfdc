#pragma once

#include <array>
#include <string>
#include <vector>

#include "qfq/linalg.hpp"
#include "qfq/parallel.hpp"
#include "qfq/scalar.hpp"
#include "qfq/structure_table.hpp"

namespace qfq {

/// Finite-dimensional algebra with a monomial basis: every product of two
/// basis elements is a scalar multiple of a single basis element,
/// e_i e_j = coeff(i, j) e_{target(i, j)}. The scalar may be zero.
class MonomialAlgebra {
public:
  virtual ~MonomialAlgebra() = default;

  int dim() const { return dim_; }
  int target(int i, int j) const { return static_cast<int>(targets_[static_cast<std::size_t>(i) * dim_ + j]); }
  virtual CycNum coeff(int i, int j) const = 0;

  /// u * v for sparse vectors in the basis.
  SparseVec multiply(const SparseVec& u, const SparseVec& v) const;

protected:
  MonomialAlgebra(int dim, std::vector<std::uint32_t> targets) : dim_(dim), targets_(std::move(targets)) {}

private:
  int dim_;
  std::vector<std::uint32_t> targets_;
};

/// Algebra given by explicit structure constants; used for small fixtures.
class TableAlgebra : public MonomialAlgebra {
public:
  struct Product {
    int target;
    CycNum coeff;
  };
  /// products[i * dim + j] = e_i e_j.
  TableAlgebra(int dim, std::vector<Product> products);
  CycNum coeff(int i, int j) const override { return coeffs_[static_cast<std::size_t>(i) * dim() + j]; }

private:
  static std::vector<std::uint32_t> targets_of(int dim, const std::vector<Product>& products);
  std::vector<CycNum> coeffs_;
};

/// Closed point (x_0 : ... : x_4) of X = Proj C[x_0..x_4]/(sum x_k).
struct FiberPoint {
  std::array<CycNum, 5> coords;

  /// Parses "1,1,1,1,-4"; entries are integers or fractions p/q.
  static FiberPoint parse(const std::string& s);
  /// Throws std::invalid_argument unless sum x_i = 0 and some x_i != 0.
  void validate() const;
  bool full_support() const;
  FiberPoint scaled(const CycNum& lambda) const;
  std::string to_string() const;
};

/// Structure table evaluated at a point: e_a e_b = q_{a,b} prod_{carry i} x_i e_{a+b}.
class FiberAlgebra : public MonomialAlgebra {
public:
  FiberAlgebra(StructureTable table, FiberPoint point);

  CycNum coeff(int a, int b) const override;

  const StructureTable& table() const { return table_; }
  const FiberPoint& point() const { return point_; }
  /// prod_{i in mask} x_i for each of the 32 carry masks.
  const CycNum& carry_product(std::uint8_t mask) const { return carry_products_[mask]; }

private:
  StructureTable table_;
  FiberPoint point_;
  std::array<CycNum, 32> carry_products_;
};

/// Throws std::invalid_argument for an invalid point or a table that fails
/// exact associativity verification.
FiberAlgebra specialize(const StructureTable& t, const FiberPoint& p);

/// Graded shortcut: the center is spanned by the e_a that commute with every
/// e_b, and the carry monomial is symmetric in (a, b), so e_a is central iff
/// q_{a,b} = q_{b,a} wherever prod_{carry i} x_i != 0.
int center_dim(const FiberAlgebra& f);

/// Null space of the stacked commutator maps z -> z e_b - e_b z.
int center_dim_dense(const MonomialAlgebra& f, Exec exec = Exec::parallel);

/// Rows of T(u, v) = trace(L_u L_v) in the basis.
std::vector<SparseVec> trace_form(const MonomialAlgebra& f, Exec exec = Exec::parallel);
std::vector<SparseVec> trace_form_serial(const MonomialAlgebra& f);

/// Kernel of the trace form; the Jacobson radical in characteristic 0.
std::vector<SparseVec> radical_basis(const MonomialAlgebra& f, Exec exec = Exec::parallel);
int radical_dim(const MonomialAlgebra& f, Exec exec = Exec::parallel);
bool is_semisimple(const MonomialAlgebra& f, Exec exec = Exec::parallel);

/// r e_b and e_b r lie in span(basis) for every r in basis and every b.
bool is_two_sided_ideal(const MonomialAlgebra& f, const std::vector<SparseVec>& basis, Exec exec = Exec::parallel);

struct FiberReport {
  int center_dim = 0;
  int center_dim_dense = -1;  // -1 when not computed
  int radical_dim = 0;
  bool semisimple = false;
  int radical_ideal = -1;  // 1 / 0, -1 when not computed
};

FiberReport analyze_fiber(const FiberAlgebra& f, bool with_oracles, Exec exec = Exec::parallel);

}  // namespace qfq
