#include "qfq/fiber.hpp"

#include <sstream>
#include <stdexcept>

namespace qfq {

SparseVec MonomialAlgebra::multiply(const SparseVec& u, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, x] : u)
    for (const auto& [j, y] : v) {
      const CycNum c = coeff(static_cast<int>(i), static_cast<int>(j));
      if (c.is_zero()) continue;
      SparseVec term{{static_cast<std::uint32_t>(target(static_cast<int>(i), static_cast<int>(j))), c}};
      axpy(out, x * y, term);
    }
  return out;
}

std::vector<std::uint32_t> TableAlgebra::targets_of(int dim, const std::vector<Product>& products) {
  if (static_cast<std::size_t>(dim) * dim != products.size())
    throw std::invalid_argument("TableAlgebra: expected dim^2 products");
  std::vector<std::uint32_t> t;
  t.reserve(products.size());
  for (const auto& p : products) {
    if (p.target < 0 || p.target >= dim) throw std::invalid_argument("TableAlgebra: target out of range");
    t.push_back(static_cast<std::uint32_t>(p.target));
  }
  return t;
}

TableAlgebra::TableAlgebra(int dim, std::vector<Product> products)
    : MonomialAlgebra(dim, targets_of(dim, products)) {
  coeffs_.reserve(products.size());
  for (auto& p : products) coeffs_.push_back(std::move(p.coeff));
}

FiberPoint FiberPoint::parse(const std::string& s) {
  FiberPoint p;
  std::stringstream ss(s);
  std::string tok;
  int k = 0;
  while (std::getline(ss, tok, ',')) {
    if (k >= 5) throw std::invalid_argument("point must have exactly 5 coordinates");
    Rational r;
    try {
      r = Rational(tok);
      r.canonicalize();
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("point coordinate '" + tok + "' is not a rational number");
    }
    p.coords[k++] = CycNum(r);
  }
  if (k != 5) throw std::invalid_argument("point must have exactly 5 coordinates");
  return p;
}

void FiberPoint::validate() const {
  CycNum s;
  bool nonzero = false;
  for (const auto& x : coords) {
    s += x;
    nonzero = nonzero || !x.is_zero();
  }
  if (!nonzero) throw std::invalid_argument("point has all coordinates zero");
  if (!s.is_zero()) throw std::invalid_argument("point does not lie on X: sum of coordinates is " + s.to_string());
}

bool FiberPoint::full_support() const {
  for (const auto& x : coords)
    if (x.is_zero()) return false;
  return true;
}

FiberPoint FiberPoint::scaled(const CycNum& lambda) const {
  FiberPoint p;
  for (int i = 0; i < 5; ++i) p.coords[i] = coords[i] * lambda;
  return p;
}

std::string FiberPoint::to_string() const {
  std::string s;
  for (int i = 0; i < 5; ++i) s += (i ? "," : "") + coords[i].to_string();
  return s;
}

FiberAlgebra::FiberAlgebra(StructureTable table, FiberPoint point)
    : MonomialAlgebra(kIndexCount,
                      [&] {
                        std::vector<std::uint32_t> t(static_cast<std::size_t>(kIndexCount) * kIndexCount);
                        for (int a = 0; a < kIndexCount; ++a)
                          for (int b = 0; b < kIndexCount; ++b)
                            t[static_cast<std::size_t>(a) * kIndexCount + b] = static_cast<std::uint32_t>(table.target(a, b));
                        return t;
                      }()),
      table_(std::move(table)),
      point_(std::move(point)) {
  for (unsigned mask = 0; mask < 32; ++mask) {
    CycNum p = CycNum::one();
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) p *= point_.coords[i];
    carry_products_[mask] = p;
  }
}

CycNum FiberAlgebra::coeff(int a, int b) const {
  return carry_products_[table_.carry(a, b).mask()].times_root(table_.exponent(a, b));
}

FiberAlgebra specialize(const StructureTable& t, const FiberPoint& p) {
  p.validate();
  const VerifyResult v = verify_associativity(t, {});
  if (!v.ok) throw std::invalid_argument("specialize: table fails associativity verification (" + v.violation->kind + ")");
  return FiberAlgebra(t, p);
}

int center_dim(const FiberAlgebra& f) {
  const StructureTable& t = f.table();
  int dim = 0;
  for (int a = 0; a < kIndexCount; ++a) {
    bool central = true;
    for (int b = 0; b < kIndexCount && central; ++b) {
      if (f.carry_product(t.carry(a, b).mask()).is_zero()) continue;
      central = t.exponent(a, b) == t.exponent(b, a);
    }
    dim += central;
  }
  return dim;
}

namespace {

// Rows of the commutator map z -> z e_b - e_b z, indexed by output coordinate.
std::vector<SparseVec> commutator_rows(const MonomialAlgebra& f, int b) {
  const int n = f.dim();
  std::vector<SparseVec> rows(n);
  for (int a = 0; a < n; ++a) {
    const CycNum right = f.coeff(a, b);
    if (!right.is_zero()) axpy(rows[f.target(a, b)], CycNum::one(), SparseVec{{static_cast<std::uint32_t>(a), right}});
    const CycNum left = f.coeff(b, a);
    if (!left.is_zero()) axpy(rows[f.target(b, a)], CycNum(-1L), SparseVec{{static_cast<std::uint32_t>(a), left}});
  }
  std::erase_if(rows, [](const SparseVec& r) { return r.empty(); });
  return rows;
}

CycNum trace_entry(const MonomialAlgebra& f, int a, int b) {
  // trace(L_a L_b) = sum_c [a (b c) lands on c] coeff(b,c) coeff(a, bc).
  CycNum s;
  for (int c = 0; c < f.dim(); ++c) {
    const int bc = f.target(b, c);
    if (f.target(a, bc) != c) continue;
    s += f.coeff(b, c) * f.coeff(a, bc);
  }
  return s;
}

SparseVec trace_row(const MonomialAlgebra& f, int a) {
  SparseVec row;
  for (int b = 0; b < f.dim(); ++b) {
    CycNum v = trace_entry(f, a, b);
    if (!v.is_zero()) row.emplace(static_cast<std::uint32_t>(b), std::move(v));
  }
  return row;
}

}  // namespace

int center_dim_dense(const MonomialAlgebra& f, Exec exec) {
  const int n = f.dim();
  RowEchelon ech(static_cast<std::uint32_t>(n));
  constexpr int kBatch = 25;
  for (int b0 = 0; b0 < n; b0 += kBatch) {
    const int b1 = std::min(n, b0 + kBatch);
    std::vector<std::vector<SparseVec>> batch(b1 - b0);
    if (exec == Exec::serial) {
      for (int b = b0; b < b1; ++b) batch[b - b0] = commutator_rows(f, b);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (int b = b0; b < b1; ++b) batch[b - b0] = commutator_rows(f, b);
    }
    for (auto& rows : batch)
      for (auto& r : rows) ech.insert(std::move(r));
  }
  return n - static_cast<int>(ech.rank());
}

std::vector<SparseVec> trace_form_serial(const MonomialAlgebra& f) {
  std::vector<SparseVec> rows(f.dim());
  for (int a = 0; a < f.dim(); ++a) rows[a] = trace_row(f, a);
  return rows;
}

std::vector<SparseVec> trace_form(const MonomialAlgebra& f, Exec exec) {
  if (exec == Exec::serial) return trace_form_serial(f);
  std::vector<SparseVec> rows(f.dim());
#pragma omp parallel for schedule(dynamic, 8)
  for (int a = 0; a < f.dim(); ++a) rows[a] = trace_row(f, a);
  return rows;
}

std::vector<SparseVec> radical_basis(const MonomialAlgebra& f, Exec exec) {
  RowEchelon ech(static_cast<std::uint32_t>(f.dim()));
  for (auto& row : trace_form(f, exec)) ech.insert(std::move(row));
  return ech.nullspace();
}

int radical_dim(const MonomialAlgebra& f, Exec exec) { return static_cast<int>(radical_basis(f, exec).size()); }

bool is_semisimple(const MonomialAlgebra& f, Exec exec) { return radical_dim(f, exec) == 0; }

bool is_two_sided_ideal(const MonomialAlgebra& f, const std::vector<SparseVec>& basis, Exec exec) {
  RowEchelon span(static_cast<std::uint32_t>(f.dim()));
  for (const auto& v : basis) span.insert(v);
  const int n = f.dim();
  auto closed_under = [&](int b) {
    const SparseVec eb{{static_cast<std::uint32_t>(b), CycNum::one()}};
    for (const auto& r : basis) {
      if (!span.contains(f.multiply(r, eb))) return false;
      if (!span.contains(f.multiply(eb, r))) return false;
    }
    return true;
  };
  bool ok = true;
  if (exec == Exec::serial) {
    for (int b = 0; b < n && ok; ++b) ok = closed_under(b);
  } else {
#pragma omp parallel for schedule(dynamic, 4) reduction(&& : ok)
    for (int b = 0; b < n; ++b) ok = ok && closed_under(b);
  }
  return ok;
}

FiberReport analyze_fiber(const FiberAlgebra& f, bool with_oracles, Exec exec) {
  FiberReport r;
  r.center_dim = center_dim(f);
  const auto rad = radical_basis(f, exec);
  r.radical_dim = static_cast<int>(rad.size());
  r.semisimple = rad.empty();
  if (with_oracles) {
    r.center_dim_dense = center_dim_dense(f, exec);
    r.radical_ideal = is_two_sided_ideal(f, rad, exec) ? 1 : 0;
  }
  return r;
}

}  // namespace qfq
