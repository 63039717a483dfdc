#include "qfq/structure_table.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>

namespace qfq {

namespace {

constexpr int kN = kIndexCount;

// dot[r * 625 + b] = sum_j r_j b_j mod 5, for every r in (Z/5)^5 (base-5 code).
const std::vector<std::uint8_t>& dot_table() {
  static const std::vector<std::uint8_t> table = [] {
    std::vector<std::uint8_t> t(3125 * kN);
    const auto& all = enumerate_index_set();
    for (int r = 0; r < 3125; ++r) {
      std::array<int, 5> rv{};
      for (int j = 4, x = r; j >= 0; --j, x /= 5) rv[j] = x % 5;
      for (int b = 0; b < kN; ++b) {
        int s = 0;
        for (int j = 0; j < 5; ++j) s += rv[j] * all[b][j];
        t[r * kN + b] = static_cast<std::uint8_t>(s % 5);
      }
    }
    return t;
  }();
  return table;
}

// Code of the row vector r_j = sum_{i>j} n_ij a_i, so that exp(a,b) = r . b.
int left_form_code(const QMatrix& n, const MultiIndex& a) {
  int code = 0;
  for (int j = 0; j < 5; ++j) {
    int s = 0;
    for (int i = j + 1; i < 5; ++i) s += n(i, j).value() * a[i];
    code = code * 5 + s % 5;
  }
  return code;
}

const std::array<MultiIndex, 4>& generators() {
  static const std::array<MultiIndex, 4> g = {MultiIndex({1, 0, 0, 0, 4}), MultiIndex({0, 1, 0, 0, 4}),
                                              MultiIndex({0, 0, 1, 0, 4}), MultiIndex({0, 0, 0, 1, 4})};
  return g;
}

std::string describe(const MultiIndex& a) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

Violation triple_violation(const StructureTable& t, int a, int b, int c) {
  const auto& all = enumerate_index_set();
  Violation v;
  v.indices = {all[a], all[b], all[c]};
  const int ab = t.target(a, b), bc = t.target(b, c);
  if (t.target(ab, c) != t.target(a, bc)) {
    v.kind = "target-associativity";
  } else if (t.exponent(a, b) + t.exponent(ab, c) != t.exponent(b, c) + t.exponent(a, bc)) {
    v.kind = "cocycle";
    v.detail = "exp(a,b)+exp(a+b,c) = " + std::to_string((t.exponent(a, b) + t.exponent(ab, c)).value()) +
               ", exp(b,c)+exp(a,b+c) = " + std::to_string((t.exponent(b, c) + t.exponent(a, bc)).value());
  } else {
    v.kind = "carry-associativity";
  }
  if (v.detail.empty())
    v.detail = "(e_a e_b) e_c != e_a (e_b e_c) for a=" + describe(all[a]) + " b=" + describe(all[b]) +
               " c=" + describe(all[c]);
  return v;
}

// Looks for a triple through the pair (a,b) at which associativity fails.
std::optional<Violation> triple_through_pair(const StructureTable& t, int a, int b) {
  for (int c = 0; c < kN; ++c) {
    if (!triple_associates(t, a, b, c)) return triple_violation(t, a, b, c);
    if (!triple_associates(t, c, a, b)) return triple_violation(t, c, a, b);
  }
  return std::nullopt;
}

Violation pair_violation(std::string kind, const StructureTable& t, int a, int b, std::string detail) {
  const auto& all = enumerate_index_set();
  Violation v{std::move(kind), {all[a], all[b]}, std::move(detail)};
  if (auto tri = triple_through_pair(t, a, b)) {
    v.indices = tri->indices;
    v.detail += "; violating triple a=" + describe(tri->indices[0]) + " b=" + describe(tri->indices[1]) +
                " c=" + describe(tri->indices[2]);
  }
  return v;
}

VerifyResult verify_exact(const StructureTable& t) {
  VerifyResult r;
  r.mode = VerifyMode::exact_bilinear;
  const auto& all = enumerate_index_set();
  const QMatrix& n = t.source_matrix();

  for (int a = 0; a < kN; ++a)
    for (int b = 0; b < kN; ++b) {
      ++r.checks;
      auto [sum, carry] = index_add(all[a], all[b]);
      if (t.target(a, b) != sum.id()) {
        r.ok = false;
        r.violation = pair_violation("target", t, a, b, "target differs from the digitwise sum mod 5");
        return r;
      }
      if (t.carry(a, b) != carry) {
        r.ok = false;
        r.violation = pair_violation("carry", t, a, b, "carry flags differ from a_i + b_i >= 5");
        return r;
      }
      if (t.exponent(a, b) != bilinear_exponent(n, all[a], all[b])) {
        r.ok = false;
        r.violation = pair_violation("exponent", t, a, b, "exponent differs from the bilinear form of the source matrix");
        return r;
      }
    }

  for (const MultiIndex& g : generators()) {
    const int gi = g.id();
    for (int a = 0; a < kN; ++a) {
      const int ga = t.target(gi, a);
      for (int b = 0; b < kN; ++b) {
        r.checks += 2;
        if (t.exponent(ga, b) != t.exponent(gi, b) + t.exponent(a, b)) {
          r.ok = false;
          r.violation = pair_violation("bilinear-witness", t, a, b, "exp(g+a,b) != exp(g,b) + exp(a,b)");
          return r;
        }
        if (t.exponent(b, ga) != t.exponent(b, gi) + t.exponent(b, a)) {
          r.ok = false;
          r.violation = pair_violation("bilinear-witness", t, b, a, "exp(b,g+a) != exp(b,g) + exp(b,a)");
          return r;
        }
      }
    }
  }
  return r;
}

constexpr std::int64_t kNoViolation = std::numeric_limits<std::int64_t>::max();

VerifyResult verify_full(const StructureTable& t, double budget, Exec exec) {
  VerifyResult r;
  r.mode = VerifyMode::full_triple;
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> over_budget{false};
  std::int64_t first = kNoViolation;
  auto row = [&](int a) -> std::int64_t {
    for (int b = 0; b < kN; ++b)
      for (int c = 0; c < kN; ++c)
        if (!triple_associates(t, a, b, c)) return (static_cast<std::int64_t>(a) * kN + b) * kN + c;
    return kNoViolation;
  };
  auto check_budget = [&] {
    if (budget <= 0) return;
    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    if (el.count() > budget) over_budget = true;
  };
  if (exec == Exec::serial) {
    for (int a = 0; a < kN && first == kNoViolation && !over_budget; ++a) {
      first = row(a);
      check_budget();
    }
  } else {
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first)
    for (int a = 0; a < kN; ++a) {
      if (over_budget.load(std::memory_order_relaxed)) continue;
      first = std::min(first, row(a));
      check_budget();
    }
  }
  if (over_budget) throw BudgetExceeded("full-triple verification exceeded its time budget");
  r.checks = static_cast<std::uint64_t>(kN) * kN * kN;
  if (first != kNoViolation) {
    r.ok = false;
    const int c = static_cast<int>(first % kN);
    const int b = static_cast<int>((first / kN) % kN);
    const int a = static_cast<int>(first / (static_cast<std::int64_t>(kN) * kN));
    r.violation = triple_violation(t, a, b, c);
  }
  return r;
}

constexpr std::uint64_t kSampleChunk = 1 << 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

VerifyResult verify_sampled(const StructureTable& t, std::uint64_t samples, std::uint64_t seed, Exec exec) {
  VerifyResult r;
  r.mode = VerifyMode::sampled;
  r.samples = samples;
  r.seed = seed;
  r.checks = samples;
  const std::int64_t chunks = static_cast<std::int64_t>((samples + kSampleChunk - 1) / kSampleChunk);
  // Each chunk draws from its own generator, so the sample sequence does not
  // depend on the thread count.
  auto chunk = [&](std::int64_t k, std::array<int, 3>& hit) -> std::int64_t {
    std::mt19937_64 gen(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(k))));
    std::uniform_int_distribution<int> pick(0, kN - 1);
    const std::uint64_t lo = static_cast<std::uint64_t>(k) * kSampleChunk;
    const std::uint64_t hi = std::min(samples, lo + kSampleChunk);
    for (std::uint64_t s = lo; s < hi; ++s) {
      const int a = pick(gen), b = pick(gen), c = pick(gen);
      if (!triple_associates(t, a, b, c)) {
        hit = {a, b, c};
        return static_cast<std::int64_t>(s);
      }
    }
    return kNoViolation;
  };
  std::vector<std::int64_t> first(chunks, kNoViolation);
  std::vector<std::array<int, 3>> hits(chunks);
  if (exec == Exec::serial) {
    for (std::int64_t k = 0; k < chunks; ++k) first[k] = chunk(k, hits[k]);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < chunks; ++k) first[k] = chunk(k, hits[k]);
  }
  for (std::int64_t k = 0; k < chunks; ++k)
    if (first[k] != kNoViolation) {
      r.ok = false;
      r.violation = triple_violation(t, hits[k][0], hits[k][1], hits[k][2]);
      r.violation->detail += "; sample #" + std::to_string(first[k]);
      break;
    }
  return r;
}

}  // namespace

Mod5 bilinear_exponent(const QMatrix& n, const MultiIndex& a, const MultiIndex& b) {
  int s = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < i; ++j) s += n(i, j).value() * a[i] * b[j];
  return Mod5(s);
}

StructureTable::StructureTable(const QMatrix& source)
    : source_(source), exp_(static_cast<std::size_t>(kN) * kN, 0) {
  const IndexTables& it = index_tables();
  // Non-owning views of the process-wide index tables.
  target_ = std::shared_ptr<const std::vector<std::uint16_t>>(&it.sum, [](const void*) {});
  carry_ = std::shared_ptr<const std::vector<std::uint8_t>>(&it.carry, [](const void*) {});
}

StructureTable::Entry StructureTable::entry(const MultiIndex& a, const MultiIndex& b) const {
  const int ia = a.id(), ib = b.id();
  return {a, b, MultiIndex::from_id(target(ia, ib)), exponent(ia, ib), carry(ia, ib)};
}

namespace {

// Copy-on-write: writes in place only when this table is the sole owner.
template <class T>
void write_shared(std::shared_ptr<const std::vector<T>>& data, bool& owned, std::size_t k, T value) {
  if ((*data)[k] == value) return;
  if (!owned || data.use_count() != 1) {
    data = std::make_shared<const std::vector<T>>(*data);
    owned = true;
  }
  const_cast<std::vector<T>&>(*data)[k] = value;
}

}  // namespace

void StructureTable::set_entry(int a, int b, Mod5 exp, CarryVector carry, int target) {
  const std::size_t k = static_cast<std::size_t>(a) * kN + b;
  exp_[k] = static_cast<std::uint8_t>(exp.value());
  write_shared(carry_, owns_carry_, k, carry.mask());
  write_shared(target_, owns_target_, k, static_cast<std::uint16_t>(target));
}

StructureTable build_table(const QMatrix& n, Exec exec) {
  if (exec == Exec::serial) return build_table_serial(n);
  if (!is_admissible(n)) throw std::invalid_argument("build_table: matrix is not admissible");
  StructureTable t(n);
  const auto& all = enumerate_index_set();
  const auto& dot = dot_table();
  auto& exp = t.exponent_data();
#pragma omp parallel for schedule(static)
  for (int a = 0; a < kN; ++a) {
    const int code = left_form_code(n, all[a]);
    std::copy_n(dot.begin() + static_cast<std::ptrdiff_t>(code) * kN, kN, exp.begin() + static_cast<std::ptrdiff_t>(a) * kN);
  }
  return t;
}

StructureTable build_table_serial(const QMatrix& n) {
  if (!is_admissible(n)) throw std::invalid_argument("build_table: matrix is not admissible");
  StructureTable t(n);
  const auto& all = enumerate_index_set();
  for (int a = 0; a < kN; ++a)
    for (int b = 0; b < kN; ++b) t.set_exponent(a, b, bilinear_exponent(n, all[a], all[b]));
  return t;
}

bool triple_associates(const StructureTable& t, int a, int b, int c) {
  const int ab = t.target(a, b), bc = t.target(b, c);
  if (t.target(ab, c) != t.target(a, bc)) return false;
  if (t.exponent(a, b) + t.exponent(ab, c) != t.exponent(b, c) + t.exponent(a, bc)) return false;
  // Per-position carry counts (0, 1 or 2) agree iff both AND and XOR agree.
  const unsigned l1 = t.carry(a, b).mask(), l2 = t.carry(ab, c).mask();
  const unsigned r1 = t.carry(b, c).mask(), r2 = t.carry(a, bc).mask();
  return (l1 & l2) == (r1 & r2) && (l1 ^ l2) == (r1 ^ r2);
}

VerifyResult verify_associativity(const StructureTable& t, const VerifyOptions& opts) {
  switch (opts.mode) {
    case VerifyMode::exact_bilinear: return verify_exact(t);
    case VerifyMode::full_triple: return verify_full(t, opts.budget_seconds, opts.exec);
    case VerifyMode::sampled: return verify_sampled(t, opts.samples, opts.seed, opts.exec);
  }
  throw std::logic_error("verify_associativity: unknown mode");
}

bool PairingMatrix::is_perfect() const {
  std::vector<int> rows(kN, 0), cols(kN, 0);
  for (const auto& e : nonzeros) {
    ++rows[e.row];
    ++cols[e.col];
  }
  return std::all_of(rows.begin(), rows.end(), [](int x) { return x == 1; }) &&
         std::all_of(cols.begin(), cols.end(), [](int x) { return x == 1; });
}

CycNum PairingMatrix::entry(int a, int b) const {
  auto it = std::lower_bound(nonzeros.begin(), nonzeros.end(), a,
                             [](const PairingEntry& e, int row) { return e.row < row; });
  for (; it != nonzeros.end() && it->row == a; ++it)
    if (it->col == b) return it->value();
  return CycNum::zero();
}

PairingMatrix frobenius_pairing(const StructureTable& t) {
  PairingMatrix p;
  const int top = index_tables().top_id;
  for (int a = 0; a < kN; ++a)
    for (int b = 0; b < kN; ++b)
      if (t.target(a, b) == top) p.nonzeros.push_back({a, b, t.exponent(a, b), t.carry(a, b).count()});
  return p;
}

bool is_symmetric_pairing(const StructureTable& t) {
  const auto& all = enumerate_index_set();
  for (int a = 0; a < kN; ++a) {
    const int c = complement(all[a]).id();
    if (t.exponent(a, c) != t.exponent(c, a)) return false;
  }
  return true;
}

bool row_sum_criterion(const QMatrix& n) {
  for (int i = 0; i < 5; ++i)
    if (n.row_sum(i).value() != 0) return false;
  return true;
}

CyCertificate cy_certificate(const StructureTable& t) {
  CyCertificate c;
  c.associativity = verify_associativity(t, {});
  c.row_sum_criterion = row_sum_criterion(t.source_matrix());
  if (!c.associativity.ok) {
    c.verdict = "associativity failure";
    return c;
  }
  const PairingMatrix p = frobenius_pairing(t);
  c.nondegenerate = p.is_perfect() &&
                    std::all_of(p.nonzeros.begin(), p.nonzeros.end(), [](const PairingEntry& e) { return e.carries == 0; });
  c.symmetric = is_symmetric_pairing(t);
  if (!c.nondegenerate) c.verdict = "degenerate pairing";
  else if (!c.symmetric) c.verdict = "Frobenius, not symmetric";
  else {
    c.verdict = "Calabi-Yau pairing criterion satisfied";
    c.pass = true;
  }
  return c;
}

CyCertificate cy_certificate(const QMatrix& n) { return cy_certificate(build_table(n)); }

std::string to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::exact_bilinear: return "exact";
    case VerifyMode::full_triple: return "full";
    case VerifyMode::sampled: return "sampled";
  }
  return "?";
}

}  // namespace qfq
