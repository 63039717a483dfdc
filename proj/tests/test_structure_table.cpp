#include <doctest.h>

#include "fixtures.hpp"
#include "qfq/parallel.hpp"
#include "qfq/structure_table.hpp"

using namespace qfq;
using qfq::test::canonical_matrix;

namespace {

const MultiIndex kGen[4] = {MultiIndex({1, 0, 0, 0, 4}), MultiIndex({0, 1, 0, 0, 4}), MultiIndex({0, 0, 1, 0, 4}),
                            MultiIndex({0, 0, 0, 1, 4})};

}  // namespace

TEST_CASE("bilinear exponent on generators") {
  const QMatrix n = canonical_matrix();
  // the only i > j term is n_41 a_4 b_1
  CHECK(bilinear_exponent(n, kGen[0], kGen[1]) == Mod5(4 * n(4, 1).value()));
  CHECK(bilinear_exponent(n, kGen[1], kGen[0]) == Mod5(4 * n(4, 0).value() + n(1, 0).value()));
  CHECK(bilinear_exponent(n, MultiIndex(), kGen[2]) == Mod5(0));
  CHECK(bilinear_exponent(QMatrix(), kGen[2], kGen[3]) == Mod5(0));
}

TEST_CASE("parallel and serial table builds agree") {
  set_threads(3);
  for (const QMatrix& n : test::seeded_admissible(6, 11)) {
    const StructureTable p = build_table(n, Exec::parallel);
    const StructureTable s = build_table_serial(n);
    CHECK(p.exponent_data() == s.exponent_data());
    CHECK(build_table(n, Exec::serial).exponent_data() == s.exponent_data());
  }
  set_threads(0);
  QMatrix bad;
  bad.set(0, 1, Mod5(1));
  CHECK_THROWS_AS(build_table(bad), std::invalid_argument);
  CHECK_THROWS_AS(build_table_serial(bad), std::invalid_argument);
}

TEST_CASE("entries") {
  const StructureTable t = build_table(canonical_matrix());
  const auto e = t.entry(kGen[0], kGen[1]);
  CHECK(e.target == MultiIndex({1, 1, 0, 0, 3}));
  CHECK(e.carry.mask() == 0b10000);
  CHECK(e.exp == bilinear_exponent(canonical_matrix(), kGen[0], kGen[1]));
}

TEST_CASE("exact verification passes on valid tables") {
  for (const QMatrix& n : test::seeded_admissible(4, 5)) {
    const VerifyResult r = verify_associativity(build_table(n), {});
    CHECK(r.ok);
    CHECK_FALSE(r.violation.has_value());
  }
}

TEST_CASE("exact verification catches a corrupted exponent") {
  StructureTable t = build_table(canonical_matrix());
  const int a = kGen[0].id(), b = kGen[2].id();
  t.set_exponent(a, b, t.exponent(a, b) + Mod5(1));
  const VerifyResult r = verify_associativity(t, {});
  CHECK_FALSE(r.ok);
  REQUIRE(r.violation.has_value());
  CHECK(r.violation->kind == "exponent");

  // the corruption is also a genuine associativity failure
  bool found = false;
  for (int c = 0; c < kIndexCount && !found; ++c)
    found = !triple_associates(t, a, b, c) || !triple_associates(t, c, a, b) || !triple_associates(t, a, c, b);
  CHECK(found);
}

TEST_CASE("exact verification catches a corrupted carry and target") {
  StructureTable t = build_table(canonical_matrix());
  const int a = kGen[1].id(), b = kGen[3].id();
  t.set_entry(a, b, t.exponent(a, b), CarryVector(0), t.target(a, b));
  VerifyResult r = verify_associativity(t, {});
  CHECK_FALSE(r.ok);
  CHECK(r.violation->kind == "carry");

  StructureTable u = build_table(canonical_matrix());
  u.set_entry(a, b, u.exponent(a, b), u.carry(a, b), index_tables().zero_id);
  r = verify_associativity(u, {});
  CHECK_FALSE(r.ok);
  CHECK(r.violation->kind == "target");
  // the shared addition tables are untouched
  CHECK(build_table(canonical_matrix()).target(a, b) != index_tables().zero_id);
}

TEST_CASE("sampled verification is deterministic and thread independent") {
  StructureTable t = build_table(canonical_matrix());
  VerifyOptions o;
  o.mode = VerifyMode::sampled;
  o.samples = 200000;
  o.seed = 42;
  set_threads(1);
  const VerifyResult one = verify_associativity(t, o);
  set_threads(4);
  const VerifyResult four = verify_associativity(t, o);
  o.exec = Exec::serial;
  const VerifyResult serial = verify_associativity(t, o);
  set_threads(0);
  CHECK(one.ok);
  CHECK(one.checks == 200000);
  CHECK(four.ok);
  CHECK(serial.ok);

  // a wrong cocycle on a single pair is found by sampling only if a sample
  // hits it; corrupt a whole row instead
  for (int b = 0; b < kIndexCount; ++b) t.set_exponent(kGen[0].id(), b, t.exponent(kGen[0].id(), b) + Mod5(b % 2));
  o.exec = Exec::parallel;
  set_threads(1);
  const VerifyResult bad1 = verify_associativity(t, o);
  set_threads(3);
  const VerifyResult bad3 = verify_associativity(t, o);
  set_threads(0);
  CHECK_FALSE(bad1.ok);
  REQUIRE(bad1.violation.has_value());
  REQUIRE(bad3.violation.has_value());
  CHECK(bad1.violation->indices == bad3.violation->indices);
}

TEST_CASE("full triple verification on a small budget") {
  const StructureTable t = build_table(canonical_matrix());
  VerifyOptions o;
  o.mode = VerifyMode::full_triple;
  o.budget_seconds = 1e-4;
  CHECK_THROWS_AS(verify_associativity(t, o), BudgetExceeded);
}

TEST_CASE("Frobenius pairing") {
  for (const QMatrix& n : test::seeded_admissible(5, 3)) {
    const StructureTable t = build_table(n);
    const PairingMatrix p = frobenius_pairing(t);
    CHECK(p.is_perfect());
    CHECK(p.nonzeros.size() == kIndexCount);
    for (const auto& e : p.nonzeros) {
      CHECK(e.col == complement(MultiIndex::from_id(e.row)).id());
      CHECK(e.carries == 0);
    }
  }
}

TEST_CASE("symmetry depends on equal row sums, not zero row sums") {
  // q_{a,4-a} / q_{4-a,a} = q^{4 sum_k a_k r_k} with r_k the row sums
  const QMatrix n = act_twist(canonical_matrix(), {Mod5(1), Mod5(0), Mod5(0), Mod5(0), Mod5(0)});
  REQUIRE(is_admissible(n));
  CHECK_FALSE(row_sum_criterion(n));
  CHECK(is_symmetric_pairing(build_table(n)));
  const CyCertificate c = cy_certificate(n);
  CHECK(c.pass);
  CHECK_FALSE(c.row_sum_criterion);

  // skew-symmetric with unequal row sums: not admissible, and not symmetric
  QMatrix skew;
  skew.set(0, 1, Mod5(1));
  skew.set(1, 0, Mod5(4));
  REQUIRE_FALSE(is_admissible(skew));
  StructureTable t(skew);
  const auto& all = enumerate_index_set();
  for (int a = 0; a < kIndexCount; ++a)
    for (int b = 0; b < kIndexCount; ++b) t.set_exponent(a, b, bilinear_exponent(skew, all[a], all[b]));
  CHECK_FALSE(is_symmetric_pairing(t));
  CHECK(cy_certificate(t).verdict == "Frobenius, not symmetric");
}

TEST_CASE("symmetry over a sample of admissible matrices") {
  for (const QMatrix& n : test::seeded_admissible(40, 8)) CHECK(is_symmetric_pairing(build_table(n)));
  CHECK(is_symmetric_pairing(build_table(QMatrix())));
}

TEST_CASE("certificate on the canonical representative") {
  const CyCertificate c = cy_certificate(canonical_matrix());
  CHECK(c.pass);
  CHECK(c.associativity.ok);
  CHECK(c.nondegenerate);
  CHECK(c.symmetric);
  CHECK(c.row_sum_criterion);
  CHECK(c.verdict == "Calabi-Yau pairing criterion satisfied");
  QMatrix bad;
  bad.set(2, 3, Mod5(1));
  CHECK_THROWS_AS(cy_certificate(bad), std::invalid_argument);
}
