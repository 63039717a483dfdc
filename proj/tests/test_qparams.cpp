#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qfq/parallel.hpp"
#include "qfq/qparams.hpp"

using namespace qfq;
using qfq::test::canonical_matrix;

TEST_CASE("predicates") {
  const QMatrix zero;
  CHECK(is_admissible(zero));
  CHECK_FALSE(is_generic(zero));
  CHECK(has_zero_row_sums(zero));

  const QMatrix c = canonical_matrix();
  CHECK(is_admissible(c));
  CHECK(is_generic(c));
  CHECK(has_zero_row_sums(c));

  QMatrix broken = c;
  broken.set(1, 2, Mod5(2));
  CHECK_FALSE(is_admissible(broken));
  QMatrix diag = zero;
  diag.set(0, 0, Mod5(1));
  CHECK_FALSE(is_admissible(diag));
}

TEST_CASE("enumeration counts") {
  const auto generic = enumerate_generic();
  CHECK(generic.size() == 3000);
  CHECK(std::is_sorted(generic.begin(), generic.end()));
  CHECK(std::all_of(generic.begin(), generic.end(), [](const QMatrix& n) { return is_generic(n) && has_zero_row_sums(n); }));
  CHECK(generic.front() == canonical_matrix());
  CHECK(enumerate_generic_any_row_sum().size() == 15000);
  CHECK(enumerate_admissible().size() == 78125);
}

TEST_CASE("serial and parallel enumeration agree") {
  set_threads(4);
  CHECK(enumerate_generic(Exec::parallel) == enumerate_generic_serial());
  CHECK(enumerate_generic(Exec::serial) == enumerate_generic_serial());
  set_threads(0);
}

TEST_CASE("actions preserve genericity") {
  const QMatrix c = canonical_matrix();
  for (int a = 1; a < 5; ++a) CHECK(is_generic(act_scale(c, a)));
  for (const auto& p : all_permutations()) CHECK(is_generic(act_permute(c, p)));
  const QMatrix t = act_twist(c, {Mod5(1), Mod5(2), Mod5(0), Mod5(0), Mod5(2)});
  CHECK(is_generic(t));
  CHECK(has_zero_row_sums(t));
  CHECK_THROWS_AS(act_scale(c, 0), std::invalid_argument);
  CHECK_THROWS_AS(act_permute(c, Permutation{0, 0, 1, 2, 3}), std::invalid_argument);
  CHECK(all_permutations().size() == 120);
}

TEST_CASE("a general twist moves the row sum") {
  const QMatrix t = act_twist(canonical_matrix(), {Mod5(1), Mod5(0), Mod5(0), Mod5(0), Mod5(0)});
  CHECK(is_admissible(t));
  CHECK(is_generic(t));
  CHECK(t.row_sum(0) == Mod5(4));
}

TEST_CASE("orbit sizes") {
  const QMatrix c = canonical_matrix();
  CHECK(orbit(c, ActionSet::all()).size() == 3000);
  CHECK(orbit(c, {Action::permute, Action::twist}).size() == 3000);
  CHECK(orbit(c, {Action::scale, Action::twist}).size() == 500);
  CHECK(orbit(c, {Action::twist}).size() == 125);
  CHECK(orbit(c, {Action::scale}).size() == 4);
  CHECK(canonical_form(act_scale(c, 3), ActionSet::all()) == c);
}

TEST_CASE("orbit partitions of the generic set") {
  const auto generic = enumerate_generic();
  struct Case {
    ActionSet actions;
    std::size_t orbits;
  };
  for (const Case& k : {Case{ActionSet::all(), 1}, Case{{Action::permute, Action::twist}, 1},
                        Case{{Action::scale, Action::twist}, 6}, Case{{Action::permute, Action::scale}, 16},
                        Case{{Action::twist}, 24}, Case{{Action::permute}, 29}, Case{{Action::scale}, 750}}) {
    const OrbitPartition p = partition_orbits(generic, k.actions);
    CAPTURE(k.actions.to_string());
    CHECK(p.representatives.size() == k.orbits);
    std::int64_t total = 0;
    for (auto s : p.sizes) total += s;
    CHECK(total == 3000);
  }
  const OrbitPartition perm = partition_orbits(generic, {Action::permute});
  CHECK(std::set<std::int64_t>(perm.sizes.begin(), perm.sizes.end()) == std::set<std::int64_t>{24, 120});
}

TEST_CASE("classification report") {
  const ClassificationReport r = classify();
  CHECK(r.generic_count == 3000);
  CHECK(r.orbit_count_all_actions == 1);
  CHECK(r.orbit_count_without_scaling == 1);
  CHECK(r.admissible_count == 78125);
  CHECK(r.generic_count_any_row_sum == 15000);
  REQUIRE(r.canonical_representatives.size() == 1);
  CHECK(r.canonical_representatives[0] == canonical_matrix());
}

TEST_CASE("action set parsing") {
  CHECK(ActionSet::parse("twist,scale") == ActionSet{Action::scale, Action::twist});
  CHECK(ActionSet::parse("").empty());
  CHECK(ActionSet::parse(ActionSet::all().to_string()) == ActionSet::all());
  CHECK_THROWS_AS(ActionSet::parse("rotate"), std::invalid_argument);
}
