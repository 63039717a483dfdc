#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qfq/word_rewrite.hpp"

using namespace qfq;
using qfq::test::canonical_matrix;
using qfq::test::generic_with_nonzero_row0;

namespace {

Word random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 4);
  Word w(len(rng));
  for (int& x : w) x = letter(rng);
  return w;
}

}  // namespace

TEST_CASE("graded dimension") {
  CHECK(graded_dimension(0) == 1);
  CHECK(graded_dimension(1) == 5);
  CHECK(graded_dimension(4) == 70);
  CHECK(graded_dimension(5) == 125);
  CHECK(graded_dimension(10) == 875);
  CHECK(graded_dimension(15) == 2875);
}

TEST_CASE("sorted words are standard") {
  const QMatrix n = canonical_matrix();
  CHECK(normal_form({}, n) == AlgElement::one());
  CHECK(normal_form({0, 1, 1, 4}, n) == AlgElement::monomial({1, 2, 0, 0, 1}));
  CHECK(normal_form({2}, n) == AlgElement::generator(2));
}

TEST_CASE("one swap picks up q_ij") {
  const QMatrix n = generic_with_nonzero_row0();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < i; ++j) {
      Monomial m{};
      ++m[i];
      ++m[j];
      CHECK(normal_form({i, j}, n) == AlgElement::monomial(m, root_power(n(i, j))));
    }
}

TEST_CASE("quintic relation") {
  for (const QMatrix& n : {canonical_matrix(), generic_with_nonzero_row0(), QMatrix()}) {
    AlgElement sum;
    for (int k = 0; k < 5; ++k) sum = sum + normal_form(Word(5, k), n);
    CHECK(sum.is_zero());
    const AlgElement t05 = normal_form(Word(5, 0), n);
    CHECK(t05.terms().size() == 4);
    CHECK(t05.homogeneous_degree() == 5);
  }
}

TEST_CASE("centrality") {
  const QMatrix g = generic_with_nonzero_row0();
  for (int k = 0; k < 5; ++k) {
    CHECK(is_central(normal_form(Word(5, k), canonical_matrix()), canonical_matrix()));
    CHECK(is_central(normal_form(Word(5, k), g), g));
  }
  CHECK_FALSE(is_central(AlgElement::generator(0), g));
  // a zero row makes t_0 commute with everything
  CHECK(is_central(AlgElement::generator(0), canonical_matrix()));
  CHECK_FALSE(is_central(AlgElement::generator(1), canonical_matrix()));
  CHECK(is_central(AlgElement::one(), g));
  CHECK_THROWS_AS(is_central(AlgElement::one() + AlgElement::generator(1), g), std::invalid_argument);
}

TEST_CASE("input validation") {
  QMatrix bad;
  bad.set(0, 1, Mod5(1));
  CHECK_THROWS_AS(normal_form({0, 1}, bad), std::invalid_argument);
  CHECK_THROWS_AS(normal_form({0, 5}, canonical_matrix()), std::invalid_argument);
  CHECK_THROWS_AS(normal_form({-1}, canonical_matrix()), std::invalid_argument);
}

TEST_CASE("multiplication is associative and degree additive") {
  const QMatrix n = generic_with_nonzero_row0();
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 300; ++it) {
    const AlgElement x = normal_form(random_word(rng, 6), n);
    const AlgElement y = normal_form(random_word(rng, 6), n);
    const AlgElement z = normal_form(random_word(rng, 6), n);
    CHECK(multiply(multiply(x, y, n), z, n) == multiply(x, multiply(y, z, n), n));
    const AlgElement xy = multiply(x, y, n);
    CHECK(xy.homogeneous_degree() == x.homogeneous_degree() + y.homogeneous_degree());
  }
}

TEST_CASE("normal form is a homomorphism from words") {
  const QMatrix n = canonical_matrix();
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const Word u = random_word(rng, 6), v = random_word(rng, 6);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(normal_form(uv, n) == multiply(normal_form(u, n), normal_form(v, n), n));
  }
}

TEST_CASE("randomized rewrite schedules agree with the normal form") {
  const QMatrix n = generic_with_nonzero_row0();
  std::mt19937_64 words(99), schedule(100);
  for (int it = 0; it < 300; ++it) {
    const Word w = random_word(words, 8);
    const AlgElement nf = normal_form(w, n);
    CHECK(reduce_randomized(w, n, schedule) == nf);
    CHECK(reduce_randomized(w, n, schedule) == nf);
  }
  const Word deep{3, 0, 2, 0, 1, 0, 4, 0, 0, 0, 2, 1};
  CHECK(reduce_randomized(deep, n, schedule) == normal_form(deep, n));
}
