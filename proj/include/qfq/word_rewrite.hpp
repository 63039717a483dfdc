#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qfq/qparams.hpp"
#include "qfq/scalar.hpp"

namespace qfq {

/// Word in the generators t_0..t_4; its length is its degree.
using Word = std::vector<int>;

/// Exponent vector of t_0^e0 t_1^e1 t_2^e2 t_3^e3 t_4^e4. Standard when e0 <= 4.
using Monomial = std::array<int, 5>;

int degree(const Monomial& m);

/// Element of A = C<t_0..t_4> / (sum t_k^5, t_i t_j - q_ij t_j t_i) in the
/// standard monomial basis. Never stores zero coefficients.
class AlgElement {
public:
  AlgElement() = default;
  static AlgElement one();
  static AlgElement generator(int i);
  static AlgElement monomial(const Monomial& m, CycNum coeff = CycNum::one());

  const std::map<Monomial, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree if all terms share one; -1 for zero or mixed degree.
  int homogeneous_degree() const;

  void add_term(const Monomial& m, const CycNum& c);

  friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
  friend bool operator==(const AlgElement&, const AlgElement&) = default;

  std::string to_string() const;

private:
  std::map<Monomial, CycNum> terms_;
};

/// Reduces a word: sorts letters into nondecreasing order collecting q_ij per
/// adjacent swap t_i t_j -> q_ij t_j t_i, then rewrites t_0^5 as
/// -(t_1^5 + t_2^5 + t_3^5 + t_4^5) until e0 <= 4.
/// Throws std::invalid_argument for a non-admissible matrix or a letter outside 0..4.
AlgElement normal_form(const Word& w, const QMatrix& n);

/// Normal form of the product; bilinear extension of monomial products.
AlgElement multiply(const AlgElement& x, const AlgElement& y, const QMatrix& n);

/// x t_i == t_i x for every generator. Throws std::invalid_argument unless x
/// is homogeneous (zero counts as homogeneous).
bool is_central(const AlgElement& x, const QMatrix& n);

/// Number of standard monomials of degree d: #{e : sum e = d, e0 <= 4}.
/// Independent of the quantum parameters.
std::int64_t graded_dimension(int d);

/// Reduces w by applying single rewrite steps (one adjacent swap of an
/// out-of-order pair, or one t_0^5 block substitution) chosen at random from
/// all applicable positions of all terms. Terminates because each step
/// lowers (#t_0, #inversions) lexicographically. Used to witness confluence.
AlgElement reduce_randomized(const Word& w, const QMatrix& n, std::mt19937_64& rng);

}  // namespace qfq
