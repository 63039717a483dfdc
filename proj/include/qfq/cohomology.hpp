#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qfq/scalar.hpp"

namespace qfq {

/// Polynomial in one variable n with exact rational coefficients, lowest
/// degree first, no trailing zeros.
class RatPolynomial {
public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  static RatPolynomial constant(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational operator()(const Rational& n) const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  std::string to_string() const;

private:
  std::vector<Rational> c_;
};

/// Direct sum of line bundles O(d)^{mult} on P^3.
struct TwistMultiset {
  std::vector<std::pair<int, std::int64_t>> parts;  // (twist d, multiplicity)

  /// Parses "0:1,-1:121". Throws std::invalid_argument on bad syntax or a
  /// non-positive multiplicity.
  static TwistMultiset parse(const std::string& s);
  /// O + O(-1)^121 + O(-2)^381 + O(-3)^121 + O(-4).
  static TwistMultiset sheaf_algebra();
  std::int64_t rank() const;
  std::string to_string() const;
};

/// chi(E(n)) = sum_d mult(d) * (n+d+1)(n+d+2)(n+d+3)/6.
RatPolynomial hilbert_polynomial(const TwistMultiset& tw);

/// dim H^i(P^3, O(d)). Throws std::invalid_argument unless 0 <= i <= 3.
std::int64_t cohomology_dim(int d, int i);

/// (h^0, h^1, h^2, h^3) of E(n) for E the given direct sum.
std::array<std::int64_t, 4> sheaf_cohomology(const TwistMultiset& tw, int n);

/// (h, p0 - h) with p0 the Hilbert polynomial of the sheaf algebra: the
/// Hilbert polynomials of a quotient and of its kernel.
/// Throws std::invalid_argument if degree(h) >= 2.
std::pair<RatPolynomial, RatPolynomial> dt_polynomial_pair(const RatPolynomial& h);

/// True iff p(n) is an integer for every integer n in [lo, hi].
bool integer_valued_on(const RatPolynomial& p, int lo, int hi);

}  // namespace qfq
