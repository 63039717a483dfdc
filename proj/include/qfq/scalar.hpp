#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qfq {

using Rational = mpq_class;

/// Residue class in Z/5.
class Mod5 {
public:
  constexpr Mod5() = default;
  constexpr Mod5(int v) : value_(static_cast<std::uint8_t>(((v % 5) + 5) % 5)) {}

  constexpr int value() const { return value_; }

  friend constexpr Mod5 operator+(Mod5 a, Mod5 b) { return Mod5(a.value_ + b.value_); }
  friend constexpr Mod5 operator-(Mod5 a, Mod5 b) { return Mod5(a.value_ - b.value_ + 5); }
  friend constexpr Mod5 operator*(Mod5 a, Mod5 b) { return Mod5(a.value_ * b.value_); }
  constexpr Mod5 operator-() const { return Mod5(5 - value_); }
  constexpr Mod5& operator+=(Mod5 o) { return *this = *this + o; }
  constexpr Mod5& operator-=(Mod5 o) { return *this = *this - o; }
  constexpr Mod5& operator*=(Mod5 o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Mod5 inverse() const;

  friend constexpr auto operator<=>(Mod5, Mod5) = default;

private:
  std::uint8_t value_ = 0;
};

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact element of Q(zeta), zeta a primitive 5th root of unity, stored in the
/// basis {1, zeta, zeta^2, zeta^3}. zeta^4 is always rewritten as
/// -(1 + zeta + zeta^2 + zeta^3), so equal values have equal coefficients.
class CycNum {
public:
  using Coeffs = std::array<Rational, 4>;

  CycNum() = default;
  CycNum(long v) { c_[0] = v; }
  CycNum(const Rational& r) { c_[0] = r; }
  explicit CycNum(Coeffs c) : c_(std::move(c)) {}

  static CycNum zero() { return CycNum(); }
  static CycNum one() { return CycNum(1L); }

  const Coeffs& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  /// Multiply by zeta^k. Only permutes and subtracts coefficients.
  CycNum times_root(Mod5 k) const;

  friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

private:
  Coeffs c_;
};

/// zeta^k in canonical form.
CycNum root_power(Mod5 k);

CycNum cyc_mul(const CycNum& x, const CycNum& y);

/// Inverse via extended Euclid against 1 + x + x^2 + x^3 + x^4.
/// Throws DivisionByZero on zero.
CycNum cyc_inv(const CycNum& x);

}  // namespace qfq
