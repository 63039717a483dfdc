#include "qfq/scalar.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace qfq {

Mod5 Mod5::inverse() const {
  static constexpr int inv[5] = {0, 1, 3, 2, 4};
  if (value_ == 0) throw DivisionByZero("Mod5: zero has no inverse");
  return Mod5(inv[value_]);
}

bool CycNum::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycNum::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

CycNum operator+(const CycNum& a, const CycNum& b) {
  CycNum r = a;
  r += b;
  return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  CycNum r = a;
  r -= b;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r;
  for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  // Schoolbook product up to degree 6, then fold zeta^4 = -(1+z+z^2+z^3)
  // and zeta^5 = 1, zeta^6 = zeta.
  std::array<Rational, 7> p;
  for (int i = 0; i < 4; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      p[i + j] += a.c_[i] * b.c_[j];
    }
  }
  p[0] += p[5];
  p[1] += p[6];
  CycNum r;
  for (int i = 0; i < 4; ++i) r.c_[i] = p[i] - p[4];
  return r;
}

CycNum CycNum::times_root(Mod5 k) const {
  CycNum r = *this;
  for (int step = 0; step < k.value(); ++step) {
    // (c0 + c1 z + c2 z^2 + c3 z^3) * z = -c3 + (c0-c3) z + (c1-c3) z^2 + (c2-c3) z^3
    const Rational c3 = r.c_[3];
    r.c_[3] = r.c_[2] - c3;
    r.c_[2] = r.c_[1] - c3;
    r.c_[1] = r.c_[0] - c3;
    r.c_[0] = -c3;
  }
  return r;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  static const char* names[4] = {"", "z", "z^2", "z^3"};
  for (int i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
    else if (sgn(c_[i]) < 0) os << "-";
    Rational mag = abs(c_[i]);
    if (i == 0) os << mag.get_str();
    else {
      if (mag != 1) os << mag.get_str() << "*";
      os << names[i];
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycNum root_power(Mod5 k) {
  CycNum::Coeffs c;
  if (k.value() == 4) {
    for (auto& x : c) x = -1;
  } else {
    c[k.value()] = 1;
  }
  return CycNum(std::move(c));
}

CycNum cyc_mul(const CycNum& x, const CycNum& y) { return x * y; }

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

CycNum cyc_inv(const CycNum& x) {
  if (x.is_zero()) throw DivisionByZero("CycNum: inverse of zero");
  // Invariant: s_k * x == r_k (mod Phi5).
  Poly r0 = {1, 1, 1, 1, 1};
  Poly r1(x.coeffs().begin(), x.coeffs().end());
  trim(r1);
  Poly s0, s1 = {1};
  while (r1.size() > 1) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi5 is irreducible, so the last nonzero remainder is a constant.
  const Rational c = r1.at(0);
  auto [unused, s] = divmod(s1, Poly{1, 1, 1, 1, 1});
  (void)unused;
  CycNum::Coeffs out;
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] / c;
  // s has degree <= 3 after reduction mod Phi5.
  return CycNum(std::move(out));
}

}  // namespace qfq
