#include "qfq/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace qfq {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

Rational RatPolynomial::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

Rational RatPolynomial::operator()(const Rational& n) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * n + *it;
  return v;
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RatPolynomial(std::move(c));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RatPolynomial(std::move(c));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RatPolynomial(std::move(c));
}

std::string RatPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << (sgn(c_[k]) > 0 ? " + " : " - ");
    else if (sgn(c_[k]) < 0) os << "-";
    first = false;
    const Rational mag = abs(c_[k]);
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << (mag != 1 ? "*n" : "n");
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

TwistMultiset TwistMultiset::parse(const std::string& s) {
  TwistMultiset tw;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("twist entry '" + tok + "' is not of the form d:mult");
    std::size_t used_d = 0, used_m = 0;
    int d = 0;
    long long m = 0;
    try {
      d = std::stoi(tok.substr(0, colon), &used_d);
      m = std::stoll(tok.substr(colon + 1), &used_m);
    } catch (const std::exception&) {
      throw std::invalid_argument("twist entry '" + tok + "' is not of the form d:mult");
    }
    if (used_d != colon || used_m != tok.size() - colon - 1)
      throw std::invalid_argument("twist entry '" + tok + "' is not of the form d:mult");
    if (m <= 0) throw std::invalid_argument("twist multiplicity must be positive in '" + tok + "'");
    tw.parts.emplace_back(d, m);
  }
  if (tw.parts.empty()) throw std::invalid_argument("empty twist multiset");
  return tw;
}

TwistMultiset TwistMultiset::sheaf_algebra() { return {{{0, 1}, {-1, 121}, {-2, 381}, {-3, 121}, {-4, 1}}}; }

std::int64_t TwistMultiset::rank() const {
  std::int64_t r = 0;
  for (const auto& [d, m] : parts) r += m;
  return r;
}

std::string TwistMultiset::to_string() const {
  std::string s;
  for (const auto& [d, m] : parts) s += (s.empty() ? "" : ",") + std::to_string(d) + ":" + std::to_string(m);
  return s;
}

RatPolynomial hilbert_polynomial(const TwistMultiset& tw) {
  RatPolynomial p;
  for (const auto& [d, m] : tw.parts) {
    // (n+d+1)(n+d+2)(n+d+3)/6
    RatPolynomial term = RatPolynomial::constant(Rational(static_cast<long>(m)) / 6);
    for (int k = 1; k <= 3; ++k) term = term * RatPolynomial({Rational(d + k), Rational(1)});
    p = p + term;
  }
  return p;
}

std::int64_t cohomology_dim(int d, int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("cohomology degree must be in 0..3");
  auto c3 = [](std::int64_t m) { return m * (m - 1) * (m - 2) / 6; };  // binom(m, 3)
  if (i == 0 && d >= 0) return c3(static_cast<std::int64_t>(d) + 3);
  if (i == 3 && d <= -4) return c3(-static_cast<std::int64_t>(d) - 1);
  return 0;
}

std::array<std::int64_t, 4> sheaf_cohomology(const TwistMultiset& tw, int n) {
  std::array<std::int64_t, 4> h{};
  for (const auto& [d, m] : tw.parts)
    for (int i = 0; i < 4; ++i) h[i] += m * cohomology_dim(n + d, i);
  return h;
}

std::pair<RatPolynomial, RatPolynomial> dt_polynomial_pair(const RatPolynomial& h) {
  if (h.degree() >= 2) throw std::invalid_argument("dt_polynomial_pair: h must have degree <= 1");
  return {h, hilbert_polynomial(TwistMultiset::sheaf_algebra()) - h};
}

bool integer_valued_on(const RatPolynomial& p, int lo, int hi) {
  for (int n = lo; n <= hi; ++n)
    if (p(Rational(n)).get_den() != 1) return false;
  return true;
}

}  // namespace qfq
