#include "qfq/word_rewrite.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfq {

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

AlgElement AlgElement::one() { return monomial({0, 0, 0, 0, 0}); }

AlgElement AlgElement::generator(int i) {
  if (i < 0 || i > 4) throw std::invalid_argument("generator index outside 0..4");
  Monomial m{};
  m[i] = 1;
  return monomial(m);
}

AlgElement AlgElement::monomial(const Monomial& m, CycNum coeff) {
  AlgElement x;
  x.add_term(m, coeff);
  return x;
}

int AlgElement::homogeneous_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int dm = degree(m);
    if (d >= 0 && d != dm) return -1;
    d = dm;
  }
  return d;
}

void AlgElement::add_term(const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
  AlgElement r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
  AlgElement r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

std::string AlgElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (int i = 0; i < 5; ++i)
      if (m[i] > 0) os << "*t" << i << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
  }
  return os.str();
}

namespace {

void require_admissible(const QMatrix& n) {
  if (!is_admissible(n)) throw std::invalid_argument("quantum parameter matrix is not admissible");
}

// Integer combination of standard monomials equal to t^e, using
// t_0^5 = -(t_1^5 + ... + t_4^5) with t_k^5 central.
std::map<Monomial, mpz_class> reduce_quintic(const Monomial& e) {
  std::map<Monomial, mpz_class> done;
  std::map<Monomial, mpz_class> work{{e, 1}};
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Monomial& m = node.key();
    if (m[0] <= 4) {
      done[m] += node.mapped();
      continue;
    }
    for (int k = 1; k < 5; ++k) {
      Monomial next = m;
      next[0] -= 5;
      next[k] += 5;
      work[next] -= node.mapped();
    }
  }
  std::erase_if(done, [](const auto& kv) { return sgn(kv.second) == 0; });
  return done;
}

// Exponent of q in t^x t^y = q^k t^{x+y}.
Mod5 reorder_exponent(const Monomial& x, const Monomial& y, const QMatrix& n) {
  int s = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < i; ++j) s += n(i, j).value() * ((x[i] * y[j]) % 5);
  return Mod5(s);
}

void add_reduced(AlgElement& out, const Monomial& m, const CycNum& coeff) {
  if (m[0] <= 4) {
    out.add_term(m, coeff);
    return;
  }
  for (const auto& [sm, count] : reduce_quintic(m)) out.add_term(sm, coeff * CycNum(Rational(count)));
}

}  // namespace

AlgElement normal_form(const Word& w, const QMatrix& n) {
  require_admissible(n);
  for (int l : w)
    if (l < 0 || l > 4) throw std::invalid_argument("word letter outside 0..4");
  Monomial e{};
  Mod5 k;
  for (std::size_t p = 0; p < w.size(); ++p) {
    ++e[w[p]];
    // Each inversion (w_p > w_r, p < r) is resolved by exactly one swap.
    for (std::size_t r = p + 1; r < w.size(); ++r)
      if (w[p] > w[r]) k += n(w[p], w[r]);
  }
  AlgElement out;
  add_reduced(out, e, root_power(k));
  return out;
}

AlgElement multiply(const AlgElement& x, const AlgElement& y, const QMatrix& n) {
  require_admissible(n);
  AlgElement out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      Monomial m;
      for (int i = 0; i < 5; ++i) m[i] = mx[i] + my[i];
      add_reduced(out, m, (cx * cy).times_root(reorder_exponent(mx, my, n)));
    }
  return out;
}

bool is_central(const AlgElement& x, const QMatrix& n) {
  if (!x.is_zero() && x.homogeneous_degree() < 0) throw std::invalid_argument("is_central: element is not homogeneous");
  for (int i = 0; i < 5; ++i) {
    const AlgElement t = AlgElement::generator(i);
    if (multiply(x, t, n) != multiply(t, x, n)) return false;
  }
  return true;
}

std::int64_t graded_dimension(int d) {
  if (d < 0) throw std::invalid_argument("graded_dimension: negative degree");
  auto c3 = [](std::int64_t m) { return (m + 3) * (m + 2) * (m + 1) / 6; };  // monomials of degree m in 4 variables
  std::int64_t s = 0;
  for (int e0 = 0; e0 <= 4 && e0 <= d; ++e0) s += c3(d - e0);
  return s;
}

AlgElement reduce_randomized(const Word& w, const QMatrix& n, std::mt19937_64& rng) {
  require_admissible(n);
  for (int l : w)
    if (l < 0 || l > 4) throw std::invalid_argument("word letter outside 0..4");
  std::map<Word, CycNum> state{{w, CycNum::one()}};
  struct Step {
    const Word* word;
    std::size_t pos;
    bool quintic;
  };
  std::vector<Step> steps;
  for (;;) {
    steps.clear();
    for (const auto& [word, c] : state)
      for (std::size_t p = 0; p + 1 < word.size(); ++p) {
        if (word[p] > word[p + 1]) steps.push_back({&word, p, false});
        if (p + 5 <= word.size() && word[p] == 0 && word[p + 1] == 0 && word[p + 2] == 0 && word[p + 3] == 0 &&
            word[p + 4] == 0)
          steps.push_back({&word, p, true});
      }
    if (steps.empty()) break;
    const Step s = steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)];
    const Word src = *s.word;
    auto node = state.extract(src);
    const CycNum c = node.mapped();
    auto accumulate = [&](Word nw, const CycNum& nc) {
      auto [it, inserted] = state.try_emplace(std::move(nw), nc);
      if (!inserted) {
        it->second += nc;
        if (it->second.is_zero()) state.erase(it);
      }
    };
    if (!s.quintic) {
      Word nw = src;
      std::swap(nw[s.pos], nw[s.pos + 1]);
      accumulate(std::move(nw), c.times_root(n(src[s.pos], src[s.pos + 1])));
    } else {
      for (int k = 1; k < 5; ++k) {
        Word nw = src;
        std::fill(nw.begin() + static_cast<std::ptrdiff_t>(s.pos), nw.begin() + static_cast<std::ptrdiff_t>(s.pos) + 5, k);
        accumulate(std::move(nw), -c);
      }
    }
  }
  AlgElement out;
  for (const auto& [word, c] : state) {
    Monomial m{};
    for (int l : word) ++m[l];
    out.add_term(m, c);
  }
  return out;
}

}  // namespace qfq
