#include "qfq/qparams.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qfq {

QMatrix::QMatrix(const std::array<std::array<int, 5>, 5>& rows) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) e_[5 * i + j] = Mod5(rows[i][j]);
}

QMatrix QMatrix::from_upper(const std::array<int, 10>& upper) {
  QMatrix m;
  int k = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      const Mod5 v(upper[k++]);
      m.set(i, j, v);
      m.set(j, i, -v);
    }
  return m;
}

std::uint64_t QMatrix::code() const {
  std::uint64_t c = 0;
  for (Mod5 v : e_) c = c * 5 + static_cast<std::uint64_t>(v.value());
  return c;
}

Mod5 QMatrix::row_sum(int i) const {
  Mod5 s;
  for (int j = 0; j < 5; ++j) s += (*this)(i, j);
  return s;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 5; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 5; ++j) os << (j ? "," : "") << (*this)(i, j).value();
    os << "]";
  }
  os << "]";
  return os.str();
}

bool is_admissible(const QMatrix& n) {
  for (int i = 0; i < 5; ++i) {
    if (n(i, i).value() != 0) return false;
    for (int j = i + 1; j < 5; ++j)
      if ((n(i, j) + n(j, i)).value() != 0) return false;
  }
  const Mod5 r0 = n.row_sum(0);
  for (int i = 1; i < 5; ++i)
    if (n.row_sum(i) != r0) return false;
  return true;
}

bool is_generic(const QMatrix& n) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      for (int k = 0; k < 5; ++k) {
        if (k == i || k == j) continue;
        if (n(i, j) + n(j, k) == n(i, k)) return false;
      }
    }
  return true;
}

bool has_zero_row_sums(const QMatrix& n) {
  if (!is_admissible(n)) return false;
  return n.row_sum(0).value() == 0;
}

QMatrix act_scale(const QMatrix& n, Mod5 a) {
  if (a.value() == 0) throw std::invalid_argument("act_scale: scalar must be a unit of Z/5");
  QMatrix r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.set(i, j, a * n(i, j));
  return r;
}

QMatrix act_permute(const QMatrix& n, const Permutation& sigma) {
  unsigned seen = 0;
  for (int s : sigma) {
    if (s < 0 || s > 4 || (seen & (1u << s))) throw std::invalid_argument("act_permute: not a permutation");
    seen |= 1u << s;
  }
  QMatrix r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.set(i, j, n(sigma[i], sigma[j]));
  return r;
}

QMatrix act_twist(const QMatrix& n, const std::array<Mod5, 5>& a) {
  QMatrix r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r.set(i, j, n(i, j) + a[i] - a[j]);
  return r;
}

ActionSet ActionSet::parse(const std::string& s) {
  ActionSet out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "scale") out.bits_ |= static_cast<unsigned>(Action::scale);
    else if (tok == "permute") out.bits_ |= static_cast<unsigned>(Action::permute);
    else if (tok == "twist") out.bits_ |= static_cast<unsigned>(Action::twist);
    else throw std::invalid_argument("unknown action '" + tok + "' (expected scale, permute, twist)");
  }
  return out;
}

std::string ActionSet::to_string() const {
  std::string s;
  auto add = [&](Action a, const char* name) {
    if (!has(a)) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add(Action::scale, "scale");
  add(Action::permute, "permute");
  add(Action::twist, "twist");
  return s;
}

const std::vector<Permutation>& all_permutations() {
  static const std::vector<Permutation> perms = [] {
    std::vector<Permutation> out;
    Permutation p = {0, 1, 2, 3, 4};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

namespace {

constexpr std::int64_t kCandidates = 9765625;  // 5^10 upper-triangular fillings
constexpr std::int64_t kBlock = 625;

QMatrix decode_upper(std::int64_t code) {
  std::array<int, 10> up{};
  for (int k = 9; k >= 0; --k) {
    up[k] = static_cast<int>(code % 5);
    code /= 5;
  }
  return QMatrix::from_upper(up);
}

enum class Filter { admissible, generic_any, generic_zero };

bool keep(const QMatrix& m, Filter f) {
  if (!is_admissible(m)) return false;
  switch (f) {
    case Filter::admissible: return true;
    case Filter::generic_any: return is_generic(m);
    case Filter::generic_zero: return m.row_sum(0).value() == 0 && is_generic(m);
  }
  return false;
}

std::vector<QMatrix> scan_serial(Filter f) {
  std::vector<QMatrix> out;
  for (std::int64_t c = 0; c < kCandidates; ++c) {
    QMatrix m = decode_upper(c);
    if (keep(m, f)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QMatrix> scan_parallel(Filter f) {
  constexpr std::int64_t nblocks = kCandidates / kBlock;
  std::vector<std::vector<QMatrix>> per_block(nblocks);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    auto& local = per_block[b];
    for (std::int64_t c = b * kBlock; c < (b + 1) * kBlock; ++c) {
      QMatrix m = decode_upper(c);
      if (keep(m, f)) local.push_back(m);
    }
  }
  std::vector<QMatrix> out;
  for (auto& v : per_block) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QMatrix> scan(Filter f, Exec exec) {
  return exec == Exec::serial ? scan_serial(f) : scan_parallel(f);
}

struct CodeHash {
  std::size_t operator()(std::uint64_t c) const { return std::hash<std::uint64_t>{}(c * 0x9E3779B97F4A7C15ull); }
};

template <class F>
void for_each_neighbor(const QMatrix& m, ActionSet actions, F&& f) {
  if (actions.has(Action::scale))
    for (int a = 1; a < 5; ++a) f(act_scale(m, Mod5(a)));
  if (actions.has(Action::permute))
    for (const auto& p : all_permutations()) f(act_permute(m, p));
  if (actions.has(Action::twist))
    for (int i = 0; i < 4; ++i) {
      std::array<Mod5, 5> a{};
      a[i] = Mod5(1);
      a[4] = Mod5(4);
      f(act_twist(m, a));
    }
}

}  // namespace

std::vector<QMatrix> enumerate_generic(Exec exec) { return scan(Filter::generic_zero, exec); }
std::vector<QMatrix> enumerate_generic_serial() { return scan_serial(Filter::generic_zero); }
std::vector<QMatrix> enumerate_generic_any_row_sum(Exec exec) { return scan(Filter::generic_any, exec); }
std::vector<QMatrix> enumerate_admissible(Exec exec) { return scan(Filter::admissible, exec); }

std::vector<QMatrix> orbit(const QMatrix& n, ActionSet actions) {
  if (!is_admissible(n)) throw std::invalid_argument("orbit: matrix is not admissible");
  std::unordered_set<std::uint64_t, CodeHash> seen{n.code()};
  std::vector<QMatrix> members{n};
  std::deque<QMatrix> frontier{n};
  while (!frontier.empty()) {
    const QMatrix cur = frontier.front();
    frontier.pop_front();
    for_each_neighbor(cur, actions, [&](const QMatrix& next) {
      if (seen.insert(next.code()).second) {
        members.push_back(next);
        frontier.push_back(next);
      }
    });
  }
  std::sort(members.begin(), members.end());
  return members;
}

QMatrix canonical_form(const QMatrix& n, ActionSet actions) { return orbit(n, actions).front(); }

OrbitPartition partition_orbits(const std::vector<QMatrix>& set, ActionSet actions) {
  OrbitPartition part;
  std::unordered_set<std::uint64_t, CodeHash> assigned;
  std::vector<QMatrix> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  for (const QMatrix& m : sorted) {
    if (assigned.count(m.code())) continue;
    auto orb = orbit(m, actions);
    for (const auto& x : orb) assigned.insert(x.code());
    part.representatives.push_back(orb.front());
    part.sizes.push_back(static_cast<std::int64_t>(orb.size()));
  }
  return part;
}

ClassificationReport classify(ActionSet selected, Exec exec) {
  ClassificationReport r;
  const auto generic = enumerate_generic(exec);
  r.generic_count = static_cast<std::int64_t>(generic.size());
  r.admissible_count = static_cast<std::int64_t>(enumerate_admissible(exec).size());
  r.generic_count_any_row_sum = static_cast<std::int64_t>(enumerate_generic_any_row_sum(exec).size());

  const auto all = partition_orbits(generic, ActionSet::all());
  r.orbit_count_all_actions = static_cast<std::int64_t>(all.representatives.size());
  r.canonical_representatives = all.representatives;

  const auto noscale = partition_orbits(generic, {Action::permute, Action::twist});
  r.orbit_count_without_scaling = static_cast<std::int64_t>(noscale.representatives.size());

  r.selected_actions = selected;
  const auto sel = selected == ActionSet::all() ? all : partition_orbits(generic, selected);
  r.orbit_count_selected = static_cast<std::int64_t>(sel.representatives.size());
  r.orbit_sizes_selected = sel.sizes;
  return r;
}

}  // namespace qfq
