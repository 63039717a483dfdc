#include "qfq/json_io.hpp"

#include <sstream>

namespace qfq {

json to_json(Mod5 x) { return x.value(); }

json to_json(const CycNum& x) {
  json j = json::array();
  for (const auto& c : x.coeffs()) j.push_back(c.get_str());
  return j;
}

CycNum cycnum_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw JsonFormatError("CycNum must be an array of four fraction strings");
  CycNum::Coeffs c;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_string()) throw JsonFormatError("CycNum coefficient must be a fraction string");
    try {
      c[i] = Rational(j[i].get<std::string>());
      c[i].canonicalize();
    } catch (const std::invalid_argument&) {
      throw JsonFormatError("CycNum coefficient '" + j[i].get<std::string>() + "' is not a fraction");
    }
  }
  return CycNum(std::move(c));
}

json to_json(const QMatrix& m) {
  json j = json::array();
  for (int i = 0; i < 5; ++i) {
    json row = json::array();
    for (int k = 0; k < 5; ++k) row.push_back(m(i, k).value());
    j.push_back(std::move(row));
  }
  return j;
}

QMatrix qmatrix_from_json(const json& j) {
  const json& m = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!m.is_array() || m.size() != 5) throw JsonFormatError("matrix must be a 5x5 integer array");
  std::array<std::array<int, 5>, 5> rows{};
  for (int i = 0; i < 5; ++i) {
    if (!m[i].is_array() || m[i].size() != 5) throw JsonFormatError("matrix row " + std::to_string(i) + " must have 5 entries");
    for (int k = 0; k < 5; ++k) {
      if (!m[i][k].is_number_integer())
        throw JsonFormatError("matrix entry (" + std::to_string(i) + "," + std::to_string(k) + ") is not an integer");
      rows[i][k] = static_cast<int>(m[i][k].get<long long>() % 5);
    }
  }
  return QMatrix(rows);
}

QMatrix parse_qmatrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(std::string("matrix JSON parse error: ") + e.what(), e.byte);
  }
  return qmatrix_from_json(j);
}

json to_json(const MultiIndex& a) {
  json j = json::array();
  for (int i = 0; i < 5; ++i) j.push_back(a[i]);
  return j;
}

MultiIndex multi_index_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) throw JsonFormatError("multi-index must be an array of 5 integers");
  std::array<int, 5> d{};
  for (int i = 0; i < 5; ++i) {
    if (!j[i].is_number_integer()) throw JsonFormatError("multi-index digit is not an integer");
    d[i] = j[i].get<int>();
  }
  try {
    return MultiIndex(d);
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

void write_table(std::ostream& os, const StructureTable& t) {
  const auto& all = enumerate_index_set();
  auto digits = [&](const MultiIndex& a) {
    std::string s = "[";
    for (int i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + "]";
  };
  os << "{\"matrix\":" << to_json(t.source_matrix()).dump() << ",\"entries\":[";
  for (int a = 0; a < kIndexCount; ++a)
    for (int b = 0; b < kIndexCount; ++b) {
      if (a || b) os << ",";
      const CarryVector c = t.carry(a, b);
      os << "\n{\"a\":" << digits(all[a]) << ",\"b\":" << digits(all[b])
         << ",\"target\":" << digits(all[t.target(a, b)]) << ",\"exp\":" << t.exponent(a, b).value() << ",\"carry\":[";
      for (int i = 0; i < 5; ++i) os << (i ? "," : "") << (c[i] ? "true" : "false");
      os << "]}";
    }
  os << "\n]}\n";
}

StructureTable read_table(std::istream& is) {
  struct Row {
    int a, b, target, exp;
    std::uint8_t carry;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(kIndexCount) * kIndexCount);
  auto take = [&](const json& e) {
    if (!e.is_object()) throw JsonFormatError("table entry must be an object");
    for (const char* k : {"a", "b", "target", "exp", "carry"})
      if (!e.contains(k)) throw JsonFormatError(std::string("table entry is missing '") + k + "'");
    Row r{};
    r.a = multi_index_from_json(e["a"]).id();
    r.b = multi_index_from_json(e["b"]).id();
    r.target = multi_index_from_json(e["target"]).id();
    if (!e["exp"].is_number_integer()) throw JsonFormatError("table entry 'exp' must be an integer");
    r.exp = static_cast<int>(e["exp"].get<long long>() % 5);
    const json& c = e["carry"];
    if (!c.is_array() || c.size() != 5) throw JsonFormatError("table entry 'carry' must be 5 booleans");
    for (int i = 0; i < 5; ++i) {
      if (!c[i].is_boolean()) throw JsonFormatError("table entry 'carry' must be 5 booleans");
      if (c[i].get<bool>()) r.carry |= static_cast<std::uint8_t>(1u << i);
    }
    rows.push_back(r);
  };
  json doc;
  try {
    // Entries sit at depth 2 ({ "entries": [ {...} ] }); each is consumed and
    // dropped as soon as it closes.
    doc = json::parse(is, [&](int depth, json::parse_event_t ev, json& parsed) {
      if (ev == json::parse_event_t::object_end && depth == 2) {
        take(parsed);
        return false;
      }
      return true;
    });
  } catch (const json::parse_error& e) {
    throw JsonFormatError(std::string("table JSON parse error: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("matrix")) throw JsonFormatError("table JSON must contain 'matrix'");
  StructureTable t(qmatrix_from_json(doc["matrix"]));
  const std::size_t total = static_cast<std::size_t>(kIndexCount) * kIndexCount;
  if (rows.size() != total)
    throw JsonFormatError("table has " + std::to_string(rows.size()) + " entries, expected " + std::to_string(total));
  std::vector<bool> seen(total, false);
  for (const Row& r : rows) {
    const std::size_t k = static_cast<std::size_t>(r.a) * kIndexCount + r.b;
    if (seen[k]) throw JsonFormatError("duplicate table entry");
    seen[k] = true;
    t.set_entry(r.a, r.b, Mod5(r.exp), CarryVector(r.carry), r.target);
  }
  return t;
}

json to_json(const ClassificationReport& r) {
  json j;
  j["generic_count"] = r.generic_count;
  j["orbit_count_all_actions"] = r.orbit_count_all_actions;
  j["orbit_count_without_scaling"] = r.orbit_count_without_scaling;
  json reps = json::array();
  for (const auto& m : r.canonical_representatives) reps.push_back(to_json(m));
  j["canonical_representatives"] = std::move(reps);
  j["admissible_count"] = r.admissible_count;
  j["generic_count_any_row_sum"] = r.generic_count_any_row_sum;
  j["selected_actions"] = r.selected_actions.to_string();
  j["orbit_count_selected"] = r.orbit_count_selected;
  j["orbit_sizes_selected"] = r.orbit_sizes_selected;
  return j;
}

json to_json(const Violation& v) {
  json j;
  j["kind"] = v.kind;
  json idx = json::array();
  for (const auto& a : v.indices) idx.push_back(to_json(a));
  j["indices"] = std::move(idx);
  j["detail"] = v.detail;
  return j;
}

json to_json(const VerifyResult& r) {
  json j;
  j["mode"] = to_string(r.mode);
  j["ok"] = r.ok;
  j["checks"] = r.checks;
  if (r.mode == VerifyMode::sampled) {
    j["samples"] = r.samples;
    j["seed"] = r.seed;
  }
  j["violation"] = r.violation ? to_json(*r.violation) : json(nullptr);
  return j;
}

json to_json(const CyCertificate& c) {
  json j;
  j["pass"] = c.pass;
  j["verdict"] = c.verdict;
  j["associativity"] = to_json(c.associativity);
  j["nondegenerate"] = c.nondegenerate;
  j["symmetric"] = c.symmetric;
  j["row_sum_criterion"] = c.row_sum_criterion;
  return j;
}

json to_json(const AlgElement& x) {
  json j = json::array();
  for (const auto& [m, c] : x.terms()) {
    json t;
    t["monomial"] = json(std::vector<int>(m.begin(), m.end()));
    t["coeff"] = to_json(c);
    j.push_back(std::move(t));
  }
  return j;
}

json to_json(const FiberReport& r) {
  json j;
  j["center_dim"] = r.center_dim;
  j["radical_dim"] = r.radical_dim;
  j["semisimple"] = r.semisimple;
  if (r.center_dim_dense >= 0) j["center_dim_dense"] = r.center_dim_dense;
  if (r.radical_ideal >= 0) j["radical_is_ideal"] = r.radical_ideal == 1;
  return j;
}

json to_json(const RatPolynomial& p) {
  json j;
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  j["coefficients"] = std::move(c);
  j["text"] = p.to_string();
  return j;
}

namespace {

void render(std::ostringstream& os, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(os, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) render(os, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_human(const json& j) {
  std::ostringstream os;
  render(os, j, "");
  return os.str();
}

}  // namespace qfq
