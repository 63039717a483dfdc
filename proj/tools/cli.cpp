#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qfq/cohomology.hpp"
#include "qfq/fiber.hpp"
#include "qfq/index_set.hpp"
#include "qfq/json_io.hpp"
#include "qfq/parallel.hpp"
#include "qfq/qparams.hpp"
#include "qfq/structure_table.hpp"
#include "qfq/word_rewrite.hpp"

namespace qfq::cli {

namespace {

struct CliError : std::runtime_error {
  CliError(Status s, std::string kind, const std::string& msg, std::optional<std::size_t> byte = std::nullopt)
      : std::runtime_error(msg), status(s), kind(std::move(kind)), byte(byte) {}
  Status status;
  std::string kind;
  std::optional<std::size_t> byte;
};

/// Parsed command line.
struct RunConfig {
  std::string command;
  int threads = 0;
  std::string format = "json";

  std::string actions = "scale,permute,twist";
  std::string emit_matrices;
  std::string matrix_path;
  std::string table_path;
  std::string out_path;
  std::string mode = "exact";
  std::optional<std::uint64_t> seed;
  double budget = 600;
  std::string point;
  bool oracles = false;
  std::string twists = "0:1,-1:121,-2:381,-3:121,-4:1";
  std::optional<int> at;
  bool cohomology = false;
  int from = -5, to = 10;
  std::string word;
  std::uint64_t samples = 100000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(input_error, "io_error", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QMatrix load_matrix(const std::string& path) {
  try {
    return parse_qmatrix(read_file(path));
  } catch (const JsonFormatError& e) {
    throw CliError(input_error, "parse_error", std::string(path) + ": " + e.what(),
                   e.byte() ? std::optional<std::size_t>(e.byte()) : std::nullopt);
  }
}

StructureTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(input_error, "io_error", "cannot open '" + path + "'");
  try {
    return read_table(in);
  } catch (const JsonFormatError& e) {
    throw CliError(input_error, "parse_error", std::string(path) + ": " + e.what(),
                   e.byte() ? std::optional<std::size_t>(e.byte()) : std::nullopt);
  }
}

void require_admissible(const QMatrix& n) {
  if (!is_admissible(n))
    throw CliError(precondition_error, "precondition", "matrix is not admissible: " + n.to_string());
}

Word parse_word(const std::string& s) {
  Word w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '4')
      throw CliError(usage_error, "usage", "word letters must be generator indices 0..4, got '" + tok + "'");
    w.push_back(tok[0] - '0');
  }
  return w;
}

VerifyOptions parse_mode(const RunConfig& cfg) {
  VerifyOptions o;
  o.budget_seconds = cfg.budget;
  if (cfg.mode == "exact") {
    o.mode = VerifyMode::exact_bilinear;
  } else if (cfg.mode == "full") {
    o.mode = VerifyMode::full_triple;
  } else if (cfg.mode.rfind("sampled=", 0) == 0) {
    o.mode = VerifyMode::sampled;
    try {
      std::size_t used = 0;
      o.samples = std::stoull(cfg.mode.substr(8), &used);
      if (used != cfg.mode.size() - 8) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw CliError(usage_error, "usage", "bad sample count in --mode " + cfg.mode);
    }
    if (!cfg.seed) throw CliError(usage_error, "usage", "sampled verification requires an explicit --seed");
    o.seed = *cfg.seed;
  } else {
    throw CliError(usage_error, "usage", "unknown --mode '" + cfg.mode + "' (expected exact, full, sampled=N)");
  }
  return o;
}

json cmd_classify(const RunConfig& cfg) {
  ActionSet actions;
  try {
    actions = ActionSet::parse(cfg.actions);
  } catch (const std::invalid_argument& e) {
    throw CliError(usage_error, "usage", e.what());
  }
  const ClassificationReport r = classify(actions);
  if (!cfg.emit_matrices.empty()) {
    json all = json::array();
    for (const auto& m : enumerate_generic()) all.push_back(to_json(m));
    std::ofstream os(cfg.emit_matrices);
    if (!os) throw CliError(input_error, "io_error", "cannot write '" + cfg.emit_matrices + "'");
    os << all.dump() << "\n";
  }
  return to_json(r);
}

json cmd_build_table(const RunConfig& cfg) {
  const QMatrix n = load_matrix(cfg.matrix_path);
  require_admissible(n);
  const StructureTable t = build_table(n);
  std::ofstream os(cfg.out_path);
  if (!os) throw CliError(input_error, "io_error", "cannot write '" + cfg.out_path + "'");
  write_table(os, t);
  json j;
  j["matrix"] = to_json(n);
  j["entries"] = kIndexCount * kIndexCount;
  j["out"] = cfg.out_path;
  return j;
}

json cmd_verify(const RunConfig& cfg) {
  const VerifyOptions o = parse_mode(cfg);
  const StructureTable t = load_table(cfg.table_path);
  try {
    return to_json(verify_associativity(t, o));
  } catch (const BudgetExceeded& e) {
    throw CliError(budget_error, "budget_exceeded", e.what());
  }
}

json cmd_fiber(const RunConfig& cfg) {
  FiberPoint p;
  try {
    p = FiberPoint::parse(cfg.point);
  } catch (const std::invalid_argument& e) {
    throw CliError(usage_error, "usage", e.what());
  }
  const StructureTable t = load_table(cfg.table_path);
  std::optional<FiberAlgebra> f;
  try {
    f.emplace(specialize(t, p));
  } catch (const std::invalid_argument& e) {
    throw CliError(precondition_error, "precondition", e.what());
  }
  json j;
  j["point"] = p.to_string();
  j.update(to_json(analyze_fiber(*f, cfg.oracles)));
  return j;
}

json cohomology_row(const TwistMultiset& tw, const RatPolynomial& p, int n) {
  const auto h = sheaf_cohomology(tw, n);
  json row;
  row["n"] = n;
  row["h"] = std::vector<std::int64_t>(h.begin(), h.end());
  row["chi"] = h[0] - h[1] + h[2] - h[3];
  row["p"] = p(Rational(n)).get_str();
  return row;
}

json cmd_hilbert(const RunConfig& cfg) {
  TwistMultiset tw;
  try {
    tw = TwistMultiset::parse(cfg.twists);
  } catch (const std::invalid_argument& e) {
    throw CliError(usage_error, "usage", e.what());
  }
  const RatPolynomial p = hilbert_polynomial(tw);
  json j;
  j["twists"] = tw.to_string();
  j["rank"] = tw.rank();
  j["hilbert_polynomial"] = to_json(p);
  if (cfg.at) {
    j["at"] = *cfg.at;
    j["value"] = p(Rational(*cfg.at)).get_str();
  }
  if (cfg.cohomology) {
    json rows = json::array();
    if (cfg.at) rows.push_back(cohomology_row(tw, p, *cfg.at));
    else
      for (int n = cfg.from; n <= cfg.to; ++n) rows.push_back(cohomology_row(tw, p, n));
    j["cohomology"] = std::move(rows);
  }
  return j;
}

json cmd_normal_form(const RunConfig& cfg) {
  const QMatrix n = load_matrix(cfg.matrix_path);
  require_admissible(n);
  const Word w = parse_word(cfg.word);
  json j;
  j["word"] = w;
  j["terms"] = to_json(normal_form(w, n));
  return j;
}

json cmd_report(const RunConfig& cfg) {
  const std::uint64_t seed = cfg.seed.value_or(1);
  json j;
  j["seed"] = seed;
  bool all_pass = true;
  auto record = [&](const char* key, json section, bool pass) {
    section["pass"] = pass;
    all_pass = all_pass && pass;
    j[key] = std::move(section);
  };

  const ClassificationReport cr = classify();
  {
    json s;
    s["generic_count"] = cr.generic_count;
    s["orbit_count_all_actions"] = cr.orbit_count_all_actions;
    s["orbit_count_without_scaling"] = cr.orbit_count_without_scaling;
    s["admissible_count"] = cr.admissible_count;
    s["generic_count_any_row_sum"] = cr.generic_count_any_row_sum;
    s["canonical_representative"] = to_json(cr.canonical_representatives.front());
    record("classification", std::move(s), cr.generic_count == 3000 && cr.orbit_count_all_actions == 1);
  }
  {
    std::vector<std::int64_t> hist(5, 0);
    for (const auto& a : enumerate_index_set()) ++hist[weight(a)];
    json s;
    s["histogram"] = hist;
    record("grading", std::move(s), hist == std::vector<std::int64_t>{1, 121, 381, 121, 1});
  }
  const QMatrix canon = cr.canonical_representatives.front();
  {
    const StructureTable t = build_table(canon);
    const CyCertificate cert = cy_certificate(t);
    json s = to_json(cert);
    VerifyOptions o;
    o.mode = VerifyMode::sampled;
    o.samples = cfg.samples;
    o.seed = seed;
    const VerifyResult sampled = verify_associativity(t, o);
    s["sampled"] = to_json(sampled);
    const bool pass = cert.pass && sampled.ok;
    s.erase("pass");
    record("cy_certificate", std::move(s), pass);
  }
  {
    AlgElement quintic;
    for (int k = 0; k < 5; ++k) quintic = quintic + normal_form(Word(5, k), canon);
    std::vector<bool> central;
    for (int k = 0; k < 5; ++k) central.push_back(is_central(normal_form(Word(5, k), canon), canon));
    std::vector<bool> generator_central;
    for (int k = 0; k < 5; ++k) generator_central.push_back(is_central(AlgElement::generator(k), canon));
    json s;
    s["quintic_normal_form_is_zero"] = quintic.is_zero();
    s["fifth_powers_central"] = central;
    s["generators_central"] = generator_central;
    const bool pass = quintic.is_zero() && std::all_of(central.begin(), central.end(), [](bool b) { return b; });
    record("centrality", std::move(s), pass);
  }
  {
    const RatPolynomial p = hilbert_polynomial(TwistMultiset::sheaf_algebra());
    json rows = json::array();
    bool pass = true;
    for (int n = 0; n <= 3; ++n) {
      const std::int64_t gd = graded_dimension(5 * n);
      const Rational hp = p(Rational(n));
      json row;
      row["n"] = n;
      row["graded_dimension_5n"] = gd;
      row["hilbert_polynomial"] = hp.get_str();
      rows.push_back(std::move(row));
      pass = pass && hp == Rational(static_cast<long>(gd));
    }
    json s;
    s["rows"] = std::move(rows);
    record("dimension_bridge", std::move(s), pass);
  }
  {
    const TwistMultiset tw = TwistMultiset::sheaf_algebra();
    const RatPolynomial p = hilbert_polynomial(tw);
    bool middle_vanishes = true, chi_matches = true;
    for (int n = -5; n <= 10; ++n) {
      const auto h = sheaf_cohomology(tw, n);
      middle_vanishes = middle_vanishes && h[1] == 0 && h[2] == 0;
      chi_matches = chi_matches && p(Rational(n)) == Rational(static_cast<long>(h[0] - h[1] + h[2] - h[3]));
    }
    json s;
    s["range"] = {-5, 10};
    s["h1_h2_vanish"] = middle_vanishes;
    s["chi_equals_hilbert_polynomial"] = chi_matches;
    s["hilbert_polynomial"] = to_json(p);
    record("cohomology", std::move(s), middle_vanishes && chi_matches);
  }
  j["pass"] = all_pass;
  return j;
}

void emit(std::ostream& out, const RunConfig& cfg, const json& j) {
  if (cfg.format == "human") out << render_human(j);
  else out << j.dump(2) << "\n";
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& msg, std::optional<std::size_t> byte) {
  json e;
  e["kind"] = kind;
  e["message"] = msg;
  if (byte) e["byte"] = *byte;
  json j;
  j["error"] = std::move(e);
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations for the quantum Fermat quintic threefold", "qfq"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "OpenMP thread count (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "human"}));

  auto* classify_cmd = app.add_subcommand("classify", "Enumerate and classify generic quantum parameter matrices");
  classify_cmd->add_option("--actions", cfg.actions, "Comma-separated subset of scale,permute,twist");
  classify_cmd->add_option("--emit-matrices", cfg.emit_matrices, "Write the generic matrices as JSON");

  auto* build_cmd = app.add_subcommand("build-table", "Build the 625x625 structure table of a matrix");
  build_cmd->add_option("--matrix", cfg.matrix_path, "5x5 matrix JSON")->required();
  build_cmd->add_option("--out", cfg.out_path, "Output table JSON")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Verify associativity of a structure table");
  verify_cmd->add_option("--table", cfg.table_path, "Table JSON")->required();
  verify_cmd->add_option("--mode", cfg.mode, "exact | full | sampled=N");
  verify_cmd->add_option("--seed", cfg.seed, "Seed for sampled mode");
  verify_cmd->add_option("--budget", cfg.budget, "Time budget in seconds for full mode (0 = none)");

  auto* fiber_cmd = app.add_subcommand("fiber", "Analyze the fiber algebra at a point of X");
  fiber_cmd->add_option("--table", cfg.table_path, "Table JSON")->required();
  fiber_cmd->add_option("--point", cfg.point, "Point x0,...,x4 with sum 0")->required();
  fiber_cmd->add_flag("--oracles", cfg.oracles, "Also run the dense center solve and the radical ideal check");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert polynomial and cohomology of a sum of line bundles on P^3");
  hilbert_cmd->add_option("--twists", cfg.twists, "d:mult list");
  hilbert_cmd->add_option("--at", cfg.at, "Evaluate at n");
  hilbert_cmd->add_flag("--cohomology", cfg.cohomology, "Emit cohomology dimensions");
  hilbert_cmd->add_option("--from", cfg.from, "First twist of the cohomology table");
  hilbert_cmd->add_option("--to", cfg.to, "Last twist of the cohomology table");

  auto* nf_cmd = app.add_subcommand("normal-form", "Normal form of a word in the generators");
  nf_cmd->add_option("--matrix", cfg.matrix_path, "5x5 matrix JSON")->required();
  nf_cmd->add_option("--word", cfg.word, "Comma-separated generator indices")->required();

  auto* report_cmd = app.add_subcommand("report", "Run the full reproduction suite");
  report_cmd->add_option("--seed", cfg.seed, "Seed for sampled verification (default 1)");
  report_cmd->add_option("--samples", cfg.samples, "Sampled associativity triples");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what(), std::nullopt);
    return usage_error;
  }

  set_threads(cfg.threads);
  try {
    json result;
    if (*classify_cmd) result = cmd_classify(cfg);
    else if (*build_cmd) result = cmd_build_table(cfg);
    else if (*verify_cmd) result = cmd_verify(cfg);
    else if (*fiber_cmd) result = cmd_fiber(cfg);
    else if (*hilbert_cmd) result = cmd_hilbert(cfg);
    else if (*nf_cmd) result = cmd_normal_form(cfg);
    else if (*report_cmd) result = cmd_report(cfg);
    emit(out, cfg, result);
    if (*verify_cmd && !result.value("ok", false)) return failed_check;
    if (*report_cmd && !result.value("pass", false)) return failed_check;
    return ok;
  } catch (const CliError& e) {
    emit_error(err, e.kind, e.what(), e.byte);
    return e.status;
  } catch (const std::invalid_argument& e) {
    emit_error(err, "precondition", e.what(), std::nullopt);
    return precondition_error;
  } catch (const std::exception& e) {
    emit_error(err, "internal", e.what(), std::nullopt);
    return input_error;
  }
}

}  // namespace qfq::cli
