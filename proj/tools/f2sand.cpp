// f2sand: sandpile groups of Cayley graphs of F_2^r.
//
// Every command writes one JSON document to stdout; logs and errors go to
// stderr. Big integers are decimal strings.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "f2sand/bitspace.hpp"
#include "f2sand/cache.hpp"
#include "f2sand/cayley.hpp"
#include "f2sand/exactla.hpp"
#include "f2sand/harness.hpp"
#include "f2sand/json_io.hpp"

using nlohmann::json;
using namespace f2sand;

namespace {

constexpr const char* kCacheEnv = "F2SAND_CACHE_DIR";

struct Common {
  std::string input;
  unsigned hypercube_n = 0;
  bool json_out = true;
  std::string cache_dir;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--input", c.input, "JSON instance file ({\"r\", \"mu\"} or {\"columns\"}); - reads stdin");
  cmd->add_option("--hypercube", c.hypercube_n, "use the hypercube Q_N instead of an input file")
      ->check(CLI::Range(1u, kMaxDim));
  cmd->add_flag("--json", c.json_out, "JSON output (the only format; default)");
  cmd->add_option("--cache-dir", c.cache_dir, std::string("result cache directory; overrides $") + kCacheEnv);
  cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for sampled families")->capture_default_str();
}

json read_json_file(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

MultiplicityVector load_instance(const Common& c) {
  if (c.hypercube_n != 0 && !c.input.empty()) throw std::invalid_argument("give either --input or --hypercube");
  if (c.hypercube_n != 0) return hypercube(c.hypercube_n);
  if (c.input.empty()) throw std::invalid_argument("an instance is required: --input FILE or --hypercube N");
  return multiplicity_from_json(read_json_file(c.input));
}

std::unique_ptr<ResultCache> open_cache(const Common& c) {
  std::string dir = c.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kCacheEnv)) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<ResultCache>(dir);
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

// Commands return the process exit status.

int cmd_spectrum(const Common& c) {
  const auto m = load_instance(c);
  const auto spec = spectrum(m);
  json eig = json::object();
  for (std::uint32_t u = 0; u < m.vertex_count(); ++u) eig[BitVector(m.dim(), u).str()] = spec.at(u);
  emit({{"instance", multiplicity_to_json(m)}, {"eigenvalues", eig}, {"multiset", spec.multiset()}});
  return 0;
}

int cmd_sandpile(const Common& c) {
  const auto m = load_instance(c);
  const auto cache = open_cache(c);
  const SandpileOracle oracle(cache.get());
  const auto g = oracle.group(m);
  json out = {{"instance", multiplicity_to_json(m)}};
  out.update(group_to_json(g));
  out["d"] = g.even_factor_count();
  out["order"] = g.order().get_str();
  out["spanning_trees"] = spanning_tree_count(m).get_str();
  emit(out);
  if (cache) std::cerr << "cache: " << oracle.hits() << " hit(s), " << oracle.misses() << " miss(es)\n";
  return 0;
}

int cmd_snf(const Common& c, const std::string& matrix_path, bool witnesses) {
  IntegerMatrix a(1, 1);
  json out = json::object();
  if (!matrix_path.empty()) {
    const auto rows = read_json_file(matrix_path);
    std::vector<std::vector<mpz_class>> parsed;
    for (const auto& row : rows) parsed.push_back(integers_from_json(row));
    a = IntegerMatrix::from_rows(parsed);
  } else {
    const auto m = load_instance(c);
    out["instance"] = multiplicity_to_json(m);
    a = laplacian(m);
  }
  const auto snf = smith_normal_form(a, witnesses);
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["diagonal"] = integers_to_json(snf.diag);
  out["rank"] = snf.rank();
  if (witnesses) {
    out["left"] = matrix_to_json(*snf.left);
    out["right"] = matrix_to_json(*snf.right);
  }
  emit(out);
  return 0;
}

int cmd_formulas(const Common& c, const std::string& which, bool widen_faces) {
  const auto m = load_instance(c);
  const auto cache = open_cache(c);
  const SandpileOracle oracle(cache.get());
  RunOptions options;
  options.cache = cache.get();
  if (widen_faces) options.face_range = FaceRange::kAtLeastOne;

  bool failed = false;
  json results = json::array();
  for (const auto& info : formula_catalog()) {
    if (which != "all" && info.id != which) continue;
    json entry = {{"formula", info.id}, {"title", info.title}, {"proved", info.proved}};
    if (const auto check = check_formula(info.id, m, oracle, options)) {
      entry["applicable"] = true;
      entry["predicted"] = check->predicted;
      entry["observed"] = check->observed;
      entry["agree"] = check->agree;
      if (!check->note.empty()) entry["note"] = check->note;
      const bool variant = info.id == "c1-faces" && widen_faces;
      failed |= info.proved && !variant && !check->agree;
    } else {
      entry["applicable"] = false;
    }
    results.push_back(std::move(entry));
  }
  if (results.empty()) throw std::invalid_argument("unknown formula id '" + which + "'");
  json out = which == "all" ? json{{"instance", multiplicity_to_json(m)}, {"formulas", results}} : results.front();
  if (which != "all") out["instance"] = multiplicity_to_json(m);
  emit(out);
  return failed ? 1 : 0;
}

struct FamilyFlags {
  unsigned r = 3;
  std::uint64_t min_mult = 0;
  std::uint64_t max_mult = 1;
  bool generic = false;
  bool coprime = false;
  int omega = -1;
  bool no_dedup = false;
  std::uint64_t cap = 200'000'000;
  bool hypercubes = false;
  unsigned n_min = 2;
  unsigned n_max = 7;
  std::size_t random = 0;
};

void add_family(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--r", f.r, "dimension of exhaustive or random families")->check(CLI::Range(1u, kMaxDim))
      ->capture_default_str();
  cmd->add_option("--min-mult", f.min_mult, "smallest multiplicity")->capture_default_str();
  cmd->add_option("--max-mult", f.max_mult, "largest multiplicity")->capture_default_str();
  cmd->add_flag("--generic", f.generic, "keep only generic instances");
  cmd->add_flag("--coprime", f.coprime, "keep only instances with gcd 1");
  cmd->add_option("--omega", f.omega, "required number of even multiplicities (-1: any)")->capture_default_str();
  cmd->add_flag("--no-dedup", f.no_dedup, "keep every member of each GL-orbit");
  cmd->add_option("--cap", f.cap, "largest exhaustive index space")->capture_default_str();
  cmd->add_flag("--hypercubes", f.hypercubes, "sweep Q_n for n in [--n-min, --n-max]");
  cmd->add_option("--n-min", f.n_min, "smallest hypercube")->capture_default_str();
  cmd->add_option("--n-max", f.n_max, "largest hypercube")->capture_default_str();
  cmd->add_option("--random", f.random, "draw N random instances instead of enumerating (uses --seed)");
}

InstanceFamily build_family(const FamilyFlags& f, const Common& c) {
  InstanceFamily family;
  if (!c.input.empty()) {
    const auto doc = read_json_file(c.input);
    std::vector<MultiplicityVector> list;
    for (const auto& item : doc.at("instances")) list.push_back(multiplicity_from_json(item));
    return InstanceFamily::explicit_list(std::move(list));
  }
  if (f.hypercubes) return InstanceFamily::hypercubes(f.n_min, f.n_max);
  family = f.random > 0 ? InstanceFamily::random(f.r, f.max_mult, f.random, c.seed)
                        : InstanceFamily::exhaustive(f.r, f.max_mult);
  family.min_mult = f.min_mult;
  family.generic_only = f.generic;
  family.coprime_only = f.coprime;
  if (f.omega >= 0) family.omega = static_cast<unsigned>(f.omega);
  family.dedup = !f.no_dedup;
  family.cap = f.cap;
  return family;
}

int cmd_verify(const Common& c, const FamilyFlags& flags, const std::string& formula, bool widen_faces,
               bool summary) {
  const auto family = build_family(flags, c);
  const auto cache = open_cache(c);
  RunOptions options{c.jobs, cache.get(), widen_faces ? FaceRange::kAtLeastOne : FaceRange::kAtLeastTwo};

  std::vector<std::string> ids;
  if (formula == "all") {
    for (const auto& info : formula_catalog()) ids.push_back(info.id);
  } else {
    ids.push_back(formula);
  }
  bool failed = false;
  json reports = json::array();
  for (const auto& id : ids) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = verify(family, id, options);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::cerr << id << ": " << report.records.size() << " checked, " << report.disagreements()
              << " disagreement(s), " << took.count() << " s\n";
    failed |= report.proved() && report.unflagged_disagreements() > 0;
    reports.push_back(report.to_json(!summary));
  }
  emit(ids.size() == 1 ? reports.front() : json{{"reports", reports}});
  return failed ? 1 : 0;
}

int cmd_conjecture(const Common& c, const std::string& id, const ConjectureParams& params, bool summary) {
  const auto cache = open_cache(c);
  RunOptions options{c.jobs, cache.get(), FaceRange::kAtLeastTwo};
  std::vector<std::string> ids = id == "all" ? conjecture_ids() : std::vector<std::string>{id};
  json reports = json::array();
  for (const auto& cid : ids) {
    const auto report = check_conjecture(cid, params, options);
    std::cerr << cid << ": " << report.records.size() << " checked, " << report.disagreements()
              << " counterexample(s)\n";
    reports.push_back(report.to_json(!summary));
  }
  emit(ids.size() == 1 ? reports.front() : json{{"reports", reports}});
  // Conjectures report evidence; disagreement is not a failure.
  return 0;
}

int cmd_appendix(const Common& c, const std::string& case_id, bool summary) {
  const auto cache = open_cache(c);
  RunOptions options{c.jobs, cache.get(), FaceRange::kAtLeastTwo};
  const auto report = reproduce_appendix(case_id, options);
  json out = report.to_json(!summary);
  out["match"] = report.disagreements() == 0;
  emit(out);
  if (report.flagged() > 0) std::cerr << report.flagged() << " known discrepancy(ies) flagged\n";
  return report.unflagged_disagreements() > 0 ? 1 : 0;
}

int cmd_canonical(const Common& c, const std::vector<std::string>& apply_rows) {
  const auto m = load_instance(c);
  json out = {{"instance", multiplicity_to_json(m)}};
  auto target = m;
  if (!apply_rows.empty()) {
    const auto t = GLMatrix::parse(apply_rows);
    std::map<BitVector, std::uint64_t> image;
    for (std::uint32_t u = 1; u < m.vertex_count(); ++u) {
      if (m.dense()[u] != 0) image[apply_gl(t, BitVector(m.dim(), u))] += m.dense()[u];
    }
    target = MultiplicityVector::from_map(m.dim(), image);
    out["image"] = multiplicity_to_json(target);
  }
  const auto canon = canonical_form(target);
  out["canonical"] = multiplicity_to_json(canon);
  out["is_canonical"] = canon == m;
  out["canonical_tuple"] = canon.tuple();
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandpile groups of Cayley graphs of F_2^r"};
  app.require_subcommand(1);
  Common common;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian eigenvalues by character");
  add_common(spectrum_cmd, common);

  auto* sandpile_cmd = app.add_subcommand("sandpile", "sandpile group by Smith normal form");
  add_common(sandpile_cmd, common);

  std::string matrix_path;
  bool witnesses = false;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of the Laplacian or of --matrix");
  add_common(snf_cmd, common);
  snf_cmd->add_option("--matrix", matrix_path, "JSON array of integer rows (strings or numbers)");
  snf_cmd->add_flag("--witnesses", witnesses, "also print unimodular U, V with U A V = D");

  std::string formula_ids;
  for (const auto& f : formula_catalog()) formula_ids += " " + f.id;
  const std::string formula_help = "formula id or all; ids:" + formula_ids;

  std::string which = "all";
  bool widen_faces = false;
  auto* formulas_cmd = app.add_subcommand("formulas", "evaluate closed forms against the oracle on one instance");
  add_common(formulas_cmd, common);
  formulas_cmd->add_option("--which", which, formula_help)->capture_default_str();
  formulas_cmd->add_flag("--face-range-all", widen_faces, "c1-faces over every face, |S| >= 1");

  FamilyFlags family;
  std::string formula;
  bool summary = false;
  auto* verify_cmd = app.add_subcommand("verify", "sweep a family and compare a formula with the oracle");
  add_common(verify_cmd, common);
  add_family(verify_cmd, family);
  verify_cmd->add_option("--formula", formula, formula_help)->required();
  verify_cmd->add_flag("--face-range-all", widen_faces, "c1-faces over every face, |S| >= 1");
  verify_cmd->add_flag("--summary", summary, "list only disagreeing records");

  std::string conj_id = "all";
  ConjectureParams params;
  auto* conj_cmd = app.add_subcommand("conjecture", "collect evidence for an open conjecture");
  add_common(conj_cmd, common);
  conj_cmd->add_option("--id", conj_id, "6.1 .. 6.5 or all")->capture_default_str();
  conj_cmd->add_option("--r-min", params.r_min, "smallest dimension")->capture_default_str();
  conj_cmd->add_option("--r-max", params.r_max, "largest dimension")->capture_default_str();
  conj_cmd->add_option("--max-mult", params.max_mult, "largest multiplicity")->capture_default_str();
  conj_cmd->add_option("--k-max", params.k_max, "hypercube pairs Q_(2^k - 1), Q_(2^k) for k <= K")
      ->capture_default_str();
  conj_cmd->add_option("--cap", params.cap, "largest exhaustive index space")->capture_default_str();
  conj_cmd->add_flag("--summary", summary, "list only counterexamples");

  std::string case_id = "all";
  auto* appendix_cmd = app.add_subcommand("appendix", "recompute the bundled r = 4 invariant factor table");
  add_common(appendix_cmd, common);
  appendix_cmd->add_option("--case", case_id, "case id such as M_1, or all")->capture_default_str();
  appendix_cmd->add_flag("--summary", summary, "list only mismatching cases");

  std::vector<std::string> apply_rows;
  auto* canonical_cmd = app.add_subcommand("canonical", "GL(r, F_2) canonical form");
  add_common(canonical_cmd, common);
  canonical_cmd->add_option("--apply", apply_rows, "rows of a GL matrix to apply first, e.g. 110 010 001");

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(common);
    if (sandpile_cmd->parsed()) return cmd_sandpile(common);
    if (snf_cmd->parsed()) return cmd_snf(common, matrix_path, witnesses);
    if (formulas_cmd->parsed()) return cmd_formulas(common, which, widen_faces);
    if (verify_cmd->parsed()) return cmd_verify(common, family, formula, widen_faces, summary);
    if (conj_cmd->parsed()) return cmd_conjecture(common, conj_id, params, summary);
    if (appendix_cmd->parsed()) return cmd_appendix(common, case_id, summary);
    if (canonical_cmd->parsed()) return cmd_canonical(common, apply_rows);
  } catch (const FamilyTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
