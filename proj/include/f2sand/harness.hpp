#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "f2sand/cache.hpp"
#include "f2sand/cayley.hpp"
#include "f2sand/classify.hpp"

namespace f2sand {

/// Raised when an exhaustive family would exceed its index-space cap.
class FamilyTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of instances to sweep.
///
/// Exhaustive families range every multiplicity over [min_mult, max_mult] and
/// keep the spanning ones that pass the filters; with dedup on, only the
/// lexicographically minimal member of each GL-orbit is kept, so every
/// emitted instance is its own canonical form.
struct InstanceFamily {
  enum class Kind { kExhaustive, kHypercubes, kRandom, kExplicit };

  Kind kind = Kind::kExhaustive;
  unsigned r = 2;
  std::uint64_t min_mult = 0;
  std::uint64_t max_mult = 1;
  bool generic_only = false;
  bool coprime_only = false;
  /// Required number of even multiplicities among the 2^r - 1 generators.
  std::optional<unsigned> omega;
  bool dedup = true;
  /// Upper bound on the (max_mult - min_mult + 1)^(2^r - 1) index space.
  std::uint64_t cap = 200'000'000;

  unsigned hypercube_min = 2;
  unsigned hypercube_max = 7;

  std::size_t random_count = 30;
  std::uint64_t seed = 1;

  std::vector<MultiplicityVector> instances;

  static InstanceFamily exhaustive(unsigned r, std::uint64_t max_mult);
  static InstanceFamily hypercubes(unsigned lo, unsigned hi);
  static InstanceFamily random(unsigned r, std::uint64_t max_mult, std::size_t count, std::uint64_t seed);
  static InstanceFamily explicit_list(std::vector<MultiplicityVector> instances);

  /// Filters only; spanning is a type invariant.
  bool accepts(const MultiplicityVector& m) const;
  nlohmann::json describe() const;
};

/// Deterministic for fixed fields. Throws FamilyTooLarge past the cap.
std::vector<MultiplicityVector> enumerate(const InstanceFamily& family);

struct InstanceRecord {
  MultiplicityVector instance;
  nlohmann::json predicted;
  nlohmann::json observed;
  bool agree = true;
  /// A disagreement that matches a known inconsistency in the source data.
  bool flagged = false;
  std::string note{};

  nlohmann::json to_json() const;
};

struct SweepReport {
  std::string id;
  std::string title;
  /// "theorem", "appendix", "conjecture", or "variant" for a deliberately
  /// altered formula. Only the first two can fail a run.
  std::string kind;
  nlohmann::json family;
  std::vector<InstanceRecord> records;
  /// Instances outside the formula's hypotheses.
  std::size_t skipped = 0;
  nlohmann::json evidence = nlohmann::json::object();

  std::size_t agreements() const;
  std::size_t disagreements() const;
  std::size_t flagged() const;
  /// Disagreements that are not flagged. Nonzero means a failed theorem check.
  std::size_t unflagged_disagreements() const;
  bool proved() const { return kind == "theorem" || kind == "appendix"; }

  /// Records that agree are listed only when include_records is set;
  /// disagreements always are.
  nlohmann::json to_json(bool include_records = true) const;
};

struct RunOptions {
  unsigned jobs = 1;
  ResultCache* cache = nullptr;
  FaceRange face_range = FaceRange::kAtLeastTwo;
};

struct FormulaInfo {
  std::string id;
  std::string title;
  bool proved;
};

const std::vector<FormulaInfo>& formula_catalog();

/// Outcome of one formula on one instance; nullopt from check_formula means
/// the instance lies outside the formula's hypotheses.
struct FormulaCheck {
  nlohmann::json predicted;
  nlohmann::json observed;
  bool agree = true;
  std::string note{};
};

std::optional<FormulaCheck> check_formula(const std::string& id, const MultiplicityVector& m,
                                          const SandpileOracle& oracle, const RunOptions& options = {});

SweepReport verify(const InstanceFamily& family, const std::string& formula_id, const RunOptions& options = {});

struct ConjectureParams {
  unsigned r_min = 2;
  unsigned r_max = 3;
  std::uint64_t max_mult = 3;
  /// Conjecture on Q_{2^k - 1} versus Q_{2^k}: k ranges over 1..k_max.
  unsigned k_max = 2;
  std::uint64_t cap = 200'000'000;
};

const std::vector<std::string>& conjecture_ids();
SweepReport check_conjecture(const std::string& id, const ConjectureParams& params, const RunOptions& options = {});

struct AppendixCase {
  std::string id;
  std::vector<std::uint64_t> multiplicities;
  std::vector<std::string> alpha;
  unsigned d;
  bool known_discrepancy;
  bool commented_out;
  std::string note{};
};

/// The bundled r = 4 table.
const std::vector<AppendixCase>& appendix_cases();
/// case_id "all" runs every case.
SweepReport reproduce_appendix(const std::string& case_id, const RunOptions& options = {});

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Exceptions are
/// rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace f2sand
