#include <doctest.h>

#include <filesystem>
#include <set>

#include <unistd.h>

#include "f2sand/harness.hpp"
#include "f2sand/json_io.hpp"
#include "oracles.hpp"

using namespace f2sand;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("f2sand-test-" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

InstanceFamily family(unsigned r, std::uint64_t max_mult, bool dedup = true) {
  auto f = InstanceFamily::exhaustive(r, max_mult);
  f.dedup = dedup;
  return f;
}

// Orbit count by brute-force canonical tuples.
std::size_t oracle_orbits(unsigned r, std::uint64_t max_mult) {
  std::set<std::vector<std::uint64_t>> orbits;
  for (const auto& m : enumerate(family(r, max_mult, false))) {
    orbits.insert(oracle::canonical_tuple(r, {m.dense().begin(), m.dense().end()}));
  }
  return orbits.size();
}

}  // namespace

TEST_CASE("exhaustive enumeration") {
  const auto all = enumerate(family(2, 1, false));
  REQUIRE(all.size() == 4);
  std::set<std::vector<std::uint64_t>> tuples;
  for (const auto& m : all) tuples.insert(m.tuple());
  CHECK(tuples == std::set<std::vector<std::uint64_t>>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(enumerate(family(2, 1)).size() == 2);
  CHECK(enumerate(family(1, 3)).size() == 3);
  CHECK(enumerate(family(2, 2)).size() == 7);
  CHECK(enumerate(family(3, 2)).size() == 50);
}

TEST_CASE("dedup keeps one canonical member per orbit") {
  for (unsigned r = 2; r <= 3; ++r) {
    const auto reps = enumerate(family(r, 2));
    std::set<std::vector<std::uint64_t>> forms;
    for (const auto& m : reps) {
      CHECK(canonical_form(m) == m);
      forms.insert(m.tuple());
    }
    CHECK(forms.size() == reps.size());
    CHECK(reps.size() == oracle_orbits(r, 2));
  }
}

TEST_CASE("enumeration filters") {
  auto generic = family(3, 2);
  generic.generic_only = true;
  const auto g = enumerate(generic);
  CHECK(g.size() == 35);
  for (const auto& m : g) CHECK(is_generic(m));

  auto coprime = family(3, 2);
  coprime.coprime_only = true;
  for (const auto& m : enumerate(coprime)) CHECK(m.gcd() == 1);

  auto omega = family(2, 2, false);
  omega.omega = 0;
  for (const auto& m : enumerate(omega)) CHECK(m.even_count() == 0);
  CHECK(enumerate(omega).size() == 1);

  auto shifted = family(2, 2, false);
  shifted.min_mult = 1;
  CHECK(enumerate(shifted).size() == 8);
}

TEST_CASE("family size cap") {
  CHECK_THROWS_AS(enumerate(family(4, 3)), FamilyTooLarge);
  auto small = family(3, 2);
  small.cap = 100;
  CHECK_THROWS_AS(enumerate(small), FamilyTooLarge);
  small.cap = 3 * 3 * 3 * 3 * 3 * 3 * 3;
  CHECK_NOTHROW(enumerate(small));
}

TEST_CASE("random and explicit families") {
  const auto a = enumerate(InstanceFamily::random(4, 3, 10, 42));
  const auto b = enumerate(InstanceFamily::random(4, 3, 10, 42));
  CHECK(a.size() == 10);
  CHECK(a == b);
  CHECK(a != enumerate(InstanceFamily::random(4, 3, 10, 43)));

  auto explicit_family = InstanceFamily::explicit_list({hypercube(3), complete_generators(3), scale(hypercube(3), 2)});
  explicit_family.coprime_only = true;
  CHECK(enumerate(explicit_family).size() == 2);
  CHECK(enumerate(InstanceFamily::hypercubes(2, 5)).size() == 4);
  CHECK_THROWS_AS(enumerate(InstanceFamily::hypercubes(3, 2)), std::invalid_argument);
}

TEST_CASE("result cache round trip") {
  TempDir dir;
  ResultCache cache(dir.path);
  const auto q3 = hypercube(3);
  CHECK_FALSE(cache.load(q3).has_value());
  cache.store(q3, sandpile_group(q3));
  CHECK(cache.load(q3) == sandpile_group(q3));
  CHECK(ResultCache::key_text(q3) == "r=3;1,1,0,1,0,0,0");
  CHECK(ResultCache::key_hash(q3).size() == 64);
  CHECK(fs::exists(dir.path / (ResultCache::key_hash(q3) + ".json")));

  SandpileOracle oracle(&cache);
  const auto m = MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{1, 2, 0});
  const auto first = oracle.group(m);
  // A GL-image of m shares its cache entry.
  const auto image = MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{2, 1, 0});
  const auto second = oracle.group(image);
  CHECK(first == second);
  CHECK(oracle.misses() == 1);
  CHECK(oracle.hits() == 1);
  CHECK(oracle.full_diagonal(hypercube(2)) == std::vector<mpz_class>{1, 1, 4, 0});
}

TEST_CASE("json round trip") {
  const auto m = MultiplicityVector::from_tuple(3, std::vector<std::uint64_t>{1, 0, 2, 3, 0, 1, 1});
  CHECK(multiplicity_from_json(multiplicity_to_json(m)) == m);
  CHECK(multiplicity_from_json(nlohmann::json::parse(R"({"columns": ["01", "10", "10"]})")) ==
        MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{1, 2, 0}));
  const auto g = group_to_json(sandpile_group(hypercube(3)));
  CHECK(g["invariant_factors"] == nlohmann::json::array({"2", "8", "24"}));
  CHECK(g["sylow"]["2"] == nlohmann::json::array({1, 3, 3}));
  CHECK_THROWS(multiplicity_from_json(nlohmann::json::parse(R"({"r": 2, "mu": {"11": 1}})")));
}

TEST_CASE("formula sweeps") {
  CHECK(formula_catalog().size() == 15);
  const auto d = verify(family(3, 2), "d-generic");
  CHECK(d.records.size() == 35);
  CHECK(d.unflagged_disagreements() == 0);
  CHECK(d.skipped == 15);

  const auto top = verify(InstanceFamily::hypercubes(2, 6), "qn-top");
  CHECK(top.records.size() == 5);
  CHECK(top.disagreements() == 0);

  for (const char* id : {"parity", "c1-divisor", "c1-faces", "r2", "r3-top", "scaling", "odd-sylow"}) {
    CHECK_MESSAGE(verify(family(2, 2), id).disagreements() == 0, id);
  }
  CHECK_THROWS_AS(verify(family(2, 1), "no-such-formula"), std::invalid_argument);
}

TEST_CASE("frozen disagreement counts") {
  // Max of the monomial orders misses c_1 on one r = 2 orbit.
  const auto mono = verify(family(2, 2), "c1-monomials");
  CHECK(mono.disagreements() == 1);
  CHECK(mono.proved());

  auto generic = InstanceFamily::exhaustive(3, 3);
  generic.generic_only = true;
  generic.coprime_only = true;
  const auto r3 = verify(generic, "r3-generic");
  CHECK(r3.disagreements() == 8);
  CHECK(verify(generic, "profile").disagreements() == 0);
  CHECK(verify(generic, "r3-top").disagreements() == 0);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  RunOptions one, two;
  two.jobs = 2;
  const auto a = verify(family(3, 2), "c1-faces", one).to_json();
  const auto b = verify(family(3, 2), "c1-faces", two).to_json();
  CHECK(a == b);
  CHECK(a.dump() == verify(family(3, 2), "c1-faces", one).to_json().dump());
}

TEST_CASE("cached sweeps match uncached sweeps") {
  TempDir dir;
  ResultCache cache(dir.path);
  RunOptions cached;
  cached.cache = &cache;
  const auto plain = verify(family(3, 2), "r3-top").to_json();
  CHECK(verify(family(3, 2), "r3-top", cached).to_json() == plain);
  CHECK(verify(family(3, 2), "r3-top", cached).to_json() == plain);
}

TEST_CASE("conjecture sweeps") {
  ConjectureParams small;
  small.max_mult = 2;
  const auto c1 = check_conjecture("6.1", small);
  CHECK(c1.kind == "conjecture");
  CHECK(c1.disagreements() == 0);
  CHECK_FALSE(c1.proved());
  const auto c5 = check_conjecture("6.5", small);
  CHECK(c5.records.size() == 2);
  CHECK(c5.disagreements() == 0);
  CHECK(check_conjecture("6.3", small).evidence.contains("eigenvalue_classes"));
  CHECK_THROWS_AS(check_conjecture("7.1", small), std::invalid_argument);
}

TEST_CASE("appendix reproduction") {
  CHECK(appendix_cases().size() == 34);
  const auto m1 = reproduce_appendix("M_1");
  REQUIRE(m1.records.size() == 1);
  CHECK(m1.records[0].agree);
  const auto m0 = reproduce_appendix("M_0");
  REQUIRE(m0.records.size() == 1);
  CHECK_FALSE(m0.records[0].agree);
  CHECK(m0.records[0].flagged);
  CHECK(m0.unflagged_disagreements() == 0);
  CHECK_THROWS_AS(reproduce_appendix("M_99"), std::invalid_argument);
}

TEST_CASE("parallel_for propagates exceptions") {
  std::vector<int> hits(20, 0);
  parallel_for(hits.size(), 3, [&](std::size_t i) { hits[i] = 1; });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 20);
  CHECK_THROWS_AS(parallel_for(5, 2, [](std::size_t i) {
                    if (i == 3) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}
