// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "f2sand/harness.hpp"
#include "f2sand/valuation.hpp"
#include "oracles.hpp"

using namespace f2sand;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<mpz_class> ints(std::initializer_list<long> values) {
  std::vector<mpz_class> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

MultiplicityVector from_map(unsigned r, std::initializer_list<std::pair<const char*, std::uint64_t>> entries) {
  std::map<BitVector, std::uint64_t> mu;
  for (const auto& [bits, mult] : entries) mu[BitVector::parse(bits)] = mult;
  return MultiplicityVector::from_map(r, mu);
}

std::string join(const std::vector<mpz_class>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ",") + v.get_str();
  return out;
}

Outcome q3_group() {
  const auto g = sandpile_group(hypercube(3));
  return {g.invariant_factors() == ints({2, 8, 24}), "factors " + join(g.invariant_factors())};
}

Outcome example_triple() {
  const auto vert = sandpile_group(from_map(3, {{"001", 1}, {"010", 1}, {"100", 2}}));
  const auto k8 = sandpile_group(complete_generators(3));
  const bool pass = vert.invariant_factors() == ints({4, 12, 48}) && k8.invariant_factors() == ints({8, 8, 8, 8, 8, 8});
  return {pass, "Q3vert " + join(vert.invariant_factors()) + "; K8 " + join(k8.invariant_factors())};
}

Outcome generic_d() {
  std::ostringstream detail;
  std::size_t bad = 0;
  for (unsigned r = 2; r <= 4; ++r) {
    auto f = InstanceFamily::exhaustive(r, 2);
    f.generic_only = true;
    const auto report = verify(f, "d-generic");
    bad += report.disagreements();
    detail << "r=" << r << ": " << report.records.size() << " orbits, " << report.disagreements() << " exceptions; ";
  }
  return {bad == 0, detail.str()};
}

Outcome hypercube_factors() {
  const auto top = verify(InstanceFamily::hypercubes(2, 7), "qn-top");
  const auto second = verify(InstanceFamily::hypercubes(2, 7), "qn-second");
  const bool pass = top.disagreements() == 0 && second.disagreements() == 0 && top.records.size() == 6 &&
                    second.records.size() == 5;
  return {pass, "top " + std::to_string(top.agreements()) + "/6, middle " + std::to_string(second.agreements()) + "/5"};
}

Outcome sharpness_values() {
  const auto q3 = sandpile_group(hypercube(3)), q4 = sandpile_group(hypercube(4)), q5 = sandpile_group(hypercube(5));
  const unsigned a = v2_finite(q4.largest()), b = v2_finite(q3.largest()), c = v2_finite(q5.kth_largest(2));
  const bool pass = a == 5 && b == 3 && c == 6 && top_cyclic_qn_v2(4) == 5 && top_cyclic_qn_v2(3) == 3 &&
                    second_cyclic_qn_v2(5) == 6;
  return {pass, "v2 c1(Q4)=" + std::to_string(a) + " c1(Q3)=" + std::to_string(b) + " c2(Q5)=" + std::to_string(c)};
}

Outcome binomial_sums() {
  std::size_t cases = 0, bad = 0;
  for (std::uint64_t p = 1; p <= 150; ++p) {
    for (std::uint64_t q = 0; q <= 120; ++q, ++cases) bad += binomial_sum_v2(p, q) != oracle::v2_of(oracle::binomial_sum(p, q));
  }
  return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"};
}

Outcome kummer() {
  std::size_t cases = 0, bad = 0;
  for (std::uint64_t a = 0; a <= 300; ++a) {
    for (std::uint64_t b = 0; b <= a; ++b, ++cases) bad += kummer_v2_binomial(a, b) != oracle::v2_of(oracle::binomial(a, b));
  }
  const unsigned spot = kummer_v2_binomial(500, 317);
  const bool pass = bad == 0 && spot == 6 && oracle::v2_of(oracle::binomial(500, 317)) == 6;
  return {pass, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches, v2 C(500,317)=" + std::to_string(spot)};
}

// All M with r in {2, 3}, multiplicities <= 2, plus 30 seeded random r = 4 instances.
std::vector<MultiplicityVector> c1_family() {
  std::vector<MultiplicityVector> out;
  for (unsigned r = 2; r <= 3; ++r) {
    auto f = InstanceFamily::exhaustive(r, 2);
    f.dedup = false;
    for (auto& m : enumerate(f)) out.push_back(std::move(m));
  }
  for (auto& m : enumerate(InstanceFamily::random(4, 3, 30, 1))) out.push_back(std::move(m));
  return out;
}

Outcome c1_equivalence() {
  std::size_t mono_bad = 0, face_bad = 0, lcm_bad = 0;
  std::string example;
  const auto family = c1_family();
  for (const auto& m : family) {
    const auto c1 = sandpile_group(m).largest();
    const auto mono = c1_via_monomial_orders(m);
    if (mono != c1) {
      ++mono_bad;
      if (example.empty()) example = m.describe() + " max " + mono.get_str() + " vs c1 " + c1.get_str();
    }
    face_bad += c1_via_face_means(m) != c1;
    lcm_bad += c1_via_monomial_lcm(m) != c1;
  }
  std::ostringstream detail;
  detail << family.size() << " instances; monomial max route " << mono_bad << " mismatches";
  if (!example.empty()) detail << " (e.g. " << example << ")";
  detail << "; face route " << face_bad << " mismatches; lcm of monomial orders " << lcm_bad << " mismatches";
  return {mono_bad == 0 && face_bad == 0, detail.str()};
}

Outcome c1_divisor() {
  std::size_t bad = 0;
  const auto family = c1_family();
  for (const auto& m : family) bad += c1_divisor_bound(m) % sandpile_group(m).largest() != 0;
  return {bad == 0, std::to_string(family.size()) + " instances, " + std::to_string(bad) + " failures"};
}

Outcome r2_classification() {
  std::size_t cases = 0, bad = 0;
  for (std::uint64_t a = 1; a <= 8; ++a) {
    for (std::uint64_t b = 1; b <= 8; ++b) {
      for (std::uint64_t c = 1; c <= 8; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        ++cases;
        const auto m = MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{a, b, c});
        bad += r2_syl2(a, b, c) != sandpile_group(m).sylow(2);
      }
    }
  }
  return {bad == 0, std::to_string(cases) + " triples, " + std::to_string(bad) + " mismatches"};
}

Outcome r3_generic() {
  auto f = InstanceFamily::exhaustive(3, 3);
  f.generic_only = true;
  f.coprime_only = true;
  f.dedup = false;
  const auto family = enumerate(f);
  std::size_t syl_bad = 0, top_bad = 0, profile_bad = 0;
  std::string example;
  for (const auto& m : family) {
    const auto g = sandpile_group(m);
    const auto predicted = r3_generic_syl2(m);
    if (predicted != g.sylow(2)) {
      ++syl_bad;
      if (example.empty()) example = m.describe();
    }
    top_bad += r3_top_cyclic_v2(m) != v2_finite(g.largest());
    profile_bad += !generic_profile_check(m);
  }
  std::ostringstream detail;
  detail << family.size() << " instances; classification " << syl_bad << " mismatches";
  if (!example.empty()) detail << " (e.g. " << example << ")";
  detail << "; top factor " << top_bad << " mismatches; profile " << profile_bad << " mismatches";
  return {syl_bad == 0 && top_bad == 0 && profile_bad == 0, detail.str()};
}

Outcome appendix() {
  const auto report = reproduce_appendix("all");
  bool m0_flagged = false;
  std::string m0_truth;
  for (const auto& rec : report.records) {
    if (rec.flagged) {
      m0_flagged = rec.instance.tuple() == std::vector<std::uint64_t>(15, 1);
      m0_truth = rec.observed.dump();
    }
  }
  const bool pass = report.records.size() == appendix_cases().size() && report.unflagged_disagreements() == 0 &&
                    report.flagged() == 1 && m0_flagged;
  return {pass, std::to_string(report.agreements()) + "/" + std::to_string(report.records.size()) + " match, " +
                    std::to_string(report.flagged()) + " flagged; M_0 recomputed " + m0_truth};
}

Outcome property_suites() {
  std::ostringstream detail;
  std::size_t bad = 0;
  for (const char* id : {"parity", "even-odd-switch", "scaling"}) {
    std::size_t checked = 0, wrong = 0;
    for (unsigned r = 1; r <= 3; ++r) {
      auto f = InstanceFamily::exhaustive(r, 2);
      f.dedup = false;
      const auto report = verify(f, id);
      checked += report.records.size();
      wrong += report.disagreements();
    }
    bad += wrong;
    detail << id << " " << checked - wrong << "/" << checked << "; ";
  }
  return {bad == 0, detail.str()};
}

Outcome conjectures() {
  std::ostringstream detail;
  const ConjectureParams params;
  for (const auto& id : conjecture_ids()) {
    const auto report = check_conjecture(id, params);
    if (report.records.empty()) return {false, "conjecture " + id + " produced no records"};
    detail << id << ": " << report.agreements() << "/" << report.records.size() << " consistent; ";
  }
  return {true, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "K(Q3) invariant factors", 1.0, q3_group},
      {2, "Q3vert and K8 groups", 1.0, example_triple},
      {3, "generic d(M), r = 2..4, multiplicities <= 2", 600.0, generic_d},
      {4, "hypercube top and middle factors, n = 2..7", 600.0, hypercube_factors},
      {5, "hypercube sharpness values", 60.0, sharpness_values},
      {6, "binomial reciprocal sum valuation", 60.0, binomial_sums},
      {7, "Kummer carries", 60.0, kummer},
      {8, "c1 from SNF, monomial orders, face means", 600.0, c1_equivalence},
      {9, "c1 divides 2^(r-2) lcm of eigenvalues", 600.0, c1_divisor},
      {10, "r = 2 Sylow-2 classification", 60.0, r2_classification},
      {11, "generic r = 3 classification, top factor, profile", 120.0, r3_generic},
      {12, "r = 4 table reproduction", 600.0, appendix},
      {13, "parity, even-odd switch, scaling properties", 600.0, property_suites},
      {14, "conjecture evidence runs", 600.0, conjectures},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += " [over time limit " + std::to_string(c.limit_seconds) + " s]";
    }
    failures += !outcome.pass;
    std::printf("criterion %2d %s  %s (%.2f s): %s\n", c.id, outcome.pass ? "PASS" : "FAIL", c.name, elapsed,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
