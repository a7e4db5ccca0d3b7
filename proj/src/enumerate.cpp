#include <numeric>
#include <random>
#include <set>

#include "f2sand/harness.hpp"
#include "f2sand/json_io.hpp"

namespace f2sand {

InstanceFamily InstanceFamily::exhaustive(unsigned r, std::uint64_t max_mult) {
  InstanceFamily f;
  f.kind = Kind::kExhaustive;
  f.r = r;
  f.max_mult = max_mult;
  return f;
}

InstanceFamily InstanceFamily::hypercubes(unsigned lo, unsigned hi) {
  InstanceFamily f;
  f.kind = Kind::kHypercubes;
  f.hypercube_min = lo;
  f.hypercube_max = hi;
  return f;
}

InstanceFamily InstanceFamily::random(unsigned r, std::uint64_t max_mult, std::size_t count, std::uint64_t seed) {
  InstanceFamily f;
  f.kind = Kind::kRandom;
  f.r = r;
  f.max_mult = max_mult;
  f.random_count = count;
  f.seed = seed;
  f.dedup = false;
  return f;
}

InstanceFamily InstanceFamily::explicit_list(std::vector<MultiplicityVector> instances) {
  InstanceFamily f;
  f.kind = Kind::kExplicit;
  f.instances = std::move(instances);
  f.dedup = false;
  return f;
}

namespace {

bool passes_filters(const InstanceFamily& f, std::span<const std::uint64_t> dense) {
  std::uint64_t g = 0;
  std::uint32_t parity_sum = 0;
  unsigned evens = 0;
  for (std::uint32_t u = 1; u < dense.size(); ++u) {
    g = std::gcd(g, dense[u]);
    if (dense[u] % 2 == 1) {
      parity_sum ^= u;
    } else {
      ++evens;
    }
  }
  if (g == 0) return false;
  if (f.coprime_only && g != 1) return false;
  if (f.generic_only && parity_sum == 0) return false;
  if (f.omega && evens != *f.omega) return false;
  return support_spans(f.r, dense);
}

// (base)^(exponent), or nullopt once it passes cap.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, unsigned exponent, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (out > cap / base) return std::nullopt;
    out *= base;
  }
  return out;
}

std::vector<MultiplicityVector> enumerate_exhaustive(const InstanceFamily& f) {
  check_dimension(f.r);
  if (f.max_mult < f.min_mult) throw std::invalid_argument("max_mult must be at least min_mult");
  const std::uint64_t base = f.max_mult - f.min_mult + 1;
  const unsigned length = (1u << f.r) - 1;
  const auto total = bounded_power(base, length, f.cap);
  if (!total) {
    throw FamilyTooLarge("family r=" + std::to_string(f.r) + ", multiplicities " + std::to_string(f.min_mult) + ".." +
                         std::to_string(f.max_mult) + " has more than " + std::to_string(f.cap) +
                         " multiplicity vectors; raise the cap to run it");
  }
  const bool table_dedup = f.dedup && f.r <= 4;
  std::vector<std::uint64_t> visited(table_dedup ? *total / 64 + 1 : 0, 0);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> dense(std::size_t{1} << f.r, 0);
  std::vector<MultiplicityVector> out;

  for (std::uint64_t index = 0; index < *total; ++index) {
    if (table_dedup && ((visited[index / 64] >> (index % 64)) & 1u)) continue;
    std::uint64_t rest = index;
    for (unsigned pos = length; pos >= 1; --pos) {
      dense[pos] = f.min_mult + rest % base;
      rest /= base;
    }
    if (!passes_filters(f, dense)) continue;
    auto m = MultiplicityVector::from_dense(f.r, dense);
    if (table_dedup) {
      for (const auto& perm : gl_action_table(f.r)) {
        std::uint64_t image = 0;
        for (unsigned u = 1; u <= length; ++u) image = image * base + (dense[perm[u]] - f.min_mult);
        visited[image / 64] |= std::uint64_t{1} << (image % 64);
      }
    } else if (f.dedup) {
      auto canon = canonical_form(m);
      if (!seen.emplace(canon.dense().begin(), canon.dense().end()).second) continue;
      m = canon;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<MultiplicityVector> enumerate_random(const InstanceFamily& f) {
  check_dimension(f.r);
  if (f.max_mult < f.min_mult) throw std::invalid_argument("max_mult must be at least min_mult");
  std::mt19937_64 rng(f.seed);
  std::uniform_int_distribution<std::uint64_t> draw(f.min_mult, f.max_mult);
  std::vector<std::uint64_t> dense(std::size_t{1} << f.r, 0);
  std::vector<MultiplicityVector> out;
  std::size_t attempts = 0;
  while (out.size() < f.random_count) {
    if (++attempts > 1'000'000) throw std::runtime_error("random family: filters reject nearly every draw");
    for (std::size_t u = 1; u < dense.size(); ++u) dense[u] = draw(rng);
    if (passes_filters(f, dense)) out.push_back(MultiplicityVector::from_dense(f.r, dense));
  }
  return out;
}

}  // namespace

bool InstanceFamily::accepts(const MultiplicityVector& m) const {
  InstanceFamily probe = *this;
  probe.r = m.dim();
  return passes_filters(probe, m.dense());
}

std::vector<MultiplicityVector> enumerate(const InstanceFamily& family) {
  switch (family.kind) {
    case InstanceFamily::Kind::kExhaustive:
      return enumerate_exhaustive(family);
    case InstanceFamily::Kind::kRandom:
      return enumerate_random(family);
    case InstanceFamily::Kind::kHypercubes: {
      if (family.hypercube_min < 1 || family.hypercube_max > kMaxDim || family.hypercube_min > family.hypercube_max) {
        throw std::invalid_argument("hypercube range must satisfy 1 <= lo <= hi <= 16");
      }
      std::vector<MultiplicityVector> out;
      for (unsigned n = family.hypercube_min; n <= family.hypercube_max; ++n) out.push_back(hypercube(n));
      return out;
    }
    case InstanceFamily::Kind::kExplicit: {
      std::vector<MultiplicityVector> out;
      for (const auto& m : family.instances) {
        if (family.accepts(m)) out.push_back(m);
      }
      return out;
    }
  }
  throw std::logic_error("unknown family kind");
}

nlohmann::json InstanceFamily::describe() const {
  nlohmann::json out;
  switch (kind) {
    case Kind::kHypercubes:
      return {{"kind", "hypercubes"}, {"n_min", hypercube_min}, {"n_max", hypercube_max}};
    case Kind::kExplicit: {
      out = {{"kind", "explicit"}, {"instances", nlohmann::json::array()}};
      for (const auto& m : instances) out["instances"].push_back(multiplicity_to_json(m));
      break;
    }
    case Kind::kRandom:
      out = {{"kind", "random"}, {"count", random_count}, {"seed", seed}};
      break;
    case Kind::kExhaustive:
      out = {{"kind", "exhaustive"}, {"dedup", dedup}};
      break;
  }
  if (kind == Kind::kRandom || kind == Kind::kExhaustive) {
    out["r"] = r;
    out["min_mult"] = min_mult;
    out["max_mult"] = max_mult;
  }
  out["generic_only"] = generic_only;
  out["coprime_only"] = coprime_only;
  out["omega"] = omega ? nlohmann::json(*omega) : nlohmann::json(nullptr);
  return out;
}

}  // namespace f2sand
