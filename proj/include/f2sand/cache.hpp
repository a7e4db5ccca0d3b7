#pragma once

#include <atomic>
#include <filesystem>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "f2sand/cayley.hpp"
#include "f2sand/exactla.hpp"

namespace f2sand {

/// Directory of JSON records, one per instance, named by the SHA-256 of the
/// instance's text key. Lookups may run concurrently; stores are serialized
/// and land atomically through a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<GroupDecomposition> load(const MultiplicityVector& key) const;
  void store(const MultiplicityVector& key, const GroupDecomposition& group);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// "r=<r>;<mu_1>,...,<mu_{2^r-1}>"
  static std::string key_text(const MultiplicityVector& m);
  static std::string key_hash(const MultiplicityVector& m);

 private:
  std::filesystem::path path_for(const MultiplicityVector& m) const;

  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
};

/// Sandpile groups by SNF, optionally memoized in a ResultCache. Keys are
/// canonical forms for r <= 4 and the instance itself above that, where the
/// orbit search costs more than the SNF.
class SandpileOracle {
 public:
  explicit SandpileOracle(ResultCache* cache = nullptr) : cache_(cache) {}

  GroupDecomposition group(const MultiplicityVector& m) const;
  /// Full SNF diagonal of the Laplacian (2^r entries: ones, factors, one zero),
  /// rebuilt from the group.
  std::vector<mpz_class> full_diagonal(const MultiplicityVector& m) const;

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  ResultCache* cache_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

}  // namespace f2sand
