#include "f2sand/cache.hpp"

#include <openssl/sha.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "f2sand/json_io.hpp"

namespace f2sand {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string ResultCache::key_text(const MultiplicityVector& m) {
  std::ostringstream out;
  out << "r=" << m.dim() << ';';
  const auto t = m.tuple();
  for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  return out.str();
}

std::string ResultCache::key_hash(const MultiplicityVector& m) {
  const std::string text = key_text(m);
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), digest);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char b : digest) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 15]);
  }
  return out;
}

fs::path ResultCache::path_for(const MultiplicityVector& m) const { return dir_ / (key_hash(m) + ".json"); }

std::optional<GroupDecomposition> ResultCache::load(const MultiplicityVector& key) const {
  std::shared_lock lock(mutex_);
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    // A hash collision or a stale record must not be trusted.
    if (doc.at("key") != key_text(key)) return std::nullopt;
    return GroupDecomposition::from_invariant_factors(integers_from_json(doc.at("invariant_factors")));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const MultiplicityVector& key, const GroupDecomposition& group) {
  const nlohmann::json doc = {{"key", key_text(key)},
                              {"invariant_factors", integers_to_json(group.invariant_factors())}};
  std::unique_lock lock(mutex_);
  const fs::path target = path_for(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::this_thread::get_id();
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache record " + tmp.string());
  }
  fs::rename(tmp, target);
}

GroupDecomposition SandpileOracle::group(const MultiplicityVector& m) const {
  if (cache_ == nullptr) {
    ++misses_;
    return sandpile_group(m);
  }
  const MultiplicityVector key = m.dim() <= 4 ? canonical_form(m) : m;
  if (auto hit = cache_->load(key)) {
    ++hits_;
    return *hit;
  }
  ++misses_;
  auto group = sandpile_group(m);
  cache_->store(key, group);
  return group;
}

std::vector<mpz_class> SandpileOracle::full_diagonal(const MultiplicityVector& m) const {
  const auto g = group(m);
  const auto& factors = g.invariant_factors();
  std::vector<mpz_class> out(m.vertex_count() - 1 - factors.size(), 1);
  out.insert(out.end(), factors.begin(), factors.end());
  out.emplace_back(0);
  return out;
}

}  // namespace f2sand
