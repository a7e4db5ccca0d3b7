#include "f2sand/json_io.hpp"

#include <stdexcept>

namespace f2sand {

using nlohmann::json;

MultiplicityVector multiplicity_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("instance must be a JSON object");
  if (doc.contains("columns")) {
    std::vector<BitVector> columns;
    for (const auto& c : doc.at("columns")) columns.push_back(BitVector::parse(c.get<std::string>()));
    return MultiplicityVector::from_columns(columns);
  }
  if (!doc.contains("r") || !doc.contains("mu")) {
    throw std::invalid_argument("instance needs either \"columns\" or both \"r\" and \"mu\"");
  }
  const auto r = doc.at("r").get<unsigned>();
  std::map<BitVector, std::uint64_t> mu;
  for (const auto& [key, value] : doc.at("mu").items()) {
    auto u = BitVector::parse(key);
    if (!value.is_number_integer() || value.get<long long>() < 0) {
      throw std::invalid_argument("multiplicity of " + key + " must be a nonnegative integer");
    }
    mu[u] += value.get<std::uint64_t>();
  }
  return MultiplicityVector::from_map(r, mu);
}

json multiplicity_to_json(const MultiplicityVector& m) {
  json mu = json::object();
  for (std::uint32_t u = 1; u < m.vertex_count(); ++u) {
    if (m.at(u) != 0) mu[BitVector(m.dim(), u).str()] = m.at(u);
  }
  return {{"r", m.dim()}, {"mu", mu}};
}

json integers_to_json(std::span<const mpz_class> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::vector<mpz_class> integers_from_json(const json& values) {
  std::vector<mpz_class> out;
  for (const auto& v : values) {
    if (v.is_number_integer()) {
      out.emplace_back(std::to_string(v.get<std::int64_t>()));
    } else {
      out.emplace_back(v.get<std::string>());
    }
  }
  return out;
}

json group_to_json(const GroupDecomposition& g) {
  json sylow = json::object();
  for (const auto& [p, exps] : g.sylow()) sylow[std::to_string(p)] = exps;
  return {{"invariant_factors", integers_to_json(g.invariant_factors())}, {"sylow", sylow}};
}

json matrix_to_json(const IntegerMatrix& a) { return a.to_strings(); }

}  // namespace f2sand
