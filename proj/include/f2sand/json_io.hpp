#pragma once

#include <json.hpp>

#include "f2sand/cayley.hpp"
#include "f2sand/exactla.hpp"

namespace f2sand {

/// Accepts {"r": 3, "mu": {"101": 2, ...}} or {"columns": ["101", ...]}.
MultiplicityVector multiplicity_from_json(const nlohmann::json& doc);
/// Writes the {"r", "mu"} form with only the nonzero multiplicities.
nlohmann::json multiplicity_to_json(const MultiplicityVector& m);

/// {"invariant_factors": ["2", "8", "24"], "sylow": {"2": [1, 3, 3], "3": [1]}}
nlohmann::json group_to_json(const GroupDecomposition& g);
nlohmann::json matrix_to_json(const IntegerMatrix& a);
nlohmann::json integers_to_json(std::span<const mpz_class> values);
/// Accepts decimal strings and JSON integers.
std::vector<mpz_class> integers_from_json(const nlohmann::json& values);

}  // namespace f2sand
