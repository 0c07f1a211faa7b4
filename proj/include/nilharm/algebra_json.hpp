#pragma once

#include <json.hpp>

#include "nilharm/algebra.hpp"

namespace nilharm {

/// Structure-constant export: {dim, labels, center, brackets: [{i, j, coeffs}]}
/// with every rational written as a "p/q" string. Metadata and named
/// orderings ride along under "metadata" and "orderings".
nlohmann::json algebra_to_json(const LieAlgebraData& alg);

LieAlgebraData algebra_from_json(const nlohmann::json& doc);

}  // namespace nilharm
