#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "polya/polynomial.hpp"

namespace polya {

/// JSON form: a list of {"coefficient": {"num": str, "den": str},
/// "exponents": {var: exp}} in the same term order as to_string.
nlohmann::json polynomial_to_json(const Polynomial& p,
                                  const std::vector<std::string>& var_order);

}  // namespace polya
