#include "polya/polynomial_json.hpp"

namespace polya {

nlohmann::json polynomial_to_json(const Polynomial& p,
                                  const std::vector<std::string>& var_order) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : sorted_terms(p, var_order)) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [name, exp] : m.exponents()) exps[name] = exp;
    arr.push_back({{"coefficient", {{"num", c.num().get_str()}, {"den", c.den().get_str()}}},
                   {"exponents", exps}});
  }
  return arr;
}

}  // namespace polya
