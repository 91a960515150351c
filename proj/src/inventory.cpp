#include "polya/inventory.hpp"

#include <algorithm>

namespace polya {

ColorSet::ColorSet(std::vector<std::string> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) throw error("color set is empty");
  for (const auto& name : colors_) {
    if (name.empty()) throw error("color name is empty");
  }
  auto sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw error("duplicate color \"" + *dup + "\"");
}

ColorSet ColorSet::numbered(int k) {
  if (k < 1) throw error("number of colors must be >= 1, got " + std::to_string(k));
  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 1; i <= k; ++i) names.push_back("c" + std::to_string(i));
  return ColorSet(std::move(names));
}

bool ColorSet::contains(const std::string& name) const {
  return std::find(colors_.begin(), colors_.end(), name) != colors_.end();
}

int ColorSet::index_of(const std::string& name) const {
  auto it = std::find(colors_.begin(), colors_.end(), name);
  if (it == colors_.end()) throw error("unknown color \"" + name + "\"");
  return static_cast<int>(it - colors_.begin());
}

int Composition::total() const {
  int t = 0;
  for (const auto& [name, count] : counts) t += count;
  return t;
}

Monomial composition_monomial(const ColorSet& colors, const Composition& comp) {
  std::map<std::string, int> exps;
  for (const auto& [name, count] : comp.counts) {
    if (!colors.contains(name)) throw error("unknown color \"" + name + "\"");
    if (count < 0) throw error("negative count for color \"" + name + "\"");
    if (count > 0) exps[name] = count;
  }
  return Monomial(std::move(exps));
}

std::string cycle_index_variable(int len) {
  return "x" + std::to_string(len);
}

std::vector<std::string> cycle_index_variable_order(int degree) {
  std::vector<std::string> order;
  order.reserve(degree);
  for (int len = 1; len <= degree; ++len) order.push_back(cycle_index_variable(len));
  return order;
}

Polynomial cycle_index(const PermutationGroup& group) {
  Polynomial sum;
  for (const auto& g : group.elements()) {
    std::map<std::string, int> exps;
    for (const auto& [len, count] : cycle_type(g).counts)
      exps[cycle_index_variable(len)] = count;
    sum += Polynomial::term(1, Monomial(std::move(exps)));
  }
  return scale(sum, Rational(Integer(1), Integer(static_cast<unsigned long>(group.order()))));
}

Polynomial pattern_inventory(const PermutationGroup& group, const ColorSet& colors) {
  const Polynomial index = cycle_index(group);
  std::map<std::string, Polynomial> bindings;
  for (const auto& var : index.variables()) {
    const int len = std::stoi(var.substr(1));  // variables are "x<len>"
    Polynomial power_sum;
    for (const auto& color : colors.names())
      power_sum += Polynomial::variable(color, len);
    bindings.emplace(var, std::move(power_sum));
  }
  return index.substitute(bindings);
}

Integer count_distinct(const PermutationGroup& group, int num_colors) {
  if (num_colors < 1)
    throw error("number of colors must be >= 1, got " + std::to_string(num_colors));
  Integer sum = 0;
  for (const auto& g : group.elements())
    sum += ipow(Integer(num_colors), static_cast<unsigned long>(cycle_type(g).cycle_count()));
  const Integer order(static_cast<unsigned long>(group.order()));
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw error("Burnside sum " + sum.get_str() + " not divisible by group order " +
                order.get_str() + "; group is not closed");
  Integer result;
  mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), order.get_mpz_t());
  return result;
}

Integer count_distinct(const Polynomial& inventory) {
  std::map<std::string, Rational> ones;
  for (const auto& var : inventory.variables()) ones.emplace(var, 1);
  const Rational value = inventory.evaluate(ones);
  if (!value.is_integer() || value.sign() < 0)
    throw error("pattern inventory evaluates to non-integer " + value.str());
  return value.num();
}

Integer count_by_composition(const PermutationGroup& group, const ColorSet& colors,
                             const Composition& comp) {
  if (comp.total() != group.degree())
    throw error("composition sums to " + std::to_string(comp.total()) +
                ", but the group degree is " + std::to_string(group.degree()));
  const Monomial m = composition_monomial(colors, comp);
  const Rational c = pattern_inventory(group, colors).coefficient(m);
  if (!c.is_integer() || c.sign() < 0)
    throw error("inventory coefficient is non-integer " + c.str());
  return c.num();
}

}  // namespace polya
