#pragma once

#include <map>
#include <string>
#include <vector>

#include "polya/group.hpp"
#include "polya/polynomial.hpp"

namespace polya {

/// An ordered list of distinct color names.
class ColorSet {
 public:
  /// Throws polya::error on an empty list, an empty name, or a duplicate.
  explicit ColorSet(std::vector<std::string> colors);

  /// Auto-generated names c1..ck.
  static ColorSet numbered(int k);

  std::size_t size() const { return colors_.size(); }
  const std::vector<std::string>& names() const { return colors_; }

  bool contains(const std::string& name) const;

  /// 0-based index; throws polya::error for an unknown name.
  int index_of(const std::string& name) const;

 private:
  std::vector<std::string> colors_;
};

/// How many positions receive each color. Colors not mentioned count as 0.
struct Composition {
  std::map<std::string, int> counts;

  int total() const;

  auto operator<=>(const Composition&) const = default;
};

/// The color monomial of a composition (zero counts omitted). Throws
/// polya::error if a key is not in the color set or a count is negative.
Monomial composition_monomial(const ColorSet& colors, const Composition& comp);

/// Name of the cycle-index variable for cycle length len: "x1", "x2", ...
/// One variable per length (rather than powers of a single variable) keeps
/// the power-sum substitution well-defined.
std::string cycle_index_variable(int len);

/// Variable order x1 < x2 < ... < xn for rendering cycle indices of a
/// degree-n group.
std::vector<std::string> cycle_index_variable_order(int degree);

/// (1/|G|) * sum over g of prod over cycle lengths l of x_l^count, where
/// count is the number of l-cycles of g.
Polynomial cycle_index(const PermutationGroup& group);

/// The cycle index with every x_i replaced by the sum of i-th powers of the
/// color variables. Coefficients are always nonnegative integers.
Polynomial pattern_inventory(const PermutationGroup& group, const ColorSet& colors);

/// Number of distinct colorings with num_colors colors up to the group's
/// symmetry: the exact Burnside average (1/|G|) * sum of
/// num_colors^(cycle count). Throws polya::error if the average is not an
/// integer, which cannot happen for a closed group.
Integer count_distinct(const PermutationGroup& group, int num_colors);

/// The same count read off an already materialized pattern inventory, by
/// evaluating it with every color set to 1.
Integer count_distinct(const Polynomial& inventory);

/// Coefficient of the composition's monomial in the pattern inventory.
/// Throws polya::error unless the composition sums to the group degree.
Integer count_by_composition(const PermutationGroup& group, const ColorSet& colors,
                             const Composition& comp);

}  // namespace polya
