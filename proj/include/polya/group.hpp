#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "polya/perm.hpp"

namespace polya {

inline constexpr std::size_t kDefaultMaxOrder = 1'000'000;

/// Largest n for which symmetric_group(n) is built by default (8! = 40320).
inline constexpr int kDefaultSymmetricCap = 8;

/// A finite permutation group: the identity plus closure under composition
/// and inverse. Immutable after construction; elements are kept sorted by
/// image table for deterministic iteration.
class PermutationGroup {
 public:
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }

  const std::vector<Permutation>& elements() const { return elements_; }

  /// The generating set the group was built from; may be empty.
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;

 private:
  PermutationGroup(int degree, std::vector<Permutation> elements,
                   std::vector<Permutation> generators);

  friend PermutationGroup closure(std::vector<Permutation>, int, std::size_t);

  int degree_;
  std::vector<Permutation> elements_;    // sorted by image table
  std::vector<Permutation> generators_;
};

/// Smallest group containing the generators, by breadth-first products.
/// Exact and simple; fine at the small degrees this library targets, with
/// no attempt at stabilizer-chain scalability. Throws polya::error on a
/// degree mismatch and polya::limit_error once the closure grows past
/// max_order.
PermutationGroup closure(std::vector<Permutation> generators, int degree,
                         std::size_t max_order = kDefaultMaxOrder);

/// Rotations of an n-gon: generated by the n-cycle (1 2 ... n). Order n.
PermutationGroup cyclic_group(int n);

/// Rotations and reflections of an n-gon: generated by (1 2 ... n) and the
/// flip (1 n)(2 n-1)... . Order 2n for n >= 3; n = 1 and n = 2 are
/// degenerate (orders 1 and 2).
PermutationGroup dihedral_group(int n);

/// All n! permutations, via closure of {(1 2), (1 2 ... n)}. The cap keeps
/// the factorial growth at desk scale; exceeding it throws
/// polya::limit_error.
PermutationGroup symmetric_group(int n, int cap = kDefaultSymmetricCap);

/// The identity-only group on {1..n}.
PermutationGroup trivial_group(int n);

/// Group spec strings: "cyclic:N", "dihedral:N", "symmetric:N", "trivial:N",
/// or "gens:<perm>[;<perm>...]@N" with N the degree. Throws
/// polya::parse_error on bad syntax and polya::limit_error when the named
/// group's order exceeds max_order.
PermutationGroup parse_group_spec(std::string_view spec,
                                  std::size_t max_order = kDefaultMaxOrder);

}  // namespace polya
