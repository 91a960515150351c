#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polya/group.hpp"
#include "polya/inventory.hpp"

namespace polya {

/// Assignment position -> color index into a ColorSet; entry i-1 is the
/// color of position i.
using Coloring = std::vector<int>;

/// An equivalence class of colorings under the group action. Members are
/// sorted ascending; the representative is the lexicographically least
/// member.
struct Orbit {
  Coloring representative;
  std::vector<Coloring> members;
};

inline constexpr std::uint64_t kDefaultColoringLimit = 10'000'000;

/// Apply g to a coloring of the positions: the color at position i moves to
/// position g(i), i.e. result[i] = c[g^-1(i)]. With this convention the 90
/// degree rotation (1 2 3 4) sends rwww to wrww.
Coloring act(const Permutation& g, const Coloring& c);

/// Partition all num_colors^degree colorings into orbits, computed by
/// union-find over the generator action (generators suffice; when the
/// stored generator list is empty the elements are used). Orbits are sorted
/// by representative; deterministic. Throws polya::limit_error when the
/// coloring count exceeds limit.
std::vector<Orbit> enumerate_orbits(const PermutationGroup& group, int num_colors,
                                    std::uint64_t limit = kDefaultColoringLimit);

/// (1/|G|) * sum over g of num_colors^(number of cycles of g), in exact
/// integer arithmetic with an exact final division.
Integer burnside_count(const PermutationGroup& group, int num_colors);

/// Number of orbits per color composition. Every member of an orbit uses
/// the same composition, so this is well-defined; compositions carry every
/// color of the set, zero counts included.
std::map<Composition, std::uint64_t> orbit_census(const PermutationGroup& group,
                                                  const ColorSet& colors,
                                                  std::uint64_t limit = kDefaultColoringLimit);

/// The composition of one coloring, every color of the set included.
Composition coloring_composition(const Coloring& c, const ColorSet& colors);

/// "rwww" when all color names are single characters, else dash-joined.
std::string format_coloring(const Coloring& c, const ColorSet& colors);

}  // namespace polya
