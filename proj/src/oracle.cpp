#include "polya/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace polya {

namespace {

// k^n with an early limit check, so the product never overflows.
std::uint64_t checked_coloring_count(int num_colors, int degree, std::uint64_t limit) {
  if (num_colors < 1)
    throw error("number of colors must be >= 1, got " + std::to_string(num_colors));
  const auto k = static_cast<std::uint64_t>(num_colors);
  std::uint64_t total = 1;
  for (int i = 0; i < degree; ++i) {
    if (total > limit / k)
      throw limit_error(std::to_string(num_colors) + "^" + std::to_string(degree) +
                        " colorings exceed the limit of " + std::to_string(limit));
    total *= k;
  }
  if (total > limit)
    throw limit_error(std::to_string(num_colors) + "^" + std::to_string(degree) +
                      " colorings exceed the limit of " + std::to_string(limit));
  // The union-find parents are 32-bit.
  if (total > std::numeric_limits<std::uint32_t>::max())
    throw limit_error("coloring count " + std::to_string(total) +
                      " exceeds the supported maximum");
  return total;
}

// Rank encoding: position 1 is the most significant base-k digit, so numeric
// order on ranks equals lexicographic order on colorings.
void decode(std::uint64_t rank, int num_colors, Coloring& out) {
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    out[i] = static_cast<int>(rank % num_colors);
    rank /= num_colors;
  }
}

std::uint64_t encode(const Coloring& c, int num_colors) {
  std::uint64_t rank = 0;
  for (int v : c) rank = rank * num_colors + static_cast<std::uint64_t>(v);
  return rank;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::uint64_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Union each coloring with its images under the group's generating set.
// After this, find(rank) is the least rank in the orbit of rank.
UnionFind orbit_components(const PermutationGroup& group, int num_colors,
                           std::uint64_t total) {
  const auto& movers = group.generators().empty() ? group.elements() : group.generators();
  UnionFind uf(total);
  Coloring c(group.degree());
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    decode(rank, num_colors, c);
    for (const auto& g : movers)
      uf.unite(static_cast<std::uint32_t>(rank),
               static_cast<std::uint32_t>(encode(act(g, c), num_colors)));
  }
  return uf;
}

}  // namespace

Coloring act(const Permutation& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.degree())
    throw error("coloring length " + std::to_string(c.size()) +
                " does not match permutation degree " + std::to_string(g.degree()));
  Coloring out(c.size());
  for (int i = 1; i <= g.degree(); ++i) out[g(i) - 1] = c[i - 1];
  return out;
}

std::vector<Orbit> enumerate_orbits(const PermutationGroup& group, int num_colors,
                                    std::uint64_t limit) {
  const std::uint64_t total = checked_coloring_count(num_colors, group.degree(), limit);
  UnionFind uf = orbit_components(group, num_colors, total);

  // Ranks are scanned ascending, so each orbit is created at its least
  // member: orbits come out sorted by representative, members sorted too.
  std::vector<Orbit> orbits;
  std::unordered_map<std::uint32_t, std::size_t> orbit_of_root;
  Coloring c(group.degree());
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    const std::uint32_t root = uf.find(static_cast<std::uint32_t>(rank));
    decode(rank, num_colors, c);
    auto [it, inserted] = orbit_of_root.try_emplace(root, orbits.size());
    if (inserted) orbits.push_back(Orbit{c, {}});
    orbits[it->second].members.push_back(c);
  }
  return orbits;
}

Integer burnside_count(const PermutationGroup& group, int num_colors) {
  if (num_colors < 1)
    throw error("number of colors must be >= 1, got " + std::to_string(num_colors));
  Integer sum = 0;
  for (const auto& g : group.elements()) {
    const auto cycles = cycle_decomposition(g).cycles.size();
    sum += ipow(Integer(num_colors), static_cast<unsigned long>(cycles));
  }
  const Integer order(static_cast<unsigned long>(group.order()));
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw error("Burnside sum " + sum.get_str() + " not divisible by group order " +
                order.get_str() + "; group is not closed");
  Integer result;
  mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), order.get_mpz_t());
  return result;
}

std::map<Composition, std::uint64_t> orbit_census(const PermutationGroup& group,
                                                  const ColorSet& colors,
                                                  std::uint64_t limit) {
  const int num_colors = static_cast<int>(colors.size());
  const std::uint64_t total = checked_coloring_count(num_colors, group.degree(), limit);
  UnionFind uf = orbit_components(group, num_colors, total);

  std::map<Composition, std::uint64_t> census;
  Coloring c(group.degree());
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    if (uf.find(static_cast<std::uint32_t>(rank)) != rank) continue;
    decode(rank, num_colors, c);
    ++census[coloring_composition(c, colors)];
  }
  return census;
}

Composition coloring_composition(const Coloring& c, const ColorSet& colors) {
  Composition comp;
  for (const auto& name : colors.names()) comp.counts[name] = 0;
  for (int v : c) {
    if (v < 0 || v >= static_cast<int>(colors.size()))
      throw error("color index " + std::to_string(v) + " outside the color set");
    ++comp.counts[colors.names()[v]];
  }
  return comp;
}

std::string format_coloring(const Coloring& c, const ColorSet& colors) {
  const bool single = std::all_of(colors.names().begin(), colors.names().end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= static_cast<int>(colors.size()))
      throw error("color index " + std::to_string(c[i]) + " outside the color set");
    if (!single && i > 0) out += '-';
    out += colors.names()[c[i]];
  }
  return out;
}

}  // namespace polya
