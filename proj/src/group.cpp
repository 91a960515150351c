#include "polya/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace polya {

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> elements,
                                   std::vector<Permutation> generators)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermutationGroup closure(std::vector<Permutation> generators, int degree,
                         std::size_t max_order) {
  if (degree < 1) throw error("group degree must be >= 1, got " + std::to_string(degree));
  if (max_order < 1) throw error("max_order must be >= 1");
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw error("generator degree " + std::to_string(g.degree()) +
                  " does not match group degree " + std::to_string(degree));
  }

  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  seen.insert(Permutation::identity(degree));
  queue.push_back(Permutation::identity(degree));

  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = compose(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > max_order)
          throw limit_error("closure exceeds max order " + std::to_string(max_order));
        queue.push_back(std::move(y));
      }
    }
  }

  std::vector<Permutation> elements(seen.begin(), seen.end());
  return PermutationGroup(degree, std::move(elements), std::move(generators));
}

namespace {

Permutation rotation(int n) {
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = i % n + 1;
  return Permutation(std::move(images));
}

// The flip (1 n)(2 n-1)...; at n = 4 this is (1 4)(2 3).
Permutation flip(int n) {
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = n + 1 - i;
  return Permutation(std::move(images));
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

PermutationGroup cyclic_group(int n) {
  if (n < 1) throw error("cyclic_group needs n >= 1, got " + std::to_string(n));
  return closure({rotation(n)}, n, static_cast<std::size_t>(n));
}

PermutationGroup dihedral_group(int n) {
  if (n < 1) throw error("dihedral_group needs n >= 1, got " + std::to_string(n));
  return closure({rotation(n), flip(n)}, n, static_cast<std::size_t>(2) * n);
}

PermutationGroup symmetric_group(int n, int cap) {
  if (n < 1) throw error("symmetric_group needs n >= 1, got " + std::to_string(n));
  if (n > cap)
    throw limit_error("symmetric_group degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  if (n == 1) return closure({}, 1);
  std::vector<int> transposition(n);
  std::iota(transposition.begin(), transposition.end(), 1);
  std::swap(transposition[0], transposition[1]);
  return closure({Permutation(std::move(transposition)), rotation(n)}, n, factorial(n));
}

PermutationGroup trivial_group(int n) {
  if (n < 1) throw error("trivial_group needs n >= 1, got " + std::to_string(n));
  return closure({}, n);
}

namespace {

int parse_positive_int(std::string_view text, std::string_view spec) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 1)
    throw parse_error("bad number \"" + std::string(text) + "\" in group spec \"" +
                      std::string(spec) + "\"");
  return value;
}

}  // namespace

PermutationGroup parse_group_spec(std::string_view spec, std::size_t max_order) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw parse_error("bad group spec \"" + std::string(spec) +
                      "\" (expected kind:N or gens:...@N)");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);

  if (kind == "gens") {
    const auto at = rest.rfind('@');
    if (at == std::string_view::npos)
      throw parse_error("bad group spec \"" + std::string(spec) + "\" (missing @degree)");
    const int degree = parse_positive_int(rest.substr(at + 1), spec);
    std::string_view gens_text = rest.substr(0, at);
    std::vector<Permutation> gens;
    while (!gens_text.empty()) {
      const auto semi = gens_text.find(';');
      const std::string_view one =
          semi == std::string_view::npos ? gens_text : gens_text.substr(0, semi);
      gens.push_back(parse_permutation(one, degree));
      if (semi == std::string_view::npos) break;
      gens_text.remove_prefix(semi + 1);
    }
    return closure(std::move(gens), degree, max_order);
  }

  const auto check_order = [&](std::size_t order) {
    if (order > max_order)
      throw limit_error("group \"" + std::string(spec) + "\" has order " +
                        std::to_string(order) + ", above max order " +
                        std::to_string(max_order));
  };

  if (kind == "cyclic") {
    const int n = parse_positive_int(rest, spec);
    check_order(static_cast<std::size_t>(n));
    return cyclic_group(n);
  }
  if (kind == "dihedral") {
    const int n = parse_positive_int(rest, spec);
    check_order(n >= 3 ? static_cast<std::size_t>(2) * n : static_cast<std::size_t>(n));
    return dihedral_group(n);
  }
  if (kind == "symmetric") {
    const int n = parse_positive_int(rest, spec);
    if (n <= kDefaultSymmetricCap) check_order(factorial(n));
    return symmetric_group(n);
  }
  if (kind == "trivial") {
    return trivial_group(parse_positive_int(rest, spec));
  }
  throw parse_error("unknown group kind \"" + std::string(kind) + "\" in spec \"" +
                    std::string(spec) + "\"");
}

}  // namespace polya
