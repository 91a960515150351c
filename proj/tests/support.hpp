#pragma once

// Shared fixtures and helpers for the test suites: reference data for the
// square symmetry groups, independent re-computations used as oracles, random
// generators, and a subprocess runner for CLI tests.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polya/group.hpp"
#include "polya/inventory.hpp"
#include "polya/perm.hpp"
#include "polya/polynomial.hpp"

namespace support {

// The four rotations of the square, and all eight of its symmetries, as
// cycle-notation strings on positions 1..4 (corners in circular order).
inline const std::vector<std::string> kSquareRotations = {
    "(1)(2)(3)(4)",
    "(1234)",
    "(13)(24)",
    "(1432)",
};

inline const std::vector<std::string> kSquareSymmetries = {
    "(1)(2)(3)(4)",
    "(1234)",
    "(13)(24)",
    "(1432)",
    "(14)(23)",
    "(1)(3)(24)",
    "(12)(34)",
    "(13)(2)(4)",
};

inline std::vector<polya::Permutation> parse_all(const std::vector<std::string>& texts,
                                                 int degree) {
  std::vector<polya::Permutation> out;
  for (const auto& t : texts) out.push_back(polya::parse_permutation(t, degree));
  return out;
}

// Cycle index of the square's rotation group:
// (1/4) x1^4 + (1/4) x2^2 + (1/2) x4.
inline polya::Polynomial square_rotation_cycle_index() {
  using polya::Polynomial;
  using polya::Rational;
  Polynomial z;
  z += Polynomial::term(Rational(1, 4), polya::Monomial::variable("x1", 4));
  z += Polynomial::term(Rational(1, 4), polya::Monomial::variable("x2", 2));
  z += Polynomial::term(Rational(1, 2), polya::Monomial::variable("x4", 1));
  return z;
}

// Cycle index of the full symmetry group of the square:
// (1/8) x1^4 + (3/8) x2^2 + (1/4) x1^2 x2 + (1/4) x4.
inline polya::Polynomial square_symmetry_cycle_index() {
  using polya::Monomial;
  using polya::Polynomial;
  using polya::Rational;
  Polynomial z;
  z += Polynomial::term(Rational(1, 8), Monomial::variable("x1", 4));
  z += Polynomial::term(Rational(3, 8), Monomial::variable("x2", 2));
  z += Polynomial::term(Rational(1, 4),
                        Monomial::variable("x1", 2) * Monomial::variable("x2", 1));
  z += Polynomial::term(Rational(1, 4), Monomial::variable("x4", 1));
  return z;
}

// Expected pattern inventory of the rotation group over colors r, w, b,
// as (r exponent, w exponent, b exponent, coefficient). Coefficients sum
// to 24, the number of distinct necklace-like colorings.
struct InventoryTerm {
  int r, w, b;
  long coeff;
};

inline const std::vector<InventoryTerm> kSquareRotationInventory = {
    {4, 0, 0, 1}, {3, 1, 0, 1}, {3, 0, 1, 1}, {2, 2, 0, 2}, {2, 1, 1, 3},
    {2, 0, 2, 2}, {1, 3, 0, 1}, {1, 2, 1, 3}, {1, 1, 2, 3}, {1, 0, 3, 1},
    {0, 4, 0, 1}, {0, 3, 1, 1}, {0, 2, 2, 2}, {0, 1, 3, 1}, {0, 0, 4, 1},
};

inline polya::Polynomial square_rotation_inventory() {
  using polya::Monomial;
  using polya::Polynomial;
  using polya::Rational;
  Polynomial p;
  for (const auto& t : kSquareRotationInventory) {
    Monomial m = Monomial::variable("r", t.r) * Monomial::variable("w", t.w) *
                 Monomial::variable("b", t.b);
    p += Polynomial::term(Rational(t.coeff), m);
  }
  return p;
}

// All compositions of total over the given colors, every color present as a
// key (zeros included), in lexicographic order of the count vector.
inline void compositions_into(const std::vector<std::string>& names, std::size_t next,
                              int remaining, polya::Composition& partial,
                              std::vector<polya::Composition>& out) {
  if (next + 1 == names.size()) {
    partial.counts[names[next]] = remaining;
    out.push_back(partial);
    return;
  }
  for (int take = 0; take <= remaining; ++take) {
    partial.counts[names[next]] = take;
    compositions_into(names, next + 1, remaining - take, partial, out);
  }
}

inline std::vector<polya::Composition> all_compositions(const polya::ColorSet& colors,
                                                        int total) {
  std::vector<polya::Composition> out;
  polya::Composition partial;
  compositions_into(colors.names(), 0, total, partial, out);
  return out;
}

inline polya::Permutation random_permutation(int degree, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return polya::Permutation(images);
}

// Small random polynomial in the given variables with rational coefficients.
inline polya::Polynomial random_polynomial(const std::vector<std::string>& vars,
                                           std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(0, 4);
  std::uniform_int_distribution<int> exp_dist(0, 3);
  std::uniform_int_distribution<int> num_dist(-4, 4);
  std::uniform_int_distribution<int> den_dist(1, 3);
  polya::Polynomial p;
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    polya::Monomial m;
    for (const auto& v : vars) m = m * polya::Monomial::variable(v, exp_dist(rng));
    p += polya::Polynomial::term(polya::Rational(num_dist(rng), den_dist(rng)), m);
  }
  return p;
}

// Groups covered by the exhaustive cross-checks against orbit enumeration.
struct SweepEntry {
  std::string name;
  polya::PermutationGroup group;
};

inline std::vector<SweepEntry> sweep_groups() {
  std::vector<SweepEntry> out;
  for (int n = 3; n <= 6; ++n) {
    out.push_back({"cyclic:" + std::to_string(n), polya::cyclic_group(n)});
    out.push_back({"dihedral:" + std::to_string(n), polya::dihedral_group(n)});
  }
  for (int n = 1; n <= 5; ++n) {
    out.push_back({"symmetric:" + std::to_string(n), polya::symmetric_group(n)});
  }
  out.push_back({"trivial:4", polya::trivial_group(4)});
  return out;
}

// ---- CLI subprocess support ----

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string cli_path() {
  if (const char* env = std::getenv("POLYA_CLI")) return env;
#ifdef POLYA_CLI_PATH
  return POLYA_CLI_PATH;
#else
  return "polya";
#endif
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the CLI with the given argument string through the shell, capturing
// stdout, stderr, and the exit code.
inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string base = "/tmp/polya_cli_" + std::to_string(::getpid()) + "_" +
                           std::to_string(counter++);
  const std::string out_path = base + ".out";
  const std::string err_path = base + ".err";
  const std::string cmd = "'" + cli_path() + "' " + args + " > '" + out_path +
                          "' 2> '" + err_path + "'";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

// ---- JSON shape checks ----

inline bool is_integer_string(const nlohmann::json& j) {
  if (!j.is_string()) return false;
  const std::string s = j.get<std::string>();
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

// Structural validation of a CLI JSON document. Returns an error description,
// or std::nullopt if the document matches the output contract.
inline std::optional<std::string> check_result_schema(const nlohmann::json& doc,
                                                      const std::string& command) {
  using nlohmann::json;
  if (!doc.is_object()) return "top level is not an object";
  for (const auto& key : {"command", "group", "result"}) {
    if (!doc.contains(key)) return std::string("missing key \"") + key + "\"";
  }
  if (doc.size() != 3) return "top level has extra keys";
  if (!doc["command"].is_string() || doc["command"].get<std::string>() != command) {
    return "\"command\" is not \"" + command + "\"";
  }

  const json& group = doc["group"];
  if (!group.is_object() || group.size() != 3) return "\"group\" is not a 3-key object";
  if (!group.contains("spec") || !group["spec"].is_string()) return "bad group.spec";
  if (!group.contains("order") || !group["order"].is_number_unsigned() ||
      group["order"].get<std::uint64_t>() == 0) {
    return "bad group.order";
  }
  if (!group.contains("degree") || !group["degree"].is_number_unsigned() ||
      group["degree"].get<std::uint64_t>() == 0) {
    return "bad group.degree";
  }

  const json& result = doc["result"];
  if (!result.is_object() || result.size() != 1) return "\"result\" is not a 1-key object";

  if (result.contains("count")) {
    const json& c = result["count"];
    if (!(c.is_number_unsigned() || is_integer_string(c))) return "bad result.count";
    return std::nullopt;
  }
  if (result.contains("polynomial")) {
    const json& terms = result["polynomial"];
    if (!terms.is_array()) return "result.polynomial is not an array";
    for (const json& term : terms) {
      if (!term.is_object() || term.size() != 2) return "polynomial term is not a 2-key object";
      if (!term.contains("coefficient") || !term.contains("exponents")) {
        return "polynomial term missing coefficient or exponents";
      }
      const json& coeff = term["coefficient"];
      if (!coeff.is_object() || coeff.size() != 2 || !coeff.contains("num") ||
          !coeff.contains("den") || !is_integer_string(coeff["num"]) ||
          !is_integer_string(coeff["den"])) {
        return "bad polynomial coefficient";
      }
      const json& exps = term["exponents"];
      if (!exps.is_object()) return "polynomial exponents is not an object";
      for (const auto& [var, exp] : exps.items()) {
        if (var.empty()) return "empty variable name in exponents";
        if (!exp.is_number_unsigned() || exp.get<std::uint64_t>() == 0) {
          return "non-positive exponent in polynomial term";
        }
      }
    }
    return std::nullopt;
  }
  if (result.contains("orbits")) {
    const json& orbits = result["orbits"];
    if (!orbits.is_array()) return "result.orbits is not an array";
    for (const json& orbit : orbits) {
      if (!orbit.is_object() || orbit.size() != 3) return "orbit is not a 3-key object";
      if (!orbit.contains("representative") || !orbit["representative"].is_string()) {
        return "bad orbit.representative";
      }
      if (!orbit.contains("size") || !orbit["size"].is_number_unsigned() ||
          orbit["size"].get<std::uint64_t>() == 0) {
        return "bad orbit.size";
      }
      if (!orbit.contains("composition") || !orbit["composition"].is_object()) {
        return "bad orbit.composition";
      }
      for (const auto& [color, count] : orbit["composition"].items()) {
        if (color.empty() || !count.is_number_unsigned()) return "bad composition entry";
      }
    }
    return std::nullopt;
  }
  if (result.contains("elements")) {
    const json& elements = result["elements"];
    if (!elements.is_array() || elements.empty()) return "bad result.elements";
    for (const json& e : elements) {
      if (!e.is_string()) return "non-string group element";
    }
    return std::nullopt;
  }
  return "result has no recognized payload key";
}

}  // namespace support
