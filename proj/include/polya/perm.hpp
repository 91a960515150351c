#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "polya/errors.hpp"

namespace polya {

/// A permutation of the positions {1..n}, stored as its image table.
///
/// Values are immutable after construction; all operations on them are pure
/// functions, so they can be shared freely between threads.
class Permutation {
 public:
  /// The identity on {1..degree}.
  explicit Permutation(int degree);

  /// From an image table: images[i-1] is the image of position i.
  /// Throws polya::error unless the table is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a position, 1-based.
  int operator()(int pos) const;

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Disjoint cycles covering {1..n}, fixed points included as 1-cycles.
/// Canonical form: each cycle starts at its smallest position and cycles are
/// sorted ascending by first position.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  bool operator==(const CycleDecomposition&) const = default;
};

/// How many cycles of each length a permutation has (nonzero entries only).
struct CycleType {
  std::map<int, int> counts;  // cycle length -> number of cycles

  /// Total number of cycles, 1-cycles included.
  int cycle_count() const;

  /// Sum of length * count; equals the degree of the permutation.
  int total_length() const;

  bool operator==(const CycleType&) const = default;
};

/// compose(p, q): apply q first, then p. The result r satisfies r(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

CycleDecomposition cycle_decomposition(const Permutation& p);

CycleType cycle_type(const Permutation& p);

/// Parse cycle notation. Grammar:
///
///   perm  := cycle* ;                (empty string = identity)
///   cycle := "(" pos (sep pos)* ")" ;
///   sep   := ","+ | whitespace+ | "" ;
///   pos   := nonzero decimal integer ;
///
/// The empty separator is only meaningful when every position is a single
/// digit, so the compact form "(1234)" is read digit-by-digit for degrees
/// up to 9; for larger degrees adjacent digits form one multi-digit
/// position and separators are required.
///
/// Positions absent from the string are fixed points. Throws
/// polya::parse_error on malformed syntax, a repeated position, or a
/// position outside 1..degree.
Permutation parse_permutation(std::string_view text, int degree);

/// Canonical form: space-separated positions, 1-cycles included, e.g.
/// "(1 2 3 4)" or "(1)(2 4)(3)". Round-trips through parse_permutation.
std::string format_permutation(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace polya
