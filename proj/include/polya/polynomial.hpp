#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polya/rational.hpp"

namespace polya {

/// A product of variable powers; the empty monomial is the constant 1.
/// Zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;

  /// Throws polya::error on an empty variable name or a negative exponent;
  /// zero exponents are dropped.
  explicit Monomial(std::map<std::string, int> exponents);

  static Monomial variable(const std::string& name, int exp = 1);

  const std::map<std::string, int>& exponents() const { return exponents_; }

  /// Sum of all exponents.
  int degree() const;

  /// Exponent of one variable; 0 if absent.
  int exponent(const std::string& var) const;

  bool empty() const { return exponents_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

 private:
  std::map<std::string, int> exponents_;
};

/// Exact sparse multivariate polynomial with rational coefficients.
/// Zero coefficients are never stored, and no operation rounds: there is
/// no floating point anywhere in this module.
class Polynomial {
 public:
  Polynomial() = default;  // zero

  static Polynomial constant(const Rational& c);
  static Polynomial variable(const std::string& name, int exp = 1);
  static Polynomial term(const Rational& coeff, const Monomial& m);

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// All variable names appearing in the polynomial, sorted.
  std::vector<std::string> variables() const;

  /// Stored coefficient of m, or 0 if absent.
  Rational coefficient(const Monomial& m) const;

  /// Exact value with every variable bound; throws polya::error on an
  /// unbound variable.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Replace every variable by its binding, fully expanded. Every variable
  /// appearing in the polynomial must be bound.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

/// base^exp by binary exponentiation; base^0 = 1.
Polynomial pow(const Polynomial& base, unsigned exp);

/// Every coefficient multiplied by c.
Polynomial scale(const Polynomial& p, const Rational& c);

/// Terms in rendering order: graded lexicographic, descending, with
/// variables compared in var_order. Variables missing from var_order sort
/// after the listed ones.
std::vector<std::pair<Monomial, Rational>> sorted_terms(
    const Polynomial& p, const std::vector<std::string>& var_order);

/// Text form, e.g. "(1/8)·x1^4 + (1/4)·x1^2·x2 + (3/8)·x2^2 + (1/4)·x4" or
/// "r^2 + 2·r·w + w^2". Coefficients render as integers or "a/b"; "^1" is
/// omitted; the zero polynomial renders as "0".
std::string to_string(const Polynomial& p, const std::vector<std::string>& var_order);

}  // namespace polya
