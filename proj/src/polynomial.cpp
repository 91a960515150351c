#include "polya/polynomial.hpp"

#include <algorithm>

namespace polya {

Monomial::Monomial(std::map<std::string, int> exponents) : exponents_(std::move(exponents)) {
  for (auto it = exponents_.begin(); it != exponents_.end();) {
    if (it->first.empty()) throw error("monomial variable name is empty");
    if (it->second < 0)
      throw error("negative exponent " + std::to_string(it->second) + " for variable \"" +
                  it->first + "\"");
    if (it->second == 0)
      it = exponents_.erase(it);
    else
      ++it;
  }
}

Monomial Monomial::variable(const std::string& name, int exp) {
  return Monomial({{name, exp}});
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [name, exp] : exponents_) d += exp;
  return d;
}

int Monomial::exponent(const std::string& var) const {
  auto it = exponents_.find(var);
  return it == exponents_.end() ? 0 : it->second;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::map<std::string, int> exps = a.exponents_;
  for (const auto& [name, exp] : b.exponents_) exps[name] += exp;
  return Monomial(std::move(exps));
}

Polynomial Polynomial::constant(const Rational& c) {
  return term(c, Monomial());
}

Polynomial Polynomial::variable(const std::string& name, int exp) {
  return term(1, Monomial::variable(name, exp));
}

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
  Polynomial p;
  if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
  return p;
}

std::vector<std::string> Polynomial::variables() const {
  std::vector<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, exp] : m.exponents()) names.push_back(name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational prod = c;
    for (const auto& [name, exp] : m.exponents()) {
      auto it = values.find(name);
      if (it == values.end()) throw error("unbound variable \"" + name + "\" in evaluate");
      prod *= pow(it->second, static_cast<unsigned long>(exp));
    }
    total += prod;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  Polynomial result;
  for (const auto& [m, c] : terms_) {
    Polynomial prod = Polynomial::constant(c);
    for (const auto& [name, exp] : m.exponents()) {
      auto it = bindings.find(name);
      if (it == bindings.end())
        throw error("unbound variable \"" + name + "\" in substitute");
      prod = prod * pow(it->second, static_cast<unsigned>(exp));
    }
    result += prod;
  }
  return result;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial result;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) result.add_term(ma * mb, ca * cb);
  return result;
}

Polynomial pow(const Polynomial& base, unsigned exp) {
  Polynomial result = Polynomial::constant(1);
  Polynomial square = base;
  while (exp > 0) {
    if (exp & 1u) result = result * square;
    exp >>= 1u;
    if (exp > 0) square = square * square;
  }
  return result;
}

Polynomial scale(const Polynomial& p, const Rational& c) {
  Polynomial result;
  if (c.is_zero()) return result;
  for (const auto& [m, coeff] : p.terms()) result += Polynomial::term(coeff * c, m);
  return result;
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(
    const Polynomial& p, const std::vector<std::string>& var_order) {
  struct Entry {
    int degree;
    std::vector<int> listed;  // exponents of the var_order variables
    Monomial monomial;
    Rational coeff;
  };
  std::vector<Entry> entries;
  entries.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    Entry e{m.degree(), {}, m, c};
    e.listed.reserve(var_order.size());
    for (const auto& name : var_order) e.listed.push_back(m.exponent(name));
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.listed != b.listed) return a.listed > b.listed;
    return a.monomial < b.monomial;  // tiebreak for variables outside var_order
  });

  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.emplace_back(std::move(e.monomial), std::move(e.coeff));
  return out;
}

namespace {

std::string format_monomial(const Monomial& m, const std::vector<std::string>& var_order) {
  std::vector<std::pair<std::string, int>> factors;
  for (const auto& name : var_order) {
    if (int e = m.exponent(name); e > 0) factors.emplace_back(name, e);
  }
  for (const auto& [name, exp] : m.exponents()) {
    if (std::find(var_order.begin(), var_order.end(), name) == var_order.end())
      factors.emplace_back(name, exp);
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += "·";
    out += factors[i].first;
    if (factors[i].second != 1) out += "^" + std::to_string(factors[i].second);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, const std::vector<std::string>& var_order) {
  const auto terms = sorted_terms(p, var_order);
  if (terms.empty()) return "0";

  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c.sign() < 0;
    const Rational a = c.abs();
    std::string body;
    if (m.empty()) {
      body = a.str();
    } else if (a.is_one()) {
      body = format_monomial(m, var_order);
    } else if (a.is_integer()) {
      body = a.str() + "·" + format_monomial(m, var_order);
    } else {
      body = "(" + a.str() + ")·" + format_monomial(m, var_order);
    }
    if (first) {
      out += (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace polya
