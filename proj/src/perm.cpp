#include "polya/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace polya {

namespace {

std::string pos_range(int degree) {
  return "1.." + std::to_string(degree);
}

}  // namespace

Permutation::Permutation(int degree) {
  if (degree < 1) throw error("permutation degree must be >= 1, got " + std::to_string(degree));
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw error("permutation degree must be >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n)
      throw error("image " + std::to_string(v) + " outside " + pos_range(n));
    if (seen[v]) throw error("image " + std::to_string(v) + " repeated; not a bijection");
    seen[v] = true;
  }
}

int Permutation::operator()(int pos) const {
  if (pos < 1 || pos > degree())
    throw error("position " + std::to_string(pos) + " outside " + pos_range(degree()));
  return images_[pos - 1];
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

int CycleType::cycle_count() const {
  int total = 0;
  for (const auto& [len, count] : counts) total += count;
  return total;
}

int CycleType::total_length() const {
  int total = 0;
  for (const auto& [len, count] : counts) total += len * count;
  return total;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw error("degree mismatch in compose: " + std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[i - 1] = p(q(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[p(i) - 1] = i;
  return Permutation(std::move(images));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  // Scanning start positions in ascending order makes each cycle begin at its
  // smallest element and sorts the cycles, i.e. the canonical form.
  const int n = p.degree();
  CycleDecomposition d;
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = p(cur);
    } while (cur != start);
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& cycle : cycle_decomposition(p).cycles)
    ++t.counts[static_cast<int>(cycle.size())];
  return t;
}

Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 1) throw error("permutation degree must be >= 1, got " + std::to_string(degree));

  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(degree + 1, false);

  const auto is_sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  };

  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error("expected '(' at \"" + std::string(text.substr(i)) + "\"");
    ++i;

    // Collect the digit runs of one cycle.
    std::vector<std::string> runs;
    std::string cur;
    for (; i < text.size() && text[i] != ')'; ++i) {
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        cur += c;
      } else if (is_sep(c)) {
        if (!cur.empty()) runs.push_back(std::move(cur));
        cur.clear();
      } else {
        throw parse_error(std::string("unexpected character '") + c + "' inside cycle");
      }
    }
    if (i == text.size()) throw parse_error("unterminated cycle in \"" + std::string(text) + "\"");
    ++i;  // ')'
    if (!cur.empty()) runs.push_back(std::move(cur));
    if (runs.empty()) throw parse_error("empty cycle \"()\"");

    std::vector<int> cycle;
    for (const std::string& run : runs) {
      if (degree <= 9) {
        // Compact form: every position is one digit.
        for (char c : run) cycle.push_back(c - '0');
      } else {
        if (run.size() > 9)
          throw parse_error("position \"" + run + "\" outside " + pos_range(degree));
        cycle.push_back(std::stoi(run));
      }
    }

    for (int pos : cycle) {
      if (pos < 1 || pos > degree)
        throw parse_error("position " + std::to_string(pos) + " outside " + pos_range(degree));
      if (used[pos])
        throw parse_error("position " + std::to_string(pos) + " repeated");
      used[pos] = true;
    }
    const auto len = cycle.size();
    for (std::size_t j = 0; j < len; ++j) images[cycle[j] - 1] = cycle[(j + 1) % len];

    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }

  return Permutation(std::move(images));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (const auto& cycle : cycle_decomposition(p).cycles) {
    out += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(cycle[j]);
    }
    out += ')';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << format_permutation(p);
}

}  // namespace polya
