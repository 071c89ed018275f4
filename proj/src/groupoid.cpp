#include "zlab/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zlab {

FiniteGroupoid::FiniteGroupoid(int size, std::vector<std::uint8_t> cells)
    : size_(size), cells_(std::move(cells)) {
  if (size_ < 1) throw TableError("table size must be at least 1");
  if (cells_.size() != static_cast<std::size_t>(size_) * size_)
    throw TableError("expected " + std::to_string(size_ * size_) +
                     " cells, got " + std::to_string(cells_.size()));
  for (std::uint8_t e : cells_)
    if (e >= size_)
      throw TableError("cell value " + std::to_string(e) +
                       " out of range [0, " + std::to_string(size_) + ")");
}

FiniteGroupoid FiniteGroupoid::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::uint8_t> cells;
  for (const auto& row : rows)
    for (int e : row) cells.push_back(static_cast<std::uint8_t>(e));
  return FiniteGroupoid(static_cast<int>(rows.size()), std::move(cells));
}

FiniteGroupoid FiniteGroupoid::parse_table(std::string_view text) {
  std::vector<long> numbers;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      long value = std::stol(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      numbers.push_back(value);
    } catch (const std::exception&) {
      throw TableError("not an integer: '" + token + "'");
    }
    token.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      flush();
    } else {
      token += c;
    }
  }
  flush();

  if (numbers.empty()) throw TableError("empty table file");
  long n = numbers[0];
  if (n < 1 || n > 255) throw TableError("table size " + std::to_string(n) +
                                         " outside supported range [1, 255]");
  if (numbers.size() != static_cast<std::size_t>(1 + n * n))
    throw TableError("expected " + std::to_string(n * n) + " entries for size " +
                     std::to_string(n) + ", got " +
                     std::to_string(numbers.size() - 1));
  std::vector<std::uint8_t> cells;
  cells.reserve(n * n);
  for (std::size_t i = 1; i < numbers.size(); ++i) {
    if (numbers[i] < 0 || numbers[i] >= n)
      throw TableError("entry " + std::to_string(numbers[i]) +
                       " out of range [0, " + std::to_string(n) + ")");
    cells.push_back(static_cast<std::uint8_t>(numbers[i]));
  }
  return FiniteGroupoid(static_cast<int>(n), std::move(cells));
}

std::string FiniteGroupoid::to_table_text() const {
  std::ostringstream out;
  out << size_ << '\n';
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      if (j) out << ' ';
      out << apply(i, j);
    }
    out << '\n';
  }
  return out.str();
}

FiniteGroupoid relabel(const FiniteGroupoid& g, const std::vector<int>& pi) {
  int n = g.size();
  if (static_cast<int>(pi.size()) != n)
    throw std::invalid_argument("permutation size differs from table size");
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      cells[pi[a] * n + pi[b]] = static_cast<std::uint8_t>(pi[g.apply(a, b)]);
  return FiniteGroupoid(n, std::move(cells));
}

FiniteGroupoid canonical_form(const FiniteGroupoid& g) {
  int n = g.size();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  FiniteGroupoid best = g;
  // All permutations of [1, n) with 0 fixed.
  while (std::next_permutation(pi.begin() + 1, pi.end())) {
    FiniteGroupoid cand = relabel(g, pi);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

bool isomorphic(const FiniteGroupoid& g1, const FiniteGroupoid& g2) {
  if (g1.size() != g2.size()) return false;
  return canonical_form(g1) == canonical_form(g2);
}

}  // namespace zlab
