#ifndef ZLAB_GROUPOID_HPP
#define ZLAB_GROUPOID_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zlab {

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite groupoid presented by its Cayley table.  Element 0 is the
// distinguished constant of the language.  cell (i, j) holds i -> j.
class FiniteGroupoid {
 public:
  // cells is row-major with n*n entries, each in [0, n).
  FiniteGroupoid(int size, std::vector<std::uint8_t> cells);
  static FiniteGroupoid from_rows(
      std::initializer_list<std::initializer_list<int>> rows);

  // Text format: first a line with n, then n lines of n integers; row i
  // lists i -> j for j = 0..n-1.  '#' starts a comment; blank lines are
  // ignored.  Throws TableError on malformed input.
  static FiniteGroupoid parse_table(std::string_view text);
  std::string to_table_text() const;

  int size() const { return size_; }
  int apply(int a, int b) const { return cells_[a * size_ + b]; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  // Size first, then row-major cell comparison ("canonical table order").
  friend std::strong_ordering operator<=>(const FiniteGroupoid&,
                                          const FiniteGroupoid&) = default;

 private:
  int size_;
  std::vector<std::uint8_t> cells_;
};

// Relabels elements by the permutation pi (pi[i] is the new name of i):
// result(pi[a], pi[b]) == pi[g(a, b)].
FiniteGroupoid relabel(const FiniteGroupoid& g, const std::vector<int>& pi);

// Lexicographically least relabeling of g over all permutations of [0, n)
// that fix element 0.  Two groupoids are isomorphic (as algebras with the
// constant 0) iff their canonical forms are equal.
FiniteGroupoid canonical_form(const FiniteGroupoid& g);

bool isomorphic(const FiniteGroupoid& g1, const FiniteGroupoid& g2);

}  // namespace zlab

#endif  // ZLAB_GROUPOID_HPP
