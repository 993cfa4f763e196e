#ifndef SYMRANK_MATRIX_HPP
#define SYMRANK_MATRIX_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "symrank/monomial.hpp"
#include "symrank/rational.hpp"

namespace symrank {

/// Dense matrix of exact rationals with monomial-labeled rows and columns.
/// Labels are kept in canonical monomial order by the constructors used in
/// this project; the class itself only stores them.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::vector<Monomial> row_labels, std::vector<Monomial> col_labels);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }

  const Rational& at(std::size_t r, std::size_t c) const;
  Rational& at(std::size_t r, std::size_t c);

  const std::vector<Monomial>& row_labels() const { return row_labels_; }
  const std::vector<Monomial>& col_labels() const { return col_labels_; }

  bool row_is_zero(std::size_t r) const;
  bool col_is_zero(std::size_t c) const;
  /// True when every entry is 0 or 1.
  bool is_binary() const;

  ExactMatrix transposed() const;

  bool operator==(const ExactMatrix&) const = default;

 private:
  std::vector<Monomial> row_labels_;
  std::vector<Monomial> col_labels_;
  std::vector<Rational> data_;
};

/// Fixed, published primes for modular rank computations (deterministic
/// order; each modular rank is a lower bound for the rational rank).
inline constexpr std::array<std::uint32_t, 3> kRankPrimes = {
    2147483647u, 2147483629u, 2147483587u};

/// Rank of M over Z/p. Returns nullopt when p collides with the denominator
/// content of some row (the reduction would not be rank-sound).
std::optional<int> rank_mod_prime(const ExactMatrix& m, std::uint32_t p);

/// Certified rational rank by fraction-free (Bareiss) integer elimination on
/// the denominator-cleared matrix.
int rank_fraction_free(const ExactMatrix& m);

/// Rational rank. Strategy: strip zero rows/columns, then try the fixed
/// primes; a modular rank equal to min(rows, cols) is already exact.
/// Otherwise fall back to fraction-free elimination.
int exact_rank(const ExactMatrix& m);

struct LinearSolveResult {
  bool consistent = false;
  std::size_t rank_lhs = 0;
  std::size_t rank_augmented = 0;
  /// A solution with all free variables set to zero (when consistent).
  std::vector<Rational> solution;
  bool unique = false;
  /// When inconsistent: y with y^T A = 0 and y^T b = 1.
  std::vector<Rational> infeasibility_certificate;
};

/// Exact Gauss-Jordan solve of A x = b with deterministic first-nonzero
/// pivoting. b.size() must equal A.rows().
LinearSolveResult solve_exact(const ExactMatrix& a, const std::vector<Rational>& b);

}  // namespace symrank

#endif
