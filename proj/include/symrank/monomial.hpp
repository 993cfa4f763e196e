#ifndef SYMRANK_MONOMIAL_HPP
#define SYMRANK_MONOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

namespace symrank {

/// Exponent vector over a fixed number of variables. Positions are 0-based
/// in code; variables print 1-based as x1..xn.
///
/// The canonical order is graded: lower total degree first, ties broken so
/// that the index sequences of the monomials read in increasing order (for
/// n = 5, degree 2: x1^2 < x1*x2 < ... < x1*x5 < x2^2 < ... < x5^2). This is
/// the order used for term maps, matrix labels and all serialized output.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  explicit Monomial(std::vector<int> exponents);

  /// x_{pos+1} as a monomial of nvars variables.
  static Monomial variable(int nvars, int pos);
  /// Square-free monomial with exponent 1 at the given positions.
  static Monomial from_support(int nvars, const std::vector<int>& positions);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int pos) const { return exps_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  bool is_constant() const { return degree() == 0; }
  bool is_squarefree() const;
  /// Positions with nonzero exponent, ascending.
  std::vector<int> support() const;

  /// Componentwise this <= other.
  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial& other) const;

  /// Canonical text, e.g. "x1^2*x3"; the constant monomial prints as "1".
  std::string str() const;
  /// Compact index label, e.g. x1*x3^2 -> "133"; joined with '.' once any
  /// variable index has two digits. Constant -> "1".
  std::string index_label() const;

 private:
  std::vector<int> exps_;
};

/// All monomials of the given total degree in canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace symrank

#endif
