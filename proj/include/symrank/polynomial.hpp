#ifndef SYMRANK_POLYNOMIAL_HPP
#define SYMRANK_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrank/monomial.hpp"
#include "symrank/rational.hpp"

namespace symrank {

/// Sparse multivariate polynomial with exact rational coefficients. The term
/// map never stores a zero coefficient, and every monomial has the same
/// variable count as the polynomial. Values are immutable in spirit: all
/// operations return new polynomials or mutate only the receiver.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial single_term(const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  /// Adds c * m into the polynomial, erasing the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// The common degree of all terms, or nullopt if the polynomial is zero or
  /// not homogeneous.
  std::optional<int> homogeneous_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  /// this += c * other.
  void add_scaled(const Polynomial& other, const Rational& c);

  bool operator==(const Polynomial&) const = default;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, Polynomial p);

/// sigma_{d,n}: the sum of all C(n,d) square-free monomials of degree d.
/// Requires 1 <= d <= n.
Polynomial elementary_symmetric(int d, int n);

/// (signs[0]*x1 + ... + signs[n-1]*xn)^d expanded by the multinomial theorem.
/// signs entries must be +1 or -1; d >= 0. The result has C(n+d-1, d) terms.
Polynomial expand_linear_power(const std::vector<int>& signs, int d);

/// Action of the differential operator monomial op on target:
/// op = x^beta acts as d^beta, with d^beta x^alpha =
/// (prod_i alpha_i!/(alpha_i-beta_i)!) x^(alpha-beta) when alpha >= beta,
/// else 0; extended linearly.
Polynomial apply_diff(const Monomial& op, const Polynomial& target);
Polynomial apply_diff(const Polynomial& op, const Polynomial& target);

/// Exact evaluation at a rational point; point.size() must equal nvars.
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

/// Substitute 0 for the variable at the given position.
Polynomial set_variable_zero(const Polynomial& p, int pos);

/// Reinterpret p in a larger variable ring (appends zero exponents).
Polynomial extend_nvars(const Polynomial& p, int nvars);

/// Canonical text form: terms in canonical monomial order, exact rational
/// coefficients, e.g. "x1*x2 + 2*x1*x3 - 1/2*x2^2".
std::string to_string(const Polynomial& p);

}  // namespace symrank

#endif
