#ifndef SYMRANK_DECOMPOSITION_HPP
#define SYMRANK_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "symrank/polynomial.hpp"

namespace symrank {

/// A +-1 sign pattern on n variables: the sign at position i is -1 exactly
/// when i is in minus_vars (sorted, 0-based). Stands for the linear form
/// sign(0)*x1 + ... + sign(n-1)*xn.
struct SignedLinearForm {
  int nvars = 0;
  std::vector<int> minus_vars;

  int sign(int pos) const;
  std::vector<int> signs() const;
  /// Sign-flipped form (complementary minus set).
  SignedLinearForm negated() const;
  /// Representative with leading sign +1: the form itself if sign(0) = +1,
  /// otherwise its negation.
  SignedLinearForm projective_rep() const;

  bool operator==(const SignedLinearForm&) const = default;
};

struct Summand {
  Integer weight;
  SignedLinearForm form;

  bool operator==(const Summand&) const = default;
};

/// Claims scale * sigma_{d,n} = sum of weight * form^degree over summands.
struct Decomposition {
  int degree = 0;
  int nvars = 0;
  Integer scale = 1;
  std::vector<Summand> summands;

  bool operator==(const Decomposition&) const = default;
};

struct VerificationReport {
  bool passed = false;
  int degree = 0;
  int nvars = 0;
  std::size_t summand_count = 0;
  /// All weights are rational (always true for this artifact); the exact-rank
  /// results therefore transfer to the real rank in the odd-degree case.
  bool real_coefficients = true;
  /// First offending monomial (canonical order) and its residual coefficient
  /// when the check fails.
  std::optional<Monomial> residual_monomial;
  Rational residual_coefficient = 0;
};

/// Odd-degree power-sum decomposition:
/// 2^(d-1) d! sigma_{d,n} =
///   sum over I subset [n], |I| <= k = (d-1)/2 of
///   (-1)^|I| C(n-k-|I|-1, k-|I|) (sum_i sign_I(i) x_i)^d.
/// Requires d odd, 1 <= d <= n.
Decomposition decompose_odd(int d, int n);

/// Even-degree power-sum decomposition (direct formula):
/// 2^d (n-d) d! sigma_{d,n} =
///   sum over I subset [n], |I| <= k = d/2 of
///   (-1)^|I| C(n-k-|I|-1, k-|I|) (n-2|I|) (sum_i sign_I(i) x_i)^d.
/// Requires d even, d >= 2, n > d.
Decomposition decompose_even(int d, int n);

/// Same identity obtained by applying d/dx1 + ... + d/dxn to each summand of
/// decompose_odd(d+1, n). Must equal decompose_even(d, n) summand-by-summand.
Decomposition decompose_even_via_derivative(int d, int n);

/// Power-sum decomposition of the square-free monomial x1*...*xn
/// (= sigma_{n,n}). Odd n delegates to decompose_odd(n, n). Even n returns
/// the symmetric split with scale 2^n n!: weight 2*(-1)^|I| for |I| < n/2,
/// and one canonical summand per complementary pair at |I| = n/2 (the
/// representative avoiding x1) with weight 2*(-1)^(n/2); 2^(n-1) summands.
Decomposition decompose_monomial(int n);

/// Upper bound sum_{i=0}^{floor(d/2)} C(n,i) for rank(sigma_{d,n}); equals
/// the summand count of the corresponding generator (for even d this
/// presumes n > d; at n = d the generator does not apply).
Integer upper_bound(int d, int n);

/// The claimed right-hand side sum of weight * form^degree, fully expanded.
Polynomial expand(const Decomposition& dec);

/// Exact verification by full expansion against scale * sigma_{d,n}.
/// Throws std::domain_error if dec is structurally invalid (mismatched
/// variable counts, zero weights, duplicate sign vectors, d > n).
VerificationReport verify(const Decomposition& dec);

}  // namespace symrank

#endif
