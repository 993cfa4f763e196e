#ifndef SYMRANK_APOLARITY_HPP
#define SYMRANK_APOLARITY_HPP

#include <optional>
#include <string>

#include "symrank/matrix.hpp"
#include "symrank/polynomial.hpp"

namespace symrank {

/// Matrix of the r-th catalecticant of the homogeneous form F: rows are the
/// degree d-r monomials (C(n+d-r-1, d-r) of them), columns the degree-r
/// differential operator monomials (C(n+r-1, r)); entry (m, beta) is the
/// coefficient of m in d^beta F. The degree is deduced from F, which must be
/// nonzero and homogeneous; requires 0 <= r <= d.
ExactMatrix catalecticant(const Polynomial& f, int r);

/// Same with the degree given explicitly (allows the zero polynomial, which
/// yields an all-zero matrix).
ExactMatrix catalecticant(const Polynomial& f, int r, int degree);

/// Deletes all zero rows and zero columns, keeping the surviving labels. For
/// sigma_{d,n} the survivors are exactly the square-free monomials and the
/// result is the subset-disjointness pattern.
ExactMatrix squarefree_refine(const ExactMatrix& m);

/// Binary C(n,r) x C(n,r) matrix over r-subsets of the n variables, entry 1
/// iff the subsets are disjoint. Requires 0 <= 2r <= n (the range where the
/// matrix is invertible).
ExactMatrix disjointness_matrix(int r, int n);

/// Hilbert function of S/(sigma_{d,n})^perp in degree r, closed form:
/// C(n,r) for r <= floor(d/2), C(n,d-r) for r > floor(d/2), 0 for r > d.
Integer hilbert_function(int d, int n, int r);

/// The same value computed as the exact rank of the r-th catalecticant of
/// sigma_{d,n}; companion route for consistency checks.
Integer hilbert_function_via_rank(int d, int n, int r);

/// Lower bound for rank(sigma_{d,n}): sum over r of
/// hilbert_function(d-1, n-1, r). Equals sum_{r<=（d-1)/2} C(n,r) for odd d
/// and sum_{r<=d/2} C(n,r) - C(n-1,d/2) for even d (asserted internally).
/// Returns 1 for d = 1.
Integer lower_bound(int d, int n);

/// True iff the operator g annihilates F (so g is in F^perp).
bool perp_member(const Monomial& g, const Polynomial& f);
bool perp_member(const Polynomial& g, const Polynomial& f);

struct BoundsReport {
  int d = 0;
  int n = 0;
  Integer lower = 0;
  Integer upper = 0;
  /// Present exactly when lower == upper.
  std::optional<Integer> exact;
  /// True when the rank is certified and witnessed by a decomposition with
  /// rational coefficients, so the value is also the real rank.
  bool real_rank_equal = false;
  std::string notes;
};

/// Combined rank bounds for sigma_{d,n}; exact for odd d.
BoundsReport bounds(int d, int n);

}  // namespace symrank

#endif
