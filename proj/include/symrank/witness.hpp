#ifndef SYMRANK_WITNESS_HPP
#define SYMRANK_WITNESS_HPP

#include <cstdint>
#include <vector>

#include "symrank/decomposition.hpp"
#include "symrank/matrix.hpp"

namespace symrank {

/// Projective sign points (+1, +-1, ..., +-1): sign vectors normalized to a
/// leading +1, stored as signed linear forms. At most 2^(n-1) distinct points.
struct SignPointSet {
  int nvars = 0;
  std::vector<SignedLinearForm> points;
};

/// All 2^(n-1) sign points of n coordinates, ordered by minus-set size then
/// lexicographically.
SignPointSet full_sign_points(int n);

struct IdentityReport {
  int k = 0;
  int n = 0;
  Integer lhs = 0;
  Integer rhs = 0;
  bool equal = false;
};

/// Exact check of the summation identity
///   sum_{i=0}^{k} (-1)^i C(n-k-1-i, k-i) C(n,i) (n-2i)^(2k+1)
///     = 2^(2k) n! / (n-2k-1)!.
/// Requires k >= 0 and n >= 2k+1.
IdentityReport identity_check(int k, int n);

/// Rows: all degree-d monomials in n variables (canonical order). Column j:
/// the coefficient vector of (point_j . x)^d.
ExactMatrix power_span_matrix(const SignPointSet& points, int d);

struct MembershipReport {
  bool member = false;
  std::size_t rank_points = 0;
  std::size_t rank_augmented = 0;
  bool unique = false;
  /// Per-point coefficients with F = sum coeff_j * (point_j . x)^d, when
  /// member (free coordinates set to zero).
  std::vector<Rational> coefficients;
  /// Dual certificate y (y^T . span_matrix = 0, y . F = 1) when not member.
  std::vector<Rational> certificate;
};

/// Decides whether F lies in the span of the d-th powers of the given sign
/// points, by one exact linear solve. F must be homogeneous of degree d.
MembershipReport span_membership(const Polynomial& f, const SignPointSet& points,
                                 int d);

struct SubsetVerdict {
  std::vector<int> point_indices;  // sorted, 0-based into the full point set
  bool member = false;
  std::size_t rank_points = 0;
  std::size_t rank_augmented = 0;
  std::vector<Rational> coefficients;  // populated for members only
};

struct SearchReport {
  int d = 0;
  int n = 0;
  int subset_size = 0;
  Integer total_subsets = 0;
  /// Subsets (as point index lists) whose span contains sigma_{d,n}.
  std::vector<std::vector<int>> members;
  std::vector<SubsetVerdict> verdicts;  // in enumeration (colex) order
  std::int64_t elapsed_ms = 0;
};

/// Tests sigma_{d,n} for span membership against every subset_size-element
/// subset of the full sign point set, enumerated in colexicographic order
/// over point indices. Verdicts are reported in enumeration order regardless
/// of the worker count.
SearchReport proposition_search(int d, int n, int subset_size, int threads = 1);

}  // namespace symrank

#endif
