#include "symrank/witness.hpp"

#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "symrank/combinat.hpp"

namespace symrank {

SignPointSet full_sign_points(int n) {
  if (n < 1) throw std::domain_error("full_sign_points: need n >= 1");
  SignPointSet set;
  set.nvars = n;
  // Minus sets range over subsets of positions {1,...,n-1}; position 0 is
  // the projective normalization and always carries +1.
  for (const auto& subset : subsets_up_to_size(n - 1, n - 1)) {
    std::vector<int> minus;
    minus.reserve(subset.size());
    for (int p : subset) minus.push_back(p + 1);
    set.points.push_back(SignedLinearForm{n, std::move(minus)});
  }
  return set;
}

IdentityReport identity_check(int k, int n) {
  if (k < 0) throw std::domain_error("identity_check: need k >= 0");
  if (n < 2 * k + 1) throw std::domain_error("identity_check: need n >= 2k+1");

  IdentityReport report;
  report.k = k;
  report.n = n;
  for (int i = 0; i <= k; ++i) {
    Integer base(n - 2 * i);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(2 * k + 1));
    Integer term = binomial(n - k - 1 - i, k - i) * binomial(n, i) * power;
    report.lhs += (i % 2 == 0) ? term : -term;
  }
  report.rhs = pow2(static_cast<unsigned long>(2 * k)) *
               falling_factorial(static_cast<unsigned long>(n),
                                 static_cast<unsigned long>(2 * k + 1));
  report.equal = (report.lhs == report.rhs);
  return report;
}

ExactMatrix power_span_matrix(const SignPointSet& points, int d) {
  if (points.nvars < 1)
    throw std::domain_error("power_span_matrix: need at least one variable");
  if (d < 1) throw std::domain_error("power_span_matrix: need d >= 1");
  const int n = points.nvars;

  // Columns are labeled by the square-free monomial of the point's minus set
  // (the all-plus point gets the constant label).
  std::vector<Monomial> col_labels;
  col_labels.reserve(points.points.size());
  for (const auto& p : points.points)
    col_labels.push_back(Monomial::from_support(n, p.minus_vars));

  ExactMatrix out(monomials_of_degree(n, d), col_labels);
  std::map<Monomial, std::size_t> row_index;
  for (std::size_t i = 0; i < out.rows(); ++i) row_index.emplace(out.row_labels()[i], i);

  for (std::size_t j = 0; j < points.points.size(); ++j) {
    const Polynomial power = expand_linear_power(points.points[j].signs(), d);
    for (const auto& [m, c] : power.terms()) out.at(row_index.at(m), j) = c;
  }
  return out;
}

MembershipReport span_membership(const Polynomial& f, const SignPointSet& points,
                                 int d) {
  if (f.nvars() != points.nvars)
    throw std::domain_error("span_membership: variable count mismatch");
  const auto fd = f.homogeneous_degree();
  if (!f.is_zero() && (!fd || *fd != d))
    throw std::domain_error("span_membership: polynomial not homogeneous of degree d");

  const ExactMatrix a = power_span_matrix(points, d);
  std::vector<Rational> b(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) b[i] = f.coefficient(a.row_labels()[i]);

  const LinearSolveResult solve = solve_exact(a, b);
  MembershipReport report;
  report.member = solve.consistent;
  report.rank_points = solve.rank_lhs;
  report.rank_augmented = solve.rank_augmented;
  report.unique = solve.unique;
  if (solve.consistent)
    report.coefficients = solve.solution;
  else
    report.certificate = solve.infeasibility_certificate;
  return report;
}

namespace {

SubsetVerdict judge_subset(const Polynomial& f, const SignPointSet& full,
                           const std::vector<int>& indices, int d) {
  SignPointSet sub;
  sub.nvars = full.nvars;
  sub.points.reserve(indices.size());
  for (int i : indices) sub.points.push_back(full.points[static_cast<std::size_t>(i)]);

  const MembershipReport m = span_membership(f, sub, d);
  SubsetVerdict v;
  v.point_indices = indices;
  v.member = m.member;
  v.rank_points = m.rank_points;
  v.rank_augmented = m.rank_augmented;
  if (m.member) v.coefficients = m.coefficients;
  return v;
}

}  // namespace

SearchReport proposition_search(int d, int n, int subset_size, int threads) {
  const SignPointSet full = full_sign_points(n);
  const int total_points = static_cast<int>(full.points.size());
  if (subset_size < 0 || subset_size > total_points)
    throw std::domain_error("proposition_search: subset size exceeds the point count");
  if (threads < 1) threads = 1;

  const auto start = std::chrono::steady_clock::now();
  const Polynomial f = elementary_symmetric(d, n);

  // Materialize the subsets in colex order so results can be merged
  // deterministically no matter how the work is split.
  std::vector<std::vector<int>> subsets;
  {
    std::vector<int> s(static_cast<std::size_t>(subset_size));
    for (int i = 0; i < subset_size; ++i) s[static_cast<std::size_t>(i)] = i;
    subsets.push_back(s);
    while (next_subset_colex(s, total_points)) subsets.push_back(s);
  }

  SearchReport report;
  report.d = d;
  report.n = n;
  report.subset_size = subset_size;
  report.total_subsets = binomial(total_points, subset_size);
  report.verdicts.resize(subsets.size());

  const std::size_t nworkers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), subsets.size());
  if (nworkers <= 1) {
    for (std::size_t i = 0; i < subsets.size(); ++i)
      report.verdicts[i] = judge_subset(f, full, subsets[i], d);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(nworkers);
    for (std::size_t w = 0; w < nworkers; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < subsets.size(); i += nworkers)
          report.verdicts[i] = judge_subset(f, full, subsets[i], d);
      });
    }
    for (auto& t : workers) t.join();
  }

  for (const auto& v : report.verdicts)
    if (v.member) report.members.push_back(v.point_indices);

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace symrank
