#include "symrank/apolarity.hpp"

#include <map>
#include <stdexcept>

#include "symrank/combinat.hpp"
#include "symrank/decomposition.hpp"

namespace symrank {

ExactMatrix catalecticant(const Polynomial& f, int r) {
  const auto d = f.homogeneous_degree();
  if (!d)
    throw std::domain_error(
        "catalecticant: polynomial is zero or not homogeneous; pass the degree explicitly");
  return catalecticant(f, r, *d);
}

ExactMatrix catalecticant(const Polynomial& f, int r, int degree) {
  if (r < 0 || r > degree)
    throw std::domain_error("catalecticant: need 0 <= r <= degree");
  for (const auto& [m, c] : f.terms())
    if (m.degree() != degree)
      throw std::domain_error("catalecticant: polynomial not homogeneous of the given degree");

  const int n = f.nvars();
  ExactMatrix out(monomials_of_degree(n, degree - r), monomials_of_degree(n, r));

  std::map<Monomial, std::size_t> row_index;
  for (std::size_t i = 0; i < out.rows(); ++i) row_index.emplace(out.row_labels()[i], i);

  for (std::size_t j = 0; j < out.cols(); ++j) {
    const Polynomial image = apply_diff(out.col_labels()[j], f);
    for (const auto& [m, c] : image.terms()) out.at(row_index.at(m), j) = c;
  }
  return out;
}

ExactMatrix squarefree_refine(const ExactMatrix& m) {
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row_is_zero(r)) live_rows.push_back(r);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.col_is_zero(c)) live_cols.push_back(c);

  std::vector<Monomial> row_labels, col_labels;
  for (std::size_t r : live_rows) row_labels.push_back(m.row_labels()[r]);
  for (std::size_t c : live_cols) col_labels.push_back(m.col_labels()[c]);

  ExactMatrix out(std::move(row_labels), std::move(col_labels));
  for (std::size_t r = 0; r < live_rows.size(); ++r)
    for (std::size_t c = 0; c < live_cols.size(); ++c)
      out.at(r, c) = m.at(live_rows[r], live_cols[c]);
  return out;
}

ExactMatrix disjointness_matrix(int r, int n) {
  if (r < 0 || 2 * r > n)
    throw std::domain_error("disjointness_matrix: need 0 <= 2r <= n");
  const auto subsets = subsets_lex(n, r);
  std::vector<Monomial> labels;
  labels.reserve(subsets.size());
  for (const auto& s : subsets) labels.push_back(Monomial::from_support(n, s));

  ExactMatrix out(labels, labels);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      bool disjoint = true;
      for (int a : subsets[i]) {
        for (int b : subsets[j]) {
          if (a == b) {
            disjoint = false;
            break;
          }
        }
        if (!disjoint) break;
      }
      if (disjoint) out.at(i, j) = 1;
    }
  }
  return out;
}

Integer hilbert_function(int d, int n, int r) {
  if (d < 1 || d > n) throw std::domain_error("hilbert_function: need 1 <= d <= n");
  if (r < 0) throw std::domain_error("hilbert_function: negative degree");
  if (r > d) return 0;  // the apolar ideal contains all of S_r beyond degree d
  return r <= d / 2 ? binomial(n, r) : binomial(n, d - r);
}

Integer hilbert_function_via_rank(int d, int n, int r) {
  if (r > d) return 0;
  return Integer(exact_rank(catalecticant(elementary_symmetric(d, n), r)));
}

Integer lower_bound(int d, int n) {
  if (d < 1 || d > n) throw std::domain_error("lower_bound: need 1 <= d <= n");
  if (d == 1) return 1;

  Integer total = 0;
  for (int r = 0; r <= d - 1; ++r) total += hilbert_function(d - 1, n - 1, r);

  // The telescoped closed forms; kept as a hard internal consistency check.
  Integer closed = 0;
  if (d % 2 != 0) {
    for (int r = 0; r <= (d - 1) / 2; ++r) closed += binomial(n, r);
  } else {
    for (int r = 0; r <= d / 2; ++r) closed += binomial(n, r);
    closed -= binomial(n - 1, d / 2);
  }
  if (total != closed)
    throw std::logic_error("lower_bound: closed form disagrees with Hilbert sum");
  return total;
}

bool perp_member(const Monomial& g, const Polynomial& f) {
  return apply_diff(g, f).is_zero();
}

bool perp_member(const Polynomial& g, const Polynomial& f) {
  return apply_diff(g, f).is_zero();
}

BoundsReport bounds(int d, int n) {
  if (d < 1 || d > n) throw std::domain_error("bounds: need 1 <= d <= n");
  BoundsReport report;
  report.d = d;
  report.n = n;
  report.lower = lower_bound(d, n);
  report.upper = upper_bound(d, n);
  if (d % 2 != 0) {
    report.exact = report.upper;
    report.real_rank_equal = true;
    report.notes =
        "exact: catalecticant lower bound meets the construction; the "
        "certifying decomposition has rational coefficients, so the real "
        "rank agrees";
    if (report.lower != report.upper)
      throw std::logic_error("bounds: odd-degree bounds failed to meet");
  } else {
    report.real_rank_equal = false;
    report.notes = "even degree: gap of " + to_decimal(Integer(report.upper - report.lower)) +
                   "; minimality of the construction is unknown";
    if (n == d)
      report.notes +=
          "; n = d: the power-sum construction needs n > d, the upper bound "
          "here is only the generic summand-count formula";
  }
  return report;
}

}  // namespace symrank
