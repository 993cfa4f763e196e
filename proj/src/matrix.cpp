#include "symrank/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace symrank {

ExactMatrix::ExactMatrix(std::vector<Monomial> row_labels,
                         std::vector<Monomial> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  data_.assign(row_labels_.size() * col_labels_.size(), Rational(0));
}

const Rational& ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols())
    throw std::domain_error("ExactMatrix::at: index out of range");
  return data_[r * cols() + c];
}

Rational& ExactMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows() || c >= cols())
    throw std::domain_error("ExactMatrix::at: index out of range");
  return data_[r * cols() + c];
}

bool ExactMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols(); ++c)
    if (at(r, c) != 0) return false;
  return true;
}

bool ExactMatrix::col_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows(); ++r)
    if (at(r, c) != 0) return false;
  return true;
}

bool ExactMatrix::is_binary() const {
  for (const auto& v : data_)
    if (v != 0 && v != 1) return false;
  return true;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(col_labels_, row_labels_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

// Rows scaled by the lcm of their denominators: an integer matrix with the
// same rational rank. Also reports the per-row scale factors.
std::vector<std::vector<Integer>> cleared_rows(const ExactMatrix& m,
                                               std::vector<Integer>* scales) {
  std::vector<std::vector<Integer>> rows(m.rows());
  if (scales) scales->assign(m.rows(), Integer(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& den = m.at(r, c).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    rows[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m.at(r, c);
      rows[r][c] = q.get_num() * (lcm / q.get_den());
    }
    if (scales) (*scales)[r] = lcm;
  }
  return rows;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

int rank_mod_p_rows(std::vector<std::vector<std::uint64_t>>& a, std::uint64_t p) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = mod_pow(a[rank][col], p - 2, p);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = a[i][col] * inv % p;
      for (std::size_t j = col; j < n; ++j)
        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Integer t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

std::optional<int> rank_mod_prime(const ExactMatrix& m, std::uint32_t p) {
  std::vector<Integer> scales;
  const auto rows = cleared_rows(m, &scales);
  for (const auto& s : scales)
    if (mpz_fdiv_ui(s.get_mpz_t(), p) == 0) return std::nullopt;
  std::vector<std::vector<std::uint64_t>> a(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    a[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      a[r][c] = mpz_fdiv_ui(rows[r][c].get_mpz_t(), p);
  }
  return rank_mod_p_rows(a, p);
}

int rank_fraction_free(const ExactMatrix& m) {
  return bareiss_rank(cleared_rows(m, nullptr));
}

int exact_rank(const ExactMatrix& m) {
  // Zero rows/columns never affect the rank; strip them so the elimination
  // runs on the essential core.
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row_is_zero(r)) live_rows.push_back(r);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.col_is_zero(c)) live_cols.push_back(c);
  if (live_rows.empty() || live_cols.empty()) return 0;

  ExactMatrix core(std::vector<Monomial>(live_rows.size(), Monomial(1)),
                   std::vector<Monomial>(live_cols.size(), Monomial(1)));
  for (std::size_t r = 0; r < live_rows.size(); ++r)
    for (std::size_t c = 0; c < live_cols.size(); ++c)
      core.at(r, c) = m.at(live_rows[r], live_cols[c]);

  const int maxrank = static_cast<int>(std::min(core.rows(), core.cols()));
  for (const std::uint32_t p : kRankPrimes) {
    const auto r = rank_mod_prime(core, p);
    if (r && *r == maxrank) return maxrank;
  }
  return rank_fraction_free(core);
}

LinearSolveResult solve_exact(const ExactMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows())
    throw std::domain_error("solve_exact: right-hand side length mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  // Augmented tableau [A | b | I] so row operations also accumulate the
  // multipliers needed for an infeasibility certificate.
  const std::size_t width = n + 1 + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) t[r][c] = a.at(r, c);
    t[r][n] = b[r];
    t[r][n + 1 + r] = 1;
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && t[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(t[pivot], t[rank]);
    const Rational inv = Rational(1) / t[rank][col];
    for (std::size_t j = col; j < width; ++j) t[rank][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || t[i][col] == 0) continue;
      const Rational f = t[i][col];
      for (std::size_t j = col; j < width; ++j) t[i][j] -= f * t[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  LinearSolveResult result;
  result.rank_lhs = rank;

  for (std::size_t i = rank; i < m; ++i) {
    if (t[i][n] == 0) continue;
    // 0 = nonzero: scale the tracked multipliers into a certificate row y
    // with y^T A = 0, y^T b = 1.
    result.consistent = false;
    result.rank_augmented = rank + 1;
    const Rational inv = Rational(1) / t[i][n];
    result.infeasibility_certificate.resize(m);
    for (std::size_t j = 0; j < m; ++j)
      result.infeasibility_certificate[j] = t[i][n + 1 + j] * inv;
    return result;
  }

  result.consistent = true;
  result.rank_augmented = rank;
  result.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) result.solution[pivot_col[i]] = t[i][n];
  result.unique = (rank == n);
  return result;
}

}  // namespace symrank
