#include "symrank/decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "symrank/combinat.hpp"

namespace symrank {

int SignedLinearForm::sign(int pos) const {
  return std::binary_search(minus_vars.begin(), minus_vars.end(), pos) ? -1 : 1;
}

std::vector<int> SignedLinearForm::signs() const {
  std::vector<int> s(static_cast<std::size_t>(nvars), 1);
  for (int p : minus_vars) s[static_cast<std::size_t>(p)] = -1;
  return s;
}

SignedLinearForm SignedLinearForm::negated() const {
  SignedLinearForm out{nvars, {}};
  for (int i = 0; i < nvars; ++i)
    if (sign(i) > 0) out.minus_vars.push_back(i);
  return out;
}

SignedLinearForm SignedLinearForm::projective_rep() const {
  return sign(0) > 0 ? *this : negated();
}

namespace {

void check_form(const SignedLinearForm& f) {
  if (f.nvars < 1) throw std::domain_error("SignedLinearForm: nvars must be positive");
  int prev = -1;
  for (int p : f.minus_vars) {
    if (p < 0 || p >= f.nvars)
      throw std::domain_error("SignedLinearForm: minus position out of range");
    if (p <= prev)
      throw std::domain_error("SignedLinearForm: minus positions must be sorted and distinct");
    prev = p;
  }
}

}  // namespace

Decomposition decompose_odd(int d, int n) {
  if (d % 2 == 0)
    throw std::domain_error("decompose_odd: degree is even, use decompose_even");
  if (d < 1 || d > n) throw std::domain_error("decompose_odd: need odd 1 <= d <= n");

  const int k = (d - 1) / 2;
  Decomposition dec;
  dec.degree = d;
  dec.nvars = n;
  dec.scale = pow2(static_cast<unsigned long>(d - 1)) *
              factorial(static_cast<unsigned long>(d));
  for (const auto& subset : subsets_up_to_size(n, k)) {
    const int sz = static_cast<int>(subset.size());
    Integer w = binomial(n - k - sz - 1, k - sz);
    if (sz % 2 != 0) w = -w;
    dec.summands.push_back({std::move(w), SignedLinearForm{n, subset}});
  }
  return dec;
}

Decomposition decompose_even(int d, int n) {
  if (d % 2 != 0)
    throw std::domain_error("decompose_even: degree is odd, use decompose_odd");
  if (d < 2) throw std::domain_error("decompose_even: need even d >= 2");
  if (n <= d)
    throw std::domain_error("decompose_even: need n > d (the n-d factor vanishes at n = d)");

  const int k = d / 2;
  Decomposition dec;
  dec.degree = d;
  dec.nvars = n;
  dec.scale = pow2(static_cast<unsigned long>(d)) * Integer(n - d) *
              factorial(static_cast<unsigned long>(d));
  for (const auto& subset : subsets_up_to_size(n, k)) {
    const int sz = static_cast<int>(subset.size());
    Integer w = binomial(n - k - sz - 1, k - sz) * Integer(n - 2 * sz);
    if (sz % 2 != 0) w = -w;
    dec.summands.push_back({std::move(w), SignedLinearForm{n, subset}});
  }
  return dec;
}

Decomposition decompose_even_via_derivative(int d, int n) {
  if (d % 2 != 0)
    throw std::domain_error("decompose_even_via_derivative: degree must be even");
  if (d < 2 || n <= d)
    throw std::domain_error("decompose_even_via_derivative: need even d >= 2 and n > d");

  // (d/dx1 + ... + d/dxn) applied to w * L^(d+1) gives
  // w * (d+1) * (n - 2|I|) * L^d, and to 2^d (d+1)! sigma_{d+1,n} gives
  // 2^d (d+1)! (n-d) sigma_{d,n}; dividing both sides by d+1 yields the
  // even-degree identity.
  Decomposition odd = decompose_odd(d + 1, n);
  Decomposition dec;
  dec.degree = d;
  dec.nvars = n;
  dec.scale = odd.scale / Integer(d + 1) * Integer(n - d);
  dec.summands.reserve(odd.summands.size());
  for (auto& s : odd.summands) {
    const int sz = static_cast<int>(s.form.minus_vars.size());
    dec.summands.push_back({s.weight * Integer(n - 2 * sz), std::move(s.form)});
  }
  return dec;
}

Decomposition decompose_monomial(int n) {
  if (n < 1) throw std::domain_error("decompose_monomial: need n >= 1");
  if (n % 2 != 0) return decompose_odd(n, n);

  const int k = n / 2;
  Decomposition dec;
  dec.degree = n;
  dec.nvars = n;
  // Scale doubled from 2^(n-1) n! so the half-weights of the symmetric split
  // stay integral.
  dec.scale = pow2(static_cast<unsigned long>(n)) *
              factorial(static_cast<unsigned long>(n));
  for (const auto& subset : subsets_up_to_size(n, k - 1)) {
    const int sz = static_cast<int>(subset.size());
    dec.summands.push_back(
        {Integer(sz % 2 == 0 ? 2 : -2), SignedLinearForm{n, subset}});
  }
  // At |I| = n/2 the forms come in complementary pairs with equal n-th
  // powers; keep one summand per pair, represented by the subset avoiding
  // x1, carrying the merged weight 2*(-1)^k.
  for (const auto& subset : subsets_lex(n, k)) {
    if (!subset.empty() && subset.front() == 0) continue;
    dec.summands.push_back(
        {Integer(k % 2 == 0 ? 2 : -2), SignedLinearForm{n, subset}});
  }
  return dec;
}

Integer upper_bound(int d, int n) {
  if (d < 1 || d > n) throw std::domain_error("upper_bound: need 1 <= d <= n");
  Integer total = 0;
  for (int i = 0; i <= d / 2; ++i) total += binomial(n, i);
  return total;
}

Polynomial expand(const Decomposition& dec) {
  Polynomial sum(dec.nvars);
  for (const auto& s : dec.summands)
    sum.add_scaled(expand_linear_power(s.form.signs(), dec.degree),
                   Rational(s.weight));
  return sum;
}

VerificationReport verify(const Decomposition& dec) {
  if (dec.nvars < 1) throw std::domain_error("verify: nvars must be positive");
  if (dec.degree < 1 || dec.degree > dec.nvars)
    throw std::domain_error("verify: need 1 <= degree <= nvars");
  std::set<std::vector<int>> seen;
  for (const auto& s : dec.summands) {
    check_form(s.form);
    if (s.form.nvars != dec.nvars)
      throw std::domain_error("verify: summand variable count mismatch");
    if (s.weight == 0) throw std::domain_error("verify: zero weight");
    if (!seen.insert(s.form.minus_vars).second)
      throw std::domain_error("verify: duplicate sign vector");
  }

  Polynomial residual = expand(dec);
  residual.add_scaled(elementary_symmetric(dec.degree, dec.nvars),
                      Rational(-dec.scale));

  VerificationReport report;
  report.degree = dec.degree;
  report.nvars = dec.nvars;
  report.summand_count = dec.summands.size();
  report.real_coefficients = true;
  report.passed = residual.is_zero();
  if (!report.passed) {
    const auto& [m, c] = *residual.terms().begin();
    report.residual_monomial = m;
    report.residual_coefficient = c;
  }
  return report;
}

}  // namespace symrank
