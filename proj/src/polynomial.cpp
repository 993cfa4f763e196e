#include "symrank/polynomial.hpp"

#include <stdexcept>

#include "symrank/combinat.hpp"

namespace symrank {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::domain_error("Polynomial: nvars must be positive");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::single_term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_)
    throw std::domain_error("Polynomial::add_term: variable count mismatch");
  if (c == 0) return;
  const auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& c) {
  if (other.nvars_ != nvars_)
    throw std::domain_error("Polynomial: variable count mismatch");
  if (c == 0) return;
  for (const auto& [m, coeff] : other.terms_) add_term(m, coeff * c);
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw std::domain_error("Polynomial: variable count mismatch");
  Polynomial prod(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) prod.add_term(ma.times(mb), ca * cb);
  return prod;
}

Polynomial operator*(const Rational& c, Polynomial p) {
  p *= c;
  return p;
}

Polynomial elementary_symmetric(int d, int n) {
  if (d < 1 || d > n)
    throw std::domain_error("elementary_symmetric: need 1 <= d <= n");
  Polynomial p(n);
  for (const auto& subset : subsets_lex(n, d))
    p.add_term(Monomial::from_support(n, subset), Rational(1));
  return p;
}

Polynomial expand_linear_power(const std::vector<int>& signs, int d) {
  if (signs.empty())
    throw std::domain_error("expand_linear_power: empty sign vector");
  if (d < 0) throw std::domain_error("expand_linear_power: negative degree");
  for (int s : signs)
    if (s != 1 && s != -1)
      throw std::domain_error("expand_linear_power: signs must be +1 or -1");

  const int n = static_cast<int>(signs.size());
  Polynomial p(n);
  for (auto& m : monomials_of_degree(n, d)) {
    Integer coeff = multinomial(d, m.exponents().data(), n);
    int neg = 0;
    for (int i = 0; i < n; ++i)
      if (signs[static_cast<std::size_t>(i)] < 0) neg += m.exponent(i);
    if (neg % 2 != 0) coeff = -coeff;
    p.add_term(m, Rational(coeff));
  }
  return p;
}

Polynomial apply_diff(const Monomial& op, const Polynomial& target) {
  if (op.nvars() != target.nvars())
    throw std::domain_error("apply_diff: variable count mismatch");
  const int n = op.nvars();
  Polynomial out(n);
  for (const auto& [m, c] : target.terms()) {
    if (!op.divides(m)) continue;
    Integer factor = 1;
    std::vector<int> rest(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int a = m.exponent(i), b = op.exponent(i);
      factor *= falling_factorial(static_cast<unsigned long>(a),
                                  static_cast<unsigned long>(b));
      rest[static_cast<std::size_t>(i)] = a - b;
    }
    out.add_term(Monomial(std::move(rest)), c * Rational(factor));
  }
  return out;
}

Polynomial apply_diff(const Polynomial& op, const Polynomial& target) {
  if (op.nvars() != target.nvars())
    throw std::domain_error("apply_diff: variable count mismatch");
  Polynomial out(op.nvars());
  for (const auto& [m, c] : op.terms()) out.add_scaled(apply_diff(m, target), c);
  return out;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw std::domain_error("evaluate: point length mismatch");
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (int i = 0; i < p.nvars(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[static_cast<std::size_t>(i)].get_num_mpz_t(),
                 static_cast<unsigned long>(e));
      mpz_pow_ui(pw.get_den_mpz_t(), point[static_cast<std::size_t>(i)].get_den_mpz_t(),
                 static_cast<unsigned long>(e));
      term *= pw;  // already canonical: powers of a canonical fraction
    }
    total += term;
  }
  return total;
}

Polynomial set_variable_zero(const Polynomial& p, int pos) {
  if (pos < 0 || pos >= p.nvars())
    throw std::domain_error("set_variable_zero: position out of range");
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m.exponent(pos) == 0) out.add_term(m, c);
  return out;
}

Polynomial extend_nvars(const Polynomial& p, int nvars) {
  if (nvars < p.nvars())
    throw std::domain_error("extend_nvars: cannot shrink variable count");
  Polynomial out(nvars);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exponents();
    e.resize(static_cast<std::size_t>(nvars), 0);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || m.is_constant()) {
      out += to_decimal(mag);
      if (!m.is_constant()) out += '*';
    }
    if (!m.is_constant()) out += m.str();
  }
  return out;
}

}  // namespace symrank
