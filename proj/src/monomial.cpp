#include "symrank/monomial.hpp"

#include <stdexcept>

namespace symrank {

Monomial::Monomial(int nvars) {
  if (nvars < 1) throw std::domain_error("Monomial: nvars must be positive");
  exps_.assign(static_cast<std::size_t>(nvars), 0);
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::domain_error("Monomial: nvars must be positive");
  for (int e : exps_)
    if (e < 0) throw std::domain_error("Monomial: negative exponent");
}

Monomial Monomial::variable(int nvars, int pos) {
  Monomial m(nvars);
  if (pos < 0 || pos >= nvars)
    throw std::domain_error("Monomial::variable: position out of range");
  m.exps_[static_cast<std::size_t>(pos)] = 1;
  return m;
}

Monomial Monomial::from_support(int nvars, const std::vector<int>& positions) {
  Monomial m(nvars);
  for (int p : positions) {
    if (p < 0 || p >= nvars)
      throw std::domain_error("Monomial::from_support: position out of range");
    if (m.exps_[static_cast<std::size_t>(p)] != 0)
      throw std::domain_error("Monomial::from_support: repeated position");
    m.exps_[static_cast<std::size_t>(p)] = 1;
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_squarefree() const {
  for (int e : exps_)
    if (e > 1) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars())
    throw std::domain_error("Monomial::divides: variable count mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars())
    throw std::domain_error("Monomial::times: variable count mismatch");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (nvars() != other.nvars()) return nvars() <=> other.nvars();
  const int da = degree(), db = other.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    // more weight on an earlier variable = earlier index sequence
    if (exps_[i] != other.exps_[i]) return other.exps_[i] <=> exps_[i];
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  if (is_constant()) return "1";
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    const int e = exps_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string Monomial::index_label() const {
  if (is_constant()) return "1";
  const bool wide = nvars() > 9;
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    for (int rep = 0; rep < exps_[static_cast<std::size_t>(i)]; ++rep) {
      if (wide && !out.empty()) out += '.';
      out += std::to_string(i + 1);
    }
  }
  return out;
}

namespace {

void collect_monomials(int nvars, int pos, int remaining, std::vector<int>& exps,
                       std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    exps[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(Monomial(exps));
    exps[static_cast<std::size_t>(pos)] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(pos)] = e;
    collect_monomials(nvars, pos + 1, remaining - e, exps, out);
  }
  exps[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  if (nvars < 1) throw std::domain_error("monomials_of_degree: nvars must be positive");
  if (degree < 0) throw std::domain_error("monomials_of_degree: negative degree");
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  collect_monomials(nvars, 0, degree, exps, out);
  return out;
}

}  // namespace symrank
