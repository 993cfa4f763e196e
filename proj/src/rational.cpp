#include "symrank/rational.hpp"

#include <stdexcept>

namespace symrank {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer falling_factorial(unsigned long n, unsigned long m) {
  Integer r = 1;
  for (unsigned long i = 0; i < m; ++i) r *= Integer(n - i);
  return r;
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Integer multinomial(int d, const int* parts, int count) {
  Integer r = 1;
  long remaining = d;
  for (int i = 0; i < count; ++i) {
    r *= binomial(remaining, parts[i]);
    remaining -= parts[i];
  }
  if (remaining != 0)
    throw std::domain_error("multinomial: parts do not sum to degree");
  return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_decimal(const Integer& z) { return z.get_str(); }

std::string to_decimal(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer integer_from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  return Integer(s);  // throws std::invalid_argument on malformed input
}

Rational rational_from_decimal(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer_from_decimal(s));
  const Integer num = integer_from_decimal(s.substr(0, slash));
  const Integer den = integer_from_decimal(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace symrank
