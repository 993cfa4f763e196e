#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "symrank/decomposition.hpp"

using namespace symrank;

namespace {

Integer weight_of(const Decomposition& dec, const std::vector<int>& minus_vars) {
  for (const auto& s : dec.summands)
    if (s.form.minus_vars == minus_vars) return s.weight;
  FAIL("no summand with the requested minus set");
  return 0;
}

}  // namespace

TEST_CASE("signed linear forms") {
  const SignedLinearForm f{5, {1, 3}};
  CHECK(f.sign(0) == 1);
  CHECK(f.sign(1) == -1);
  CHECK(f.sign(3) == -1);
  CHECK(f.signs() == std::vector<int>{1, -1, 1, -1, 1});
  CHECK(f.negated().minus_vars == std::vector<int>{0, 2, 4});
  CHECK(f.projective_rep() == f);
  const SignedLinearForm g{3, {0, 2}};
  CHECK(g.projective_rep().minus_vars == std::vector<int>{1});
}

TEST_CASE("decompose_odd(3,5): the rank-6 identity") {
  const Decomposition dec = decompose_odd(3, 5);
  CHECK(dec.scale == 24);
  REQUIRE(dec.summands.size() == 6);
  CHECK(weight_of(dec, {}) == 3);
  for (int i = 0; i < 5; ++i) CHECK(weight_of(dec, {i}) == -1);
  CHECK(verify(dec).passed);
}

TEST_CASE("decompose_odd(1,n): sigma(1,n) is a single power") {
  for (int n : {1, 4, 9}) {
    const Decomposition dec = decompose_odd(1, n);
    CHECK(dec.scale == 1);
    REQUIRE(dec.summands.size() == 1);
    CHECK(dec.summands[0].weight == 1);
    CHECK(dec.summands[0].form.minus_vars.empty());
    CHECK(verify(dec).passed);
  }
}

TEST_CASE("decompose_odd(3,3): all binomial factors collapse to 1") {
  const Decomposition dec = decompose_odd(3, 3);
  CHECK(dec.scale == 24);
  REQUIRE(dec.summands.size() == 4);
  CHECK(weight_of(dec, {}) == 1);
  for (int i = 0; i < 3; ++i) CHECK(weight_of(dec, {i}) == -1);
  CHECK(verify(dec).passed);
}

TEST_CASE("decompose_odd rejects bad degrees") {
  CHECK_THROWS_AS(decompose_odd(2, 4), std::domain_error);
  CHECK_THROWS_AS(decompose_odd(5, 4), std::domain_error);
  CHECK_THROWS_AS(decompose_odd(-1, 4), std::domain_error);
}

TEST_CASE("decompose_even(2,3)") {
  const Decomposition dec = decompose_even(2, 3);
  CHECK(dec.scale == 8);
  REQUIRE(dec.summands.size() == 4);
  CHECK(weight_of(dec, {}) == 3);
  for (int i = 0; i < 3; ++i) CHECK(weight_of(dec, {i}) == -1);
  CHECK(verify(dec).passed);
}

TEST_CASE("decompose_even(4,5)") {
  const Decomposition dec = decompose_even(4, 5);
  CHECK(dec.scale == 384);
  REQUIRE(dec.summands.size() == 16);
  CHECK(weight_of(dec, {}) == 5);
  for (int i = 0; i < 5; ++i) CHECK(weight_of(dec, {i}) == -3);
  CHECK(weight_of(dec, {0, 1}) == 1);
  CHECK(weight_of(dec, {3, 4}) == 1);
  CHECK(verify(dec).passed);
}

TEST_CASE("decompose_even rejects n = d and odd degrees") {
  CHECK_THROWS_AS(decompose_even(2, 2), std::domain_error);
  CHECK_THROWS_AS(decompose_even(4, 4), std::domain_error);
  CHECK_THROWS_AS(decompose_even(3, 5), std::domain_error);
  CHECK_THROWS_AS(decompose_even(0, 5), std::domain_error);
}

TEST_CASE("even decomposition agrees with the derivative of the odd one") {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{
           {2, 3}, {2, 5}, {4, 5}, {4, 7}, {6, 8}}) {
    CHECK(decompose_even(d, n) == decompose_even_via_derivative(d, n));
  }
}

TEST_CASE("decompose_monomial") {
  SUBCASE("n=2: doubled symmetric split of the two-square identity") {
    const Decomposition dec = decompose_monomial(2);
    CHECK(dec.scale == 8);
    REQUIRE(dec.summands.size() == 2);
    CHECK(weight_of(dec, {}) == 2);
    CHECK(weight_of(dec, {1}) == -2);
    CHECK(verify(dec).passed);
  }
  SUBCASE("n=3: identical to decompose_odd(3,3)") {
    CHECK(decompose_monomial(3) == decompose_odd(3, 3));
  }
  SUBCASE("n=4: scale 2^4*4!, 2^(n-1) summands, exact") {
    const Decomposition dec = decompose_monomial(4);
    CHECK(dec.scale == 384);
    CHECK(dec.summands.size() == 8);
    // |I| = 2 representatives avoid x1, carrying the merged pair weight.
    CHECK(weight_of(dec, {1, 2}) == 2);
    CHECK(weight_of(dec, {0}) == -2);
    CHECK(verify(dec).passed);
  }
  SUBCASE("n=1 and n=6") {
    CHECK(decompose_monomial(1) == decompose_odd(1, 1));
    const Decomposition dec = decompose_monomial(6);
    CHECK(dec.scale == pow2(6) * factorial(6));
    CHECK(dec.summands.size() == 32);
    CHECK(verify(dec).passed);
  }
}

TEST_CASE("upper_bound") {
  CHECK(upper_bound(3, 5) == 6);
  CHECK(upper_bound(4, 5) == 16);
  CHECK(upper_bound(1, 7) == 1);
  CHECK(upper_bound(7, 9) == 130);
  CHECK_THROWS_AS(upper_bound(0, 5), std::domain_error);
  CHECK_THROWS_AS(upper_bound(6, 5), std::domain_error);
}

TEST_CASE("generator/verifier round-trip on a unit-size grid") {
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= std::min(n, 5); d += 2) {
      const Decomposition dec = decompose_odd(d, n);
      CHECK(verify(dec).passed);
      CHECK(Integer(dec.summands.size()) == upper_bound(d, n));
    }
  }
  for (int n = 3; n <= 7; ++n) {
    for (int d = 2; d < n; d += 2) {
      const Decomposition dec = decompose_even(d, n);
      CHECK(verify(dec).passed);
      CHECK(Integer(dec.summands.size()) == upper_bound(d, n));
    }
  }
}

TEST_CASE("weights alternate in sign with |I| and are nonzero") {
  for (const Decomposition& dec :
       {decompose_odd(5, 8), decompose_even(4, 7), decompose_monomial(6)}) {
    for (const auto& s : dec.summands) {
      CHECK(s.weight != 0);
      const bool odd_size = s.form.minus_vars.size() % 2 != 0;
      CHECK((s.weight < 0) == odd_size);
    }
  }
}

TEST_CASE("specialization: expanded right side at x_n = 0 recurses to n-1") {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{3, 5}, {5, 6}, {3, 4}}) {
    const Polynomial big = expand(decompose_odd(d, n));
    const Polynomial small = expand(decompose_odd(d, n - 1));
    CHECK(set_variable_zero(big, n - 1) == extend_nvars(small, n));
  }
}

TEST_CASE("verifier reports the first offending monomial of a tampered weight") {
  Decomposition dec = decompose_odd(3, 5);
  dec.summands[2].weight = -dec.summands[2].weight;
  const VerificationReport report = verify(dec);
  CHECK_FALSE(report.passed);
  REQUIRE(report.residual_monomial.has_value());
  CHECK(report.residual_coefficient != 0);
  // sanity: the report names a genuine residual term
  Polynomial residual = expand(dec);
  residual.add_scaled(elementary_symmetric(3, 5), Rational(-dec.scale));
  CHECK(residual.coefficient(*report.residual_monomial) == report.residual_coefficient);
}

TEST_CASE("verifier rejects structurally invalid decompositions") {
  Decomposition dup = decompose_odd(3, 5);
  dup.summands.push_back(dup.summands[1]);
  CHECK_THROWS_AS(verify(dup), std::domain_error);

  Decomposition zero_weight = decompose_odd(3, 5);
  zero_weight.summands[0].weight = 0;
  CHECK_THROWS_AS(verify(zero_weight), std::domain_error);

  Decomposition bad_degree = decompose_odd(3, 5);
  bad_degree.degree = 7;  // sigma(7,5) does not exist
  CHECK_THROWS_AS(verify(bad_degree), std::domain_error);

  Decomposition bad_form = decompose_odd(3, 5);
  bad_form.summands[1].form.minus_vars = {3, 1};  // unsorted
  CHECK_THROWS_AS(verify(bad_form), std::domain_error);
}
