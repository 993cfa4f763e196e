#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symrank/apolarity.hpp"
#include "symrank/io.hpp"

using namespace symrank;

TEST_CASE("decomposition JSON schema") {
  const Json j = to_json(decompose_odd(3, 5));
  CHECK(j["d"] == 3);
  CHECK(j["n"] == 5);
  CHECK(j["scale"] == "24");
  REQUIRE(j["summands"].size() == 6);
  CHECK(j["summands"][0]["weight"] == "3");
  CHECK(j["summands"][0]["minus_set"] == Json::array());
  CHECK(j["summands"][1]["weight"] == "-1");
  CHECK(j["summands"][1]["minus_set"] == Json::array({1}));  // 1-based indices
  CHECK(j["summands"][5]["minus_set"] == Json::array({5}));
}

TEST_CASE("decomposition JSON round-trips bit-exactly") {
  for (const Decomposition& dec :
       {decompose_odd(5, 7), decompose_even(4, 6), decompose_monomial(4)}) {
    const Json j = to_json(dec);
    const std::string bytes = j.dump(2);
    const Decomposition back = decomposition_from_json(Json::parse(bytes));
    CHECK(back == dec);
    CHECK(to_json(back).dump(2) == bytes);
  }
}

TEST_CASE("decomposition JSON parsing validates structure") {
  CHECK_THROWS_AS(decomposition_from_json(Json::parse("[]")), std::invalid_argument);
  CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"d":3,"n":5})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(decomposition_from_json(Json::parse(
                      R"({"d":3,"n":5,"scale":24,"summands":[]})")),
                  std::invalid_argument);  // scale must be a decimal string
  CHECK_THROWS_AS(decomposition_from_json(Json::parse(
                      R"({"d":3,"n":5,"scale":"x","summands":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      decomposition_from_json(Json::parse(
          R"({"d":3,"n":5,"scale":"24","summands":[{"weight":"1","minus_set":"no"}]})")),
      std::invalid_argument);
}

TEST_CASE("big integers stay decimal strings end to end") {
  // Values beyond 2^53 must never pass through a JSON number.
  CHECK(to_json(decompose_odd(7, 10))["scale"].is_string());
  Decomposition big;
  big.degree = 3;
  big.nvars = 3;
  big.scale = pow2(100);
  big.summands.push_back({-(pow2(90) + 1), SignedLinearForm{3, {1}}});
  const Json j = to_json(big);
  CHECK(j["scale"] == "1267650600228229401496703205376");
  CHECK(decomposition_from_json(j) == big);
  CHECK(to_json(decomposition_from_json(j)).dump() == j.dump());
}

TEST_CASE("verification report JSON") {
  const Json ok = to_json(verify(decompose_odd(3, 5)));
  CHECK(ok["verified"] == true);
  CHECK(ok["summand_count"] == 6);
  CHECK(ok["residual_monomial"].is_null());

  Decomposition bad = decompose_odd(3, 5);
  bad.summands[0].weight += 1;
  const Json fail = to_json(verify(bad));
  CHECK(fail["verified"] == false);
  CHECK(fail["residual_monomial"].is_string());
  CHECK(fail["residual_coefficient"].is_string());
}

TEST_CASE("bounds report JSON") {
  const Json j = to_json(bounds(4, 5));
  CHECK(j["d"] == 4);
  CHECK(j["lower"] == "10");
  CHECK(j["upper"] == "16");
  CHECK(j["exact"].is_null());
  CHECK(j["real_rank_equal"] == false);
  const Json exact = to_json(bounds(3, 5));
  CHECK(exact["exact"] == "6");
  CHECK(exact["real_rank_equal"] == true);
}

TEST_CASE("identity and search report JSON") {
  const Json id = to_json(identity_check(1, 4));
  CHECK(id["lhs"] == "96");
  CHECK(id["rhs"] == "96");
  CHECK(id["equal"] == true);

  SearchReport search = proposition_search(2, 3, 2);
  search.elapsed_ms = 0;
  const Json js = to_json(search);
  CHECK(js["subset_size"] == 2);
  CHECK(js["total_subsets"] == "6");
  CHECK(js["members"].is_array());
  CHECK_FALSE(js.contains("subsets"));
  const Json with_table = to_json(search, true);
  REQUIRE(with_table["subsets"].size() == 6);
  CHECK(with_table["subsets"][0].contains("member"));
}

TEST_CASE("matrix serialization") {
  const ExactMatrix m = squarefree_refine(
      catalecticant(elementary_symmetric(2, 3), 1));
  SUBCASE("CSV carries labels and decimal entries") {
    const std::string csv = matrix_to_csv(m);
    CHECK(csv == ",x1,x2,x3\n"
                 "x1,0,1,1\n"
                 "x2,1,0,1\n"
                 "x3,1,1,0\n");
  }
  SUBCASE("bitmap rows") {
    CHECK(matrix_to_bitmap(m) == "011\n101\n110\n");
    ExactMatrix notbinary(m);
    notbinary.at(0, 0) = Rational(2);
    CHECK_THROWS_AS(matrix_to_bitmap(notbinary), std::domain_error);
  }
  SUBCASE("pretty text marks zero rows and columns") {
    const std::string pretty =
        matrix_pretty(catalecticant(elementary_symmetric(4, 5), 2));
    CHECK(pretty.find("11*") != std::string::npos);
    CHECK(pretty.find("12 ") != std::string::npos);
    CHECK(pretty.find("55*") != std::string::npos);
  }
  SUBCASE("JSON form") {
    const Json j = matrix_to_json(m, exact_rank(m));
    CHECK(j["rows"] == 3);
    CHECK(j["cols"] == 3);
    CHECK(j["row_labels"][0] == "x1");
    CHECK(j["entries"][0][1] == "1");
    CHECK(j["rank"] == 3);
  }
}

TEST_CASE("rational decimal forms") {
  CHECK(to_decimal(Rational(3, 2)) == "3/2");
  CHECK(to_decimal(Rational(-2)) == "-2");
  CHECK(rational_from_decimal("3/2") == Rational(3, 2));
  CHECK(rational_from_decimal("-4/2") == Rational(-2));  // canonicalized on parse
  CHECK(rational_from_decimal("-7") == Rational(-7));
  CHECK_THROWS_AS(rational_from_decimal("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(integer_from_decimal(""), std::invalid_argument);
}
