#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "b2der/closedform.hpp"
#include "b2der/io.hpp"
#include "fixtures.hpp"

using namespace b2der;

TEST_CASE("json round trip on printed examples") {
  for (const auto& ex : b2der_test::b2_examples()) {
    json j = derivation_to_json(ex.expected);
    CHECK(derivation_from_json(j) == ex.expected);
    // Round trip through text as well.
    CHECK(derivation_from_json(json::parse(j.dump())) == ex.expected);
  }
  for (const auto& ex : b2der_test::a2_examples()) {
    json j = derivation_to_json(ex.expected);
    CHECK(derivation_from_json(j) == ex.expected);
  }
}

TEST_CASE("json schema details") {
  json e = derivation_to_json(euler_derivation());
  CHECK(e["degree"] == 1);
  CHECK(e["f"] == json::array({{"1", 1, 0}}));
  CHECK(e["g"] == json::array({{"1", 0, 1}}));

  json z = derivation_to_json(Derivation(HomoPoly(2), HomoPoly(2)));
  CHECK(z["f"].empty());
  CHECK(z["g"].empty());
}

TEST_CASE("latex rendering in display style") {
  std::string s = latex_derivation(theta_m({3, 5, 2, 2}));
  CHECK(s.find("\\frac{1}{10}") != std::string::npos);
  CHECK(s.find("x^{5}") != std::string::npos);
  CHECK(s.find("\\partial_x") != std::string::npos);
  CHECK(s ==
        "\\left(\\frac{1}{10} \\, x^{5} - \\frac{1}{6} \\, x^{3} "
        "y^{2}\\right)\\partial_x+\\left(-\\frac{1}{15} \\, "
        "y^{5}\\right)\\partial_y");
  CHECK(latex_poly(HomoPoly(3)) == "0");
}

TEST_CASE("multiplicity parsing") {
  CHECK(parse_multiplicity("1,1,1,1") == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(parse_multiplicity("0,3") == std::vector<unsigned>{0, 3});
  CHECK_THROWS(parse_multiplicity("1,-2"));
  CHECK_THROWS(parse_multiplicity("a,b"));
}

TEST_CASE("forms parsing") {
  std::vector<LinearForm> fs = parse_forms("1,0;0,1;1,-1;1,1");
  REQUIRE(fs.size() == 4);
  CHECK(fs[2].a() == 1);
  CHECK(fs[2].b() == -1);
  CHECK(parse_forms("1/2,-3")[0].a() == rat(1, 2));
  CHECK_THROWS(parse_forms("1;2"));
}

TEST_CASE("record serialization") {
  OutputRecord rec{{1, 1, 1, 1},
                   ExponentPair{1, 3},
                   theta_m({1, 1, 1, 1}),
                   theta_m({3, 3, 1, 1}),
                   "closed_form",
                   "main"};
  json j = record_to_json(rec);
  CHECK(j["exponents"] == json::array({1, 3}));
  CHECK(j["provenance"] == "closed_form");
  CHECK(j["case"] == "main");
  CHECK(derivation_from_json(j["basis"][0]) == rec.t1);
  std::string text = record_to_text(rec);
  CHECK(text.find("exponents = (1, 3)") != std::string::npos);
}
