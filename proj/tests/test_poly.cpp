#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "b2der/poly.hpp"

using namespace b2der;

namespace {

HomoPoly random_poly(std::mt19937& rng, Eigen::Index degree) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  HomoPoly p(degree);
  for (Eigen::Index i = 0; i <= degree; ++i) p.coeff(i) = rat(num(rng), den(rng));
  return p;
}

HomoPoly from_list(std::initializer_list<long> cs) {
  HomoPoly p(static_cast<Eigen::Index>(cs.size()) - 1);
  Eigen::Index i = 0;
  for (long c : cs) p.coeff(i++) = c;
  return p;
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/6") == rat(1, 2));
  CHECK(parse_rational("-7") == rat(-7));
  CHECK(to_string(rat(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("linear form invariant") {
  CHECK_THROWS_AS(LinearForm(0, 0), DomainError);
  CHECK(LinearForm(1, -1).proportional_to(LinearForm(-2, 2)));
  CHECK(!LinearForm(1, -1).proportional_to(LinearForm(1, 1)));
}

TEST_CASE("add") {
  CHECK(add(monomial(2, 0, 1), monomial(2, 0, -1)).is_zero());
  CHECK(add(from_list({1, 1}), from_list({1, -1})) == from_list({2, 0}));
  CHECK(add(HomoPoly(3, (RationalVector(4) << rat(1, 2), 0, 0, -1).finished()),
            HomoPoly(3, (RationalVector(4) << rat(1, 2), 0, 0, 1).finished())) ==
        monomial(3, 0, 1));
  CHECK_THROWS_AS(add(HomoPoly(1), HomoPoly(2)), DegreeMismatch);
}

TEST_CASE("mul") {
  CHECK(mul(from_list({1, -1}), from_list({1, 1})) == from_list({1, 0, -1}));
  CHECK(mul(monomial(1, 0, 1), HomoPoly(3)) == HomoPoly(4));
  CHECK(mul(from_list({1, 1}), from_list({1, 1})) == from_list({1, 2, 1}));
}

TEST_CASE("linpow") {
  CHECK(linpow(LinearForm(1, -1), 2) == from_list({1, -2, 1}));
  CHECK(linpow(LinearForm(1, 1), 0) == monomial(0, 0, 1));
  CHECK(linpow(LinearForm(1, 0), 5) == monomial(5, 0, 1));
}

TEST_CASE("linpow additivity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = coef(rng), b = coef(rng);
    if (a == 0 && b == 0) a = 1;
    LinearForm l(a, b);
    for (Eigen::Index j = 0; j <= 8; ++j)
      for (Eigen::Index k = 0; j + k <= 8; ++k)
        CHECK(linpow(l, j + k) == mul(linpow(l, j), linpow(l, k)));
  }
}

TEST_CASE("rem_mod_linpow") {
  CHECK(rem_mod_linpow(from_list({1, 0, -1}), LinearForm(1, -1), 1).is_zero());
  CHECK(rem_mod_linpow(monomial(2, 0, 1), LinearForm(0, 1), 1) ==
        monomial(2, 0, 1));
  CHECK(rem_mod_linpow(from_list({1, 0, -1, 0}), LinearForm(1, 1), 1).is_zero());
  CHECK(divides_pow(LinearForm(1, 1), 2, mul(from_list({1, 2, 1}),
                                             from_list({3, 0, 1}))));
  CHECK(!divides_pow(LinearForm(1, 1), 3, mul(from_list({1, 2, 1}),
                                              from_list({3, 0, 1}))));
}

TEST_CASE("rem_mod_linpow of exact multiples vanishes") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a = coef(rng), b = coef(rng);
    if (a == 0 && b == 0) b = 2;
    LinearForm l(a, b);
    for (Eigen::Index k = 0; k <= 6; ++k) {
      HomoPoly p = random_poly(rng, 3);
      CHECK(rem_mod_linpow(mul(p, linpow(l, k)), l, k).is_zero());
    }
  }
}

TEST_CASE("rem_mod_linpow decomposition p = q*l^k + r") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    HomoPoly p = random_poly(rng, 6);
    LinearForm l(2, -3);
    for (Eigen::Index k = 1; k <= 4; ++k) {
      HomoPoly r = rem_mod_linpow(p, l, k);
      // p - r must be divisible by l^k.
      CHECK(divides_pow(l, k, sub(p, r)));
    }
  }
}

TEST_CASE("subst_linear") {
  CHECK(subst_linear(monomial(2, 1, 1), LinearForm(1, -1), LinearForm(1, 1)) ==
        from_list({1, 0, -1}));
  CHECK(subst_linear(monomial(2, 0, 1), LinearForm(1, 0), LinearForm(0, 1)) ==
        monomial(2, 0, 1));
  CHECK(subst_linear(monomial(3, 0, 1), LinearForm(1, 1), LinearForm(1, 0)) ==
        from_list({1, 3, 3, 1}));
}

TEST_CASE("subst_linear identity substitution") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    HomoPoly p = random_poly(rng, 7);
    CHECK(subst_linear(p, LinearForm(1, 0), LinearForm(0, 1)) == p);
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    HomoPoly p = random_poly(rng, 3), q = random_poly(rng, 3),
             r = random_poly(rng, 3);
    CHECK(add(p, q) == add(q, p));
    CHECK(add(add(p, q), r) == add(p, add(q, r)));
    CHECK(mul(p, q) == mul(q, p));
    CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
    CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
  }
}

TEST_CASE("text rendering") {
  HomoPoly p(5);
  p.coeff(0) = rat(1, 10);
  p.coeff(2) = rat(-1, 6);
  CHECK(to_string(p) == "1/10*x^5 - 1/6*x^3*y^2");
  CHECK(to_string(HomoPoly(2)) == "0");
  CHECK(to_string(from_list({1, 1})) == "x + y");
}
