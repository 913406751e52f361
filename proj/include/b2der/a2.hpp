#pragma once

// Application to the three-line arrangement x, y, x+y: pulling the four-line
// construction back along (x, y) -> (x-y, x+y) yields an explicit member of
// the derivation module, proportional to the known symmetrized basis element.

#include <optional>
#include <utility>
#include <vector>

#include "b2der/closedform.hpp"
#include "b2der/oracle.hpp"

namespace b2der {

// Multiplicity (a, a, b) on x, y, x+y.
struct A2Multiplicity {
  unsigned a = 0, b = 0;

  unsigned sum() const { return 2 * a + b; }
  Multiplicity as_multiplicity() const { return Multiplicity{a, a, b}; }

  friend bool operator==(const A2Multiplicity& p, const A2Multiplicity& q) {
    return p.a == q.a && p.b == q.b;
  }
};

// Degree (2a+b-1)/2 member of the three-line module, built from the
// four-line derivation at (1, b, a, a) by the linear substitution
// x -> x - y, y -> x + y.  Requires b odd and 2a + b = 3 mod 4.
inline Derivation theta_prime(const A2Multiplicity& m) {
  if (m.b % 2 != 1 || (2 * m.a + m.b) % 4 != 3)
    throw HypothesisViolation("needs b odd and 2a + b = 3 mod 4");
  Derivation t = theta_m({1, m.b, m.a, m.a});
  const LinearForm u(1, -1), v(1, 1);  // x - y, x + y
  // With components t = F dx + G dy, the transported derivation is
  // (F + G) o s dx + (G - F) o s dy for s: (x, y) -> (x-y, x+y).
  HomoPoly fs = subst_linear(t.f(), u, v);
  HomoPoly gs = subst_linear(t.g(), u, v);
  return Derivation(add(fs, gs), sub(gs, fs));
}

inline bool a2_membership(const Derivation& theta, const A2Multiplicity& m) {
  return is_member(theta, a2_arrangement(), m.as_multiplicity());
}

// The constant c with t1 = c * t2, if the derivations are proportional.
inline std::optional<Rational> scalar_ratio(const Derivation& t1,
                                            const Derivation& t2) {
  if (t1.degree() != t2.degree())
    throw DegreeMismatch("scalar ratio needs equal degrees");
  if (t2.is_zero()) return t1.is_zero() ? std::optional<Rational>(1)
                                        : std::nullopt;
  const RationalVector v1 = detail::flat_from_derivation(t1);
  const RationalVector v2 = detail::flat_from_derivation(t2);
  Eigen::Index lead = 0;
  while (v2(lead) == 0) {
    if (v1(lead) != 0) return std::nullopt;
    ++lead;
  }
  Rational c = v1(lead) / v2(lead);
  for (Eigen::Index i = lead; i < v1.size(); ++i)
    if (v1(i) != c * v2(i)) return std::nullopt;
  return c;
}

struct SymmetrizedFixture {
  A2Multiplicity m;
  Derivation theta_sigma;
  Rational ratio;  // theta_sigma = ratio * theta_prime(m)
};

namespace detail {

inline Derivation fixture_derivation(std::vector<long> f, std::vector<long> g) {
  const Eigen::Index d = static_cast<Eigen::Index>(f.size()) - 1;
  HomoPoly fp(d), gp(d);
  for (Eigen::Index i = 0; i <= d; ++i) {
    fp.coeff(i) = f[static_cast<std::size_t>(i)];
    gp.coeff(i) = g[static_cast<std::size_t>(i)];
  }
  return Derivation(std::move(fp), std::move(gp));
}

}  // namespace detail

// Known symmetrized basis elements theta_Sigma for (a, a, b), with the exact
// proportionality constants against theta_prime.
inline std::vector<SymmetrizedFixture> symmetrized_fixtures() {
  using detail::fixture_derivation;
  std::vector<SymmetrizedFixture> fx;
  fx.push_back({{2, 3},
                fixture_derivation({1, 3, 0, 0}, {0, 0, 3, 1}),
                Rational(-3, 2)});
  fx.push_back({{3, 5},
                fixture_derivation({1, 5, 10, 0, 0, 0}, {0, 0, 0, 10, 5, 1}),
                Rational(15, 2)});
  fx.push_back({{4, 3},
                fixture_derivation({6, 10, 0, 0, 0, 0}, {0, 0, 0, 0, 10, 6}),
                Rational(15)});
  fx.push_back({{4, 7},
                fixture_derivation({1, 7, 21, 35, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 35, 21, 7, 1}),
                Rational(-105, 2)});
  fx.push_back({{5, 5},
                fixture_derivation({50, 175, 175, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 175, 175, 50}),
                Rational(-2625, 4)});
  fx.push_back({{5, 9},
                fixture_derivation({1, 9, 36, 84, 126, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 126, 84, 36, 9, 1}),
                Rational(945, 2)});
  fx.push_back({{6, 3},
                fixture_derivation({15, 21, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 21, 15}),
                Rational(-315, 4)});
  fx.push_back({{6, 7},
                fixture_derivation({490, 2646, 5292, 4116, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 4116, 5292, 2646, 490}),
                Rational(46305)});
  fx.push_back({{6, 11},
                fixture_derivation(
                    {1, 11, 55, 165, 330, 462, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 462, 330, 165, 55, 11, 1}),
                Rational(-10395, 2)});
  fx.push_back({{7, 5},
                fixture_derivation({490, 1470, 1176, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 1176, 1470, 490}),
                Rational(15435)});
  return fx;
}

}  // namespace b2der
