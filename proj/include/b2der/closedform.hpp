#pragma once

// Explicit constructions for the four-line arrangement x, y, x-y, x+y:
// the lowest-degree derivation built from double Pochhammer coefficients,
// the two-generator basis it induces, the recursion identities relating
// neighbouring multiplicities, the exponent-difference classification and
// the per-case basis dispatch table.

#include <cstdlib>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "b2der/arrangement.hpp"
#include "b2der/errors.hpp"

namespace b2der {

// (-1)!! = 0!! = 1; n!! = n (n-2)!!.
inline Integer double_factorial(long n) {
  if (n < -1) throw DomainError("double factorial needs n >= -1");
  Integer r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

// <a>^(2,n) = a (a+2) ... (a+2(n-1)); n = 0 gives 1.  a may be negative.
inline Integer double_pochhammer(long a, unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a + 2 * static_cast<long>(i);
  return r;
}

// The four multiplicities in the fixed form order x, y, x-y, x+y.
struct B2Multiplicity {
  unsigned m1 = 0, m2 = 0, m3 = 0, m4 = 0;

  unsigned sum() const { return m1 + m2 + m3 + m4; }
  bool m1_odd() const { return m1 % 2 == 1; }
  bool m2_odd() const { return m2 % 2 == 1; }
  bool sum_div4() const { return sum() % 4 == 0; }
  bool diagonal_equal() const { return m3 == m4; }

  Multiplicity as_multiplicity() const { return Multiplicity{m1, m2, m3, m4}; }

  bool balanced() const { return is_balanced(as_multiplicity()); }

  // 2 m_i <= |m| + 2 for all i: the membership hypothesis, weaker than
  // balanced.
  bool near_balanced() const {
    const unsigned s = sum();
    return 2 * m1 <= s + 2 && 2 * m2 <= s + 2 && 2 * m3 <= s + 2 &&
           2 * m4 <= s + 2;
  }

  friend bool operator==(const B2Multiplicity& a, const B2Multiplicity& b) {
    return a.m1 == b.m1 && a.m2 == b.m2 && a.m3 == b.m3 && a.m4 == b.m4;
  }
};

namespace detail {

struct LaurentTerm {
  Rational c;
  long xe = 0;
  long ye = 0;
};

// One component of the defining sums, as a term list.  Exponents may reach
// -1 when mx = -1; the dispatch table only ever uses such values under a
// monomial prefactor that clears them.  mx is the multiplicity attached to
// the principal variable of this component.
inline std::vector<LaurentTerm> component_terms(long mx, long pochhammer_base,
                                                long d, int sign_offset,
                                                bool x_principal) {
  std::vector<LaurentTerm> terms;
  const long top2 = d - mx;
  if (top2 < 0) return terms;  // zero component by convention
  if (top2 % 2 != 0)
    throw HypothesisViolation("component bound is not an integer");
  const long top = top2 / 2;
  for (long i = 0; i <= top; ++i) {
    Integer num = double_pochhammer(pochhammer_base,
                                    static_cast<unsigned>(top - i));
    Integer den = double_factorial(d - mx - 2 * i) *
                  double_factorial(d - 2 * i) * double_factorial(2 * i);
    Rational c(num, den);
    c.canonicalize();
    if ((i + sign_offset) % 2 != 0) c = -c;
    long pe = d - 2 * i, se = 2 * i;  // principal, secondary exponents
    terms.push_back(x_principal ? LaurentTerm{c, pe, se}
                                : LaurentTerm{c, se, pe});
  }
  return terms;
}

// f and g of the defining sums for (m1, m2, m3, m3); m1, m2 >= -1 odd.
struct ThetaTerms {
  long degree = 0;
  std::vector<LaurentTerm> f, g;
};

inline ThetaTerms theta_terms(long m1, long m2, long m3) {
  if (m1 < -1 || m2 < -1 || m3 < 0)
    throw CaseNotCovered("multiplicity shift out of range");
  const long msum = m1 + m2 + 2 * m3;
  if (std::abs(m1 % 2) != 1 || std::abs(m2 % 2) != 1 || msum % 4 != 0)
    throw HypothesisViolation(
        "needs m1, m2 odd and multiplicity sum divisible by 4");
  ThetaTerms t;
  t.degree = msum / 2 - 1;
  const long base = m1 + m2 - t.degree;
  t.f = component_terms(m1, base, t.degree, 0, true);
  t.g = component_terms(m2, base, t.degree, static_cast<int>(m3 % 2), false);
  return t;
}

inline HomoPoly poly_from_terms(const std::vector<LaurentTerm>& terms,
                                long degree) {
  HomoPoly p(degree);
  for (const LaurentTerm& t : terms) {
    if (t.c == 0) continue;
    if (t.xe < 0 || t.ye < 0)
      throw DomainError("negative exponent in polynomial conversion");
    p.coeff(t.ye) += t.c;
  }
  return p;
}

// prefactor * (f dx - g dy) as a genuine polynomial derivation; throws if a
// negative exponent survives the prefactor.
inline Derivation laurent_theta_times(const HomoPoly& prefactor,
                                      const ThetaTerms& t) {
  const long degree = t.degree + prefactor.degree();
  std::vector<LaurentTerm> fterms, gterms;
  for (Eigen::Index i = 0; i <= prefactor.degree(); ++i) {
    const Rational& pc = prefactor.coeff(i);
    if (pc == 0) continue;
    const long pxe = prefactor.degree() - i, pye = i;
    for (const LaurentTerm& ft : t.f)
      fterms.push_back({pc * ft.c, ft.xe + pxe, ft.ye + pye});
    for (const LaurentTerm& gt : t.g)
      gterms.push_back({-pc * gt.c, gt.xe + pxe, gt.ye + pye});
  }
  return Derivation(poly_from_terms(fterms, degree),
                    poly_from_terms(gterms, degree));
}

inline Derivation theta_of(long m1, long m2, long m3) {
  return laurent_theta_times(monomial(0, 0, 1), theta_terms(m1, m2, m3));
}

}  // namespace detail

// The lowest-degree derivation of the main construction; requires m3 = m4,
// m1, m2 odd and |m| divisible by 4.  Degree is |m|/2 - 1.
inline Derivation theta_m(const B2Multiplicity& m) {
  if (!m.diagonal_equal())
    throw HypothesisViolation("needs m3 = m4");
  return detail::theta_of(m.m1, m.m2, m.m3);
}

// Convenience: f and g of the defining sums (theta_m is f dx - g dy).
inline std::pair<HomoPoly, HomoPoly> theta_m_components(
    const B2Multiplicity& m) {
  Derivation t = theta_m(m);
  return {t.f(), neg(t.g())};
}

// The two-generator basis (theta_m, theta_{m''}) with m'' = m + (2,2,0,0);
// exponents (|m|/2 - 1, |m|/2 + 1).  Requires m balanced on top of the
// theta_m hypotheses.
inline std::tuple<Derivation, Derivation, ExponentPair> main_basis(
    const B2Multiplicity& m) {
  if (!m.balanced())
    throw HypothesisViolation("main basis needs a balanced multiplicity");
  Derivation t1 = theta_m(m);
  Derivation t2 = theta_m({m.m1 + 2, m.m2 + 2, m.m3, m.m4});
  const unsigned half = m.sum() / 2;
  return {std::move(t1), std::move(t2), ExponentPair{half - 1, half + 1}};
}

// Scalars of the two recursion identities.  Both flavours satisfy
// b0 = (k - d - 2) d0 with k the principal multiplicity.
struct RecursionScalars {
  Rational b0, d0, e;
  unsigned d = 0;  // |m|/2 - 1
};

inline RecursionScalars lemma_B_scalars(const B2Multiplicity& m) {
  if (m.m1 != 1 || !m.m2_odd() || !m.sum_div4() || !m.diagonal_equal() ||
      !m.balanced())
    throw HypothesisViolation("recursion on the diagonal needs m = (1, odd, k, k), |m| in 4Z, balanced");
  const long d = m.sum() / 2 - 1;
  const long m2 = m.m2, m3 = m.m3;
  const int sign = ((d - m2) / 2 + m3) % 2 == 0 ? 1 : -1;
  Rational denom_near(double_factorial(m2) * double_factorial(d - m2));
  Rational denom_far(double_factorial(m2) * double_factorial(d + 2 - m2));
  RecursionScalars s;
  s.d = static_cast<unsigned>(d);
  s.b0 = Rational(sign) / denom_near;
  s.d0 = Rational(-sign) / denom_far;
  s.e = Rational(-sign * (m2 - 2 * d - 3)) / denom_far;
  s.b0.canonicalize();
  s.d0.canonicalize();
  s.e.canonicalize();
  return s;
}

inline RecursionScalars lemma_D_scalars(const B2Multiplicity& m) {
  if (!m.m1_odd() || !m.m2_odd() || !m.sum_div4() || !m.diagonal_equal() ||
      !m.balanced())
    throw HypothesisViolation("recursion off the diagonal needs m1, m2 odd, m3 = m4, |m| in 4Z, balanced");
  const long d = m.sum() / 2 - 1;
  const long m1 = m.m1, m2 = m.m2;
  const int sign = ((d - m1) / 2) % 2 == 0 ? 1 : -1;
  Rational denom_near(double_factorial(m1) * double_factorial(d - m1));
  Rational denom_far(double_factorial(m1) * double_factorial(d + 2 - m1));
  RecursionScalars s;
  s.d = static_cast<unsigned>(d);
  s.b0 = Rational(sign) / denom_near;
  s.d0 = Rational(-sign) / denom_far;
  s.e = Rational(sign * (m2 + 2)) / denom_far;
  s.b0.canonicalize();
  s.d0.canonicalize();
  s.e.canonicalize();
  return s;
}

namespace detail {

inline Derivation dscale(const Rational& c, const Derivation& t) {
  return Derivation(scale(c, t.f()), scale(c, t.g()));
}

inline Derivation dmul(const HomoPoly& p, const Derivation& t) {
  return Derivation(mul(p, t.f()), mul(p, t.g()));
}

inline Derivation dsub(const Derivation& a, const Derivation& b) {
  return Derivation(sub(a.f(), b.f()), sub(a.g(), b.g()));
}

}  // namespace detail

// e theta_{m''} = b0 theta_{m'} - d0 (x^2-y^2) theta_m with
// m' = m + (0,0,2,2), m'' = m + (0,2,1,1); exact polynomial identity.
inline bool check_lemma_B(const B2Multiplicity& m) {
  const RecursionScalars s = lemma_B_scalars(m);
  Derivation tm = theta_m(m);
  Derivation tp = theta_m({m.m1, m.m2, m.m3 + 2, m.m4 + 2});
  Derivation tpp = theta_m({m.m1, m.m2 + 2, m.m3 + 1, m.m4 + 1});
  HomoPoly a3a4(2);
  a3a4.coeff(0) = 1;
  a3a4.coeff(2) = -1;  // x^2 - y^2
  Derivation lhs = detail::dsub(detail::dscale(s.b0, tp),
                                detail::dscale(s.d0, detail::dmul(a3a4, tm)));
  return lhs == detail::dscale(s.e, tpp);
}

// e theta_{m''} = b0 theta_{m'} - d0 y^2 theta_m with
// m' = m + (0,4,0,0), m'' = m + (2,2,0,0); exact polynomial identity.
inline bool check_lemma_D(const B2Multiplicity& m) {
  const RecursionScalars s = lemma_D_scalars(m);
  Derivation tm = theta_m(m);
  Derivation tp = theta_m({m.m1, m.m2 + 4, m.m3, m.m4});
  Derivation tpp = theta_m({m.m1 + 2, m.m2 + 2, m.m3, m.m4});
  HomoPoly y2(2);
  y2.coeff(2) = 1;
  Derivation lhs = detail::dsub(detail::dscale(s.b0, tp),
                                detail::dscale(s.d0, detail::dmul(y2, tm)));
  return lhs == detail::dscale(s.e, tpp);
}

// None of the four forms divides theta_m (both components simultaneously).
inline bool check_cor_P(const B2Multiplicity& m) {
  if (!m.m1_odd() || !m.m2_odd() || !m.sum_div4() || !m.diagonal_equal() ||
      !m.balanced())
    throw HypothesisViolation("needs m1, m2 odd, m3 = m4, |m| in 4Z, balanced");
  Derivation t = theta_m(m);
  const Multiarrangement arr = b2_arrangement();
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (divides_pow(arr.form(i), 1, t.f()) &&
        divides_pow(arr.form(i), 1, t.g()))
      return false;
  return true;
}

// Predicted difference of exponents for a balanced multiplicity with
// |m1 - m2| >= |m3 - m4|, following the parity/residue case table (cases are
// stated up to the swap symmetries, which the caller-facing function
// normalizes away because the predicate is symmetric).
inline unsigned exponent_difference(const B2Multiplicity& m) {
  if (!m.balanced())
    throw HypothesisViolation("exponent difference table needs balanced m");
  const long d12 = std::labs(static_cast<long>(m.m1) - m.m2);
  const long d34 = std::labs(static_cast<long>(m.m3) - m.m4);
  if (d12 < d34)
    throw CaseNotCovered("needs |m1 - m2| >= |m3 - m4|");
  const bool even_sum = m.sum() % 2 == 0;
  const bool both_odd = m.m1_odd() && m.m2_odd();
  if (even_sum) {
    if (d34 == 0) {
      if (both_odd && m.sum_div4()) return 2;
      return 0;
    }
    if (d34 == 1) return 0;
    if (d34 == 2 && both_odd) return 0;
  } else {
    if (d34 <= 2) return 1;
    if (d34 == 3 && both_odd) return 1;
  }
  throw CaseNotCovered("multiplicity outside the case table");
}

namespace detail {

// Pushforward along (x,y) -> (y,x): swaps the roles of m1 and m2.
inline Derivation swap_xy(const Derivation& t) {
  const Eigen::Index d = t.degree();
  HomoPoly f(d), g(d);
  for (Eigen::Index i = 0; i <= d; ++i) {
    f.coeff(i) = t.g().coeff(d - i);
    g.coeff(i) = t.f().coeff(d - i);
  }
  return Derivation(std::move(f), std::move(g));
}

// Pushforward along (x,y) -> (x,-y): swaps the roles of m3 and m4.
inline Derivation negate_y(const Derivation& t) {
  const Eigen::Index d = t.degree();
  HomoPoly f(d), g(d);
  for (Eigen::Index i = 0; i <= d; ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    f.coeff(i) = sign * t.f().coeff(i);
    g.coeff(i) = -sign * t.g().coeff(i);
  }
  return Derivation(std::move(f), std::move(g));
}

struct CaseBasis {
  Derivation t1, t2;
  std::string case_id;
};

inline HomoPoly form_x() { return monomial(1, 0, 1); }
inline HomoPoly form_y() { return monomial(1, 1, 1); }
inline HomoPoly form_xpy() {
  HomoPoly p(1);
  p.coeff(0) = 1;
  p.coeff(1) = 1;
  return p;
}
inline HomoPoly form_xmy() {
  HomoPoly p(1);
  p.coeff(0) = 1;
  p.coeff(1) = -1;
  return p;
}

// The dispatch table in its printed normalization: gap = m4 - m3 in {0,1,2},
// residue |m| mod 4, parities placed as (m1 even, m2 odd) where one of each
// is required.  Returns nothing when m matches no row.
inline std::optional<CaseBasis> case_table_basis(const B2Multiplicity& m) {
  const long g = static_cast<long>(m.m4) - m.m3;
  const unsigned r = m.sum() % 4;
  const bool o1 = m.m1_odd(), o2 = m.m2_odd();
  const long m1 = m.m1, m2 = m.m2, m3 = m.m3, m4 = m.m4;
  auto bare = [&](long a, long b, long c) {
    return laurent_theta_times(monomial(0, 0, 1), theta_terms(a, b, c));
  };
  auto with = [&](const HomoPoly& pre, long a, long b, long c) {
    return laurent_theta_times(pre, theta_terms(a, b, c));
  };
  const HomoPoly x = form_x(), y = form_y(), xpy = form_xpy(), xmy = form_xmy();
  try {
    if (g == 0) {
      if (r == 0 && o1 && o2)
        return CaseBasis{bare(m1, m2, m3), bare(m1 + 2, m2 + 2, m3),
                         "g0-r0-odd"};
      if (r == 0 && !o1 && !o2)
        return CaseBasis{with(x, m1 - 1, m2 + 1, m3),
                         with(y, m1 + 1, m2 - 1, m3), "g0-r0-even"};
      if (r == 1 && !o1 && o2)
        return CaseBasis{with(x, m1 - 1, m2, m3), bare(m1 + 1, m2, m3 + 1),
                         "g0-r1"};
      if (r == 2 && o1 && o2)
        return CaseBasis{bare(m1 + 2, m2, m3), bare(m1, m2 + 2, m3),
                         "g0-r2-odd"};
      if (r == 2 && !o1 && !o2)
        return CaseBasis{bare(m1 + 1, m2 + 1, m3),
                         with(mul(x, y), m1 - 1, m2 - 1, m3), "g0-r2-even"};
      if (r == 3 && !o1 && o2)
        return CaseBasis{bare(m1 + 1, m2, m3), with(x, m1 - 1, m2, m3 + 1),
                         "g0-r3"};
    } else if (g == 1) {
      if (r == 0 && !o1 && o2)
        return CaseBasis{with(x, m1 - 1, m2, m3 + 1),
                         with(xpy, m1 + 1, m2, m4 - 1), "g1-r0"};
      if (r == 1 && o1 && o2)
        return CaseBasis{with(xpy, m1, m2, m3), bare(m1 + 2, m2, m3 + 1),
                         "g1-r1"};
      if (r == 2 && !o1 && o2)
        return CaseBasis{bare(m1 + 1, m2, m3 + 1),
                         with(mul(x, xpy), m1 - 1, m2, m4 - 1), "g1-r2"};
      if (r == 3 && o1 && o2)
        return CaseBasis{bare(m1, m2, m3 + 1),
                         with(mul(xmy, mul(xpy, xpy)), m1, m2, m3 - 1),
                         "g1-r3"};
    } else if (g == 2) {
      if (r == 2 && o1 && o2)
        return CaseBasis{bare(m1, m2, m3 + 2),
                         with(mul(xpy, xpy), m1, m2, m3), "g2-r2"};
    }
  } catch (const CaseNotCovered&) {
    // A shifted multiplicity fell out of range; the row does not apply.
  }
  return std::nullopt;
}

}  // namespace detail

struct CorQBasis {
  Derivation t1, t2;
  std::string case_id;
};

// Basis from the dispatch table for a balanced multiplicity, after
// normalizing by the two swap symmetries and pulling the result back.
inline CorQBasis cor_Q_basis(const B2Multiplicity& m) {
  if (!m.balanced())
    throw HypothesisViolation("case-table basis needs a balanced multiplicity");
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int s2 = 0; s2 < 2; ++s2) {
      B2Multiplicity n = m;
      if (s1) std::swap(n.m1, n.m2);
      if (s2) std::swap(n.m3, n.m4);
      std::optional<detail::CaseBasis> res = detail::case_table_basis(n);
      if (!res) continue;
      Derivation t1 = std::move(res->t1), t2 = std::move(res->t2);
      if (s2) {
        t1 = detail::negate_y(t1);
        t2 = detail::negate_y(t2);
      }
      if (s1) {
        t1 = detail::swap_xy(t1);
        t2 = detail::swap_xy(t2);
      }
      return CorQBasis{std::move(t1), std::move(t2), res->case_id};
    }
  }
  throw CaseNotCovered("multiplicity outside the basis dispatch table");
}

}  // namespace b2der
