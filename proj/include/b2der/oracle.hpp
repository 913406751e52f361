#pragma once

// Brute-force ground truth: graded pieces of D(A,m) by exact linear algebra.
// A homogeneous derivation of degree d is parameterized by its 2(d+1)
// coefficients; each divisibility condition contributes linear constraints,
// and the graded piece is the nullspace, computed fraction-free.

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "b2der/arrangement.hpp"
#include "b2der/errors.hpp"

namespace b2der {

struct GradedPieceBasis {
  Eigen::Index degree = 0;
  std::vector<Derivation> basis;

  Eigen::Index dimension() const {
    return static_cast<Eigen::Index>(basis.size());
  }
};

namespace detail {

// Coordinates of x^{d-j} y^j in the frame where l is the second coordinate;
// entry i is the component of l-degree i.  A polynomial is divisible by l^k
// iff entries 0..k-1 of its frame coordinates vanish.  For b != 0 this is
// the binomial expansion of ((t - a x)/b)^j; for l = a x the monomial lands
// on a single frame coordinate.
inline RationalVector monomial_frame_coords(const LinearForm& l,
                                            Eigen::Index d, Eigen::Index j) {
  RationalVector col = RationalVector::Zero(d + 1);
  if (l.b() != 0) {
    Rational bpow = 1;
    for (Eigen::Index t = 0; t < j; ++t) bpow *= l.b();
    Rational binom = 1;  // C(j,i)
    Rational apow = 1;   // (-a)^{j-i}, built downward from (-a)^j
    for (Eigen::Index t = 0; t < j; ++t) apow *= -l.a();
    for (Eigen::Index i = 0; i <= j; ++i) {
      col(i) = binom * apow / bpow;
      if (i < j) {
        binom *= Rational(j - i);
        binom /= Rational(i + 1);
        if (l.a() != 0)
          apow /= -l.a();
        else
          apow = (i + 1 == j) ? Rational(1) : Rational(0);
      }
    }
  } else {
    Rational c = 1;
    for (Eigen::Index t = 0; t < d - j; ++t) c /= l.a();
    col(d - j) = c;
  }
  return col;
}

// Fraction-free (Bareiss) row echelon over the integers, in place.
// Returns the pivot columns in order.
inline std::vector<Eigen::Index> bareiss_echelon(IntegerMatrix& a) {
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) a.row(pr).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Nullspace basis of an integer matrix, one vector per free column, each
// scaled so its first nonzero coordinate is 1.
inline std::vector<RationalVector> integer_nullspace(IntegerMatrix a) {
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> pivots = bareiss_echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v = RationalVector::Zero(cols);
    v(free_col) = 1;
    for (Eigen::Index r = static_cast<Eigen::Index>(pivots.size()) - 1; r >= 0;
         --r) {
      const Eigen::Index pc = pivots[r];
      if (pc > free_col) continue;
      Rational acc = 0;
      for (Eigen::Index j = pc + 1; j <= free_col; ++j)
        if (v(j) != 0) acc += Rational(a(r, j)) * v(j);
      v(pc) = -acc / Rational(a(r, pc));
    }
    Eigen::Index lead = 0;
    while (v(lead) == 0) ++lead;
    if (v(lead) != 1) v /= v(lead);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Derivation derivation_from_flat(const RationalVector& v,
                                       Eigen::Index d) {
  return Derivation(HomoPoly(d, v.head(d + 1)), HomoPoly(d, v.tail(d + 1)));
}

inline RationalVector flat_from_derivation(const Derivation& theta) {
  const Eigen::Index d = theta.degree();
  RationalVector v(2 * (d + 1));
  v.head(d + 1) = theta.f().coeffs();
  v.tail(d + 1) = theta.g().coeffs();
  return v;
}

// Incremental rational row reducer for span membership tests.
class SpanReducer {
 public:
  // Reduces v against the rows seen so far; returns the residue.
  RationalVector reduce(RationalVector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v(lead_[r]);
      if (c != 0) v -= c * rows_[r];
    }
    return v;
  }

  // Returns false if v was already in the span.
  bool insert(const RationalVector& v) {
    RationalVector res = reduce(v);
    Eigen::Index lead = -1;
    for (Eigen::Index j = 0; j < res.size(); ++j)
      if (res(j) != 0) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    res /= res(lead);
    rows_.push_back(std::move(res));
    lead_.push_back(lead);
    return true;
  }

 private:
  std::vector<RationalVector> rows_;
  std::vector<Eigen::Index> lead_;
};

}  // namespace detail

// Exact rational basis of the degree-d homogeneous piece of D(A,m).
inline GradedPieceBasis graded_piece(const Multiarrangement& arr,
                                     const Multiplicity& m, Eigen::Index d) {
  if (arr.size() != m.size())
    throw LengthMismatch("multiplicity length does not match arrangement");
  const Eigen::Index n = d + 1;

  Eigen::Index rows = 0;
  for (std::size_t i = 0; i < arr.size(); ++i)
    rows += std::min<Eigen::Index>(m[i], n);

  RationalMatrix constraints = RationalMatrix::Zero(rows, 2 * n);
  Eigen::Index row0 = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Eigen::Index k = std::min<Eigen::Index>(m[i], n);
    if (k == 0) continue;
    const LinearForm& l = arr.form(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      RationalVector col = detail::monomial_frame_coords(l, d, j).head(k);
      constraints.block(row0, j, k, 1) = l.a() * col;
      constraints.block(row0, n + j, k, 1) = l.b() * col;
    }
    row0 += k;
  }

  // Clear denominators row by row, then eliminate fraction-free.
  IntegerMatrix int_constraints(rows, 2 * n);
  for (Eigen::Index r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (Eigen::Index c = 0; c < 2 * n; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              mpq_denref(constraints(r, c).get_mpq_t()));
    for (Eigen::Index c = 0; c < 2 * n; ++c) {
      Rational scaled = constraints(r, c) * Rational(lcm);
      int_constraints(r, c) = scaled.get_num();
    }
  }

  GradedPieceBasis piece;
  piece.degree = d;
  for (const RationalVector& v : detail::integer_nullspace(int_constraints))
    piece.basis.push_back(detail::derivation_from_flat(v, d));
  return piece;
}

// exp(A,m): lowest degree with a nonzero member, and its complement to |m|.
inline ExponentPair exponents(const Multiarrangement& arr,
                              const Multiplicity& m) {
  const unsigned total = m.sum();
  for (unsigned d = 0; d <= total; ++d) {
    if (graded_piece(arr, m, d).dimension() > 0) {
      unsigned e1 = d, e2 = total - d;
      if (e1 > e2) std::swap(e1, e2);
      return ExponentPair{e1, e2};
    }
  }
  // The degree-|m| piece always contains the product of all form powers
  // times dx, so the search cannot exhaust.
  throw std::logic_error("exponent search exhausted");
}

// Dimensions of the graded pieces for d = 0..d_max.
inline std::vector<Eigen::Index> graded_dimension_profile(
    const Multiarrangement& arr, const Multiplicity& m, Eigen::Index d_max) {
  std::vector<Eigen::Index> dims;
  dims.reserve(d_max + 1);
  for (Eigen::Index d = 0; d <= d_max; ++d)
    dims.push_back(graded_piece(arr, m, d).dimension());
  return dims;
}

namespace detail {

// First degree-e2 member outside S_{e2-e1} * theta1, in the canonical order
// of the graded-piece basis.
inline Derivation second_generator(const Multiarrangement& arr,
                                   const Multiplicity& m,
                                   const Derivation& theta1, unsigned e2) {
  const Eigen::Index s = static_cast<Eigen::Index>(e2) - theta1.degree();
  detail::SpanReducer span;
  for (Eigen::Index j = 0; j <= s; ++j) {
    Derivation mult(mul(monomial(s, j, 1), theta1.f()),
                    mul(monomial(s, j, 1), theta1.g()));
    span.insert(detail::flat_from_derivation(mult));
  }
  for (const Derivation& cand : graded_piece(arr, m, e2).basis)
    if (span.insert(detail::flat_from_derivation(cand))) return cand;
  throw std::logic_error("no independent generator at the upper exponent");
}

}  // namespace detail

// A homogeneous basis computed from scratch: minimal-degree member plus the
// first upper-degree member independent of it over S.  The pair passes
// saito_check.
inline std::pair<Derivation, Derivation> oracle_basis(
    const Multiarrangement& arr, const Multiplicity& m) {
  const ExponentPair e = exponents(arr, m);
  Derivation theta1 = graded_piece(arr, m, e.e1).basis.front();
  Derivation theta2 = detail::second_generator(arr, m, theta1, e.e2);
  return {std::move(theta1), std::move(theta2)};
}

// Basis for a non-balanced multiplicity on the four-line arrangement: the
// dominated-degree generator is the product of the other form powers times
// the constant direction annihilating the dominant form.
inline std::tuple<Derivation, Derivation, ExponentPair> non_balanced_basis(
    const Multiarrangement& arr, const Multiplicity& m) {
  if (arr.size() != m.size())
    throw LengthMismatch("multiplicity length does not match arrangement");
  if (is_balanced(m)) throw BalancedInput("multiplicity is balanced");

  std::size_t k = 0;
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] > m[k]) k = i;

  HomoPoly prod = monomial(0, 0, 1);
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (i != k) prod = mul(prod, linpow(arr.form(i), m[i]));

  // eta(alpha_k) = 0 for eta = b_k dx - a_k dy.
  const LinearForm& lk = arr.form(k);
  Derivation theta1(scale(lk.b(), prod), scale(-lk.a(), prod));
  RationalVector flat = detail::flat_from_derivation(theta1);
  Eigen::Index lead = 0;
  while (flat(lead) == 0) ++lead;
  if (flat(lead) != 1) {
    Rational inv = Rational(1) / flat(lead);
    theta1 = Derivation(scale(inv, theta1.f()), scale(inv, theta1.g()));
  }

  Derivation theta2 = detail::second_generator(arr, m, theta1, m[k]);
  return {std::move(theta1), std::move(theta2),
          ExponentPair{m.sum() - m[k], m[k]}};
}

}  // namespace b2der
