#pragma once

// Homogeneous bivariate polynomials over the rationals, with the linear-form
// operations everything else is built from.  A polynomial of degree d is a
// dense vector c_0..c_d with c_i the coefficient of x^{d-i} y^i; the zero
// polynomial carries its degree as part of the value.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "b2der/errors.hpp"
#include "b2der/rational.hpp"

namespace b2der {

class LinearForm {
 public:
  LinearForm(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0 && b_ == 0)
      throw DomainError("linear form must be nonzero");
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool proportional_to(const LinearForm& other) const {
    return a_ * other.b_ == b_ * other.a_;
  }

 private:
  Rational a_, b_;
};

class HomoPoly {
 public:
  // Zero polynomial of the given degree.
  explicit HomoPoly(Eigen::Index degree)
      : degree_(degree), coeffs_(RationalVector::Zero(degree + 1)) {
    if (degree < 0) throw DomainError("negative degree");
  }

  HomoPoly(Eigen::Index degree, RationalVector coeffs)
      : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw DomainError("negative degree");
    if (coeffs_.size() != degree_ + 1)
      throw DegreeMismatch("coefficient count does not match degree");
  }

  Eigen::Index degree() const { return degree_; }

  // Coefficient of x^{degree-i} y^i.
  const Rational& coeff(Eigen::Index i) const { return coeffs_(i); }
  Rational& coeff(Eigen::Index i) { return coeffs_(i); }

  const RationalVector& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (Eigen::Index i = 0; i <= degree_; ++i)
      if (coeffs_(i) != 0) return false;
    return true;
  }

  friend bool operator==(const HomoPoly& p, const HomoPoly& q) {
    return p.degree_ == q.degree_ && p.coeffs_ == q.coeffs_;
  }
  friend bool operator!=(const HomoPoly& p, const HomoPoly& q) {
    return !(p == q);
  }

 private:
  Eigen::Index degree_;
  RationalVector coeffs_;
};

// c * x^{degree-yexp} y^{yexp}
inline HomoPoly monomial(Eigen::Index degree, Eigen::Index yexp,
                         const Rational& c) {
  HomoPoly p(degree);
  p.coeff(yexp) = c;
  return p;
}

inline HomoPoly add(const HomoPoly& p, const HomoPoly& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot add polynomials of different degrees");
  return HomoPoly(p.degree(), p.coeffs() + q.coeffs());
}

inline HomoPoly sub(const HomoPoly& p, const HomoPoly& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot subtract polynomials of different degrees");
  return HomoPoly(p.degree(), p.coeffs() - q.coeffs());
}

inline HomoPoly neg(const HomoPoly& p) {
  return HomoPoly(p.degree(), (-p.coeffs()).eval());
}

inline HomoPoly scale(const Rational& c, const HomoPoly& p) {
  return HomoPoly(p.degree(), (c * p.coeffs()).eval());
}

// Exact convolution; degrees add.
inline HomoPoly mul(const HomoPoly& p, const HomoPoly& q) {
  HomoPoly r(p.degree() + q.degree());
  for (Eigen::Index i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    for (Eigen::Index j = 0; j <= q.degree(); ++j)
      r.coeff(i + j) += p.coeff(i) * q.coeff(j);
  }
  return r;
}

// (a x + b y)^k by the binomial theorem; k = 0 gives the constant 1.
inline HomoPoly linpow(const LinearForm& l, Eigen::Index k) {
  HomoPoly r = monomial(0, 0, 1);
  HomoPoly base(1);
  base.coeff(0) = l.a();
  base.coeff(1) = l.b();
  for (Eigen::Index i = 0; i < k; ++i) r = mul(r, base);
  return r;
}

// p(u(x,y), v(x,y)); exact expansion, same degree.
inline HomoPoly subst_linear(const HomoPoly& p, const LinearForm& u,
                             const LinearForm& v) {
  const Eigen::Index d = p.degree();
  std::vector<HomoPoly> upow, vpow;
  upow.reserve(d + 1);
  vpow.reserve(d + 1);
  upow.push_back(monomial(0, 0, 1));
  vpow.push_back(monomial(0, 0, 1));
  HomoPoly ub(1), vb(1);
  ub.coeff(0) = u.a();
  ub.coeff(1) = u.b();
  vb.coeff(0) = v.a();
  vb.coeff(1) = v.b();
  for (Eigen::Index i = 1; i <= d; ++i) {
    upow.push_back(mul(upow.back(), ub));
    vpow.push_back(mul(vpow.back(), vb));
  }
  HomoPoly r(d);
  for (Eigen::Index i = 0; i <= d; ++i) {
    if (p.coeff(i) == 0) continue;
    r = add(r, scale(p.coeff(i), mul(upow[d - i], vpow[i])));
  }
  return r;
}

// Remainder of p modulo l^k: change coordinates so l becomes the second
// coordinate, drop the part of l-degree >= k, change back.  The result r
// satisfies p = q*l^k + r and is zero exactly when l^k divides p.
inline HomoPoly rem_mod_linpow(const HomoPoly& p, const LinearForm& l,
                               Eigen::Index k) {
  const Eigen::Index d = p.degree();
  if (k == 0) return HomoPoly(d);
  HomoPoly pf(0);
  if (l.b() != 0) {
    // x stays, y -> (t - a x)/b with t the new second coordinate.
    pf = subst_linear(p, LinearForm(1, 0),
                      LinearForm(-l.a() / l.b(), Rational(1) / l.b()));
  } else {
    // y becomes the free coordinate, t = a x.
    pf = subst_linear(p, LinearForm(0, Rational(1) / l.a()), LinearForm(1, 0));
  }
  HomoPoly trunc(d);
  for (Eigen::Index i = 0; i <= d && i < k; ++i) trunc.coeff(i) = pf.coeff(i);
  if (l.b() != 0)
    return subst_linear(trunc, LinearForm(1, 0), LinearForm(l.a(), l.b()));
  return subst_linear(trunc, LinearForm(0, 1), LinearForm(l.a(), 0));
}

inline bool divides_pow(const LinearForm& l, Eigen::Index k,
                        const HomoPoly& p) {
  return rem_mod_linpow(p, l, k).is_zero();
}

// Canonical text rendering: monomials in decreasing x-exponent, coefficients
// as "p/q".
inline std::string to_string(const HomoPoly& p) {
  std::ostringstream out;
  bool first = true;
  const Eigen::Index d = p.degree();
  for (Eigen::Index i = 0; i <= d; ++i) {
    const Rational& c = p.coeff(i);
    if (c == 0) continue;
    Rational ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Eigen::Index xe = d - i, ye = i;
    const bool has_var = xe > 0 || ye > 0;
    if (!has_var || ac != 1) {
      out << to_string(ac);
      if (has_var) out << "*";
    }
    if (xe > 0) {
      out << "x";
      if (xe > 1) out << "^" << xe;
    }
    if (ye > 0) {
      if (xe > 0) out << "*";
      out << "y";
      if (ye > 1) out << "^" << ye;
    }
  }
  if (first) out << "0";
  return out.str();
}

inline std::string to_string(const LinearForm& l) {
  HomoPoly p(1);
  p.coeff(0) = l.a();
  p.coeff(1) = l.b();
  return to_string(p);
}

}  // namespace b2der
