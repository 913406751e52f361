#pragma once

// Rank-2 multiarrangements, derivations, the membership test defining the
// derivation module, balancedness and Saito's criterion.

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "b2der/errors.hpp"
#include "b2der/poly.hpp"

namespace b2der {

class Multiarrangement {
 public:
  explicit Multiarrangement(std::vector<LinearForm> forms)
      : forms_(std::move(forms)) {
    for (std::size_t i = 0; i < forms_.size(); ++i)
      for (std::size_t j = i + 1; j < forms_.size(); ++j)
        if (forms_[i].proportional_to(forms_[j]))
          throw DomainError("arrangement forms must define distinct lines");
  }

  std::size_t size() const { return forms_.size(); }
  const LinearForm& form(std::size_t i) const { return forms_[i]; }
  const std::vector<LinearForm>& forms() const { return forms_; }

 private:
  std::vector<LinearForm> forms_;
};

// x, y, x-y, x+y (in this order).
inline Multiarrangement b2_arrangement() {
  return Multiarrangement({LinearForm(1, 0), LinearForm(0, 1),
                           LinearForm(1, -1), LinearForm(1, 1)});
}

// x, y, x+y.
inline Multiarrangement a2_arrangement() {
  return Multiarrangement(
      {LinearForm(1, 0), LinearForm(0, 1), LinearForm(1, 1)});
}

class Multiplicity {
 public:
  Multiplicity(std::initializer_list<unsigned> values) : values_(values) {}
  explicit Multiplicity(std::vector<unsigned> values)
      : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  unsigned operator[](std::size_t i) const { return values_[i]; }
  const std::vector<unsigned>& values() const { return values_; }

  unsigned sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0u);
  }

 private:
  std::vector<unsigned> values_;
};

// f dx + g dy with deg f = deg g (the common value is the degree).
class Derivation {
 public:
  Derivation(HomoPoly f, HomoPoly g) : f_(std::move(f)), g_(std::move(g)) {
    if (f_.degree() != g_.degree())
      throw DegreeMismatch("derivation components must have equal degree");
  }

  const HomoPoly& f() const { return f_; }
  const HomoPoly& g() const { return g_; }
  Eigen::Index degree() const { return f_.degree(); }

  bool is_zero() const { return f_.is_zero() && g_.is_zero(); }

  friend bool operator==(const Derivation& t1, const Derivation& t2) {
    return t1.f_ == t2.f_ && t1.g_ == t2.g_;
  }
  friend bool operator!=(const Derivation& t1, const Derivation& t2) {
    return !(t1 == t2);
  }

 private:
  HomoPoly f_, g_;
};

inline Derivation euler_derivation() {
  return Derivation(monomial(1, 0, 1), monomial(1, 1, 1));
}

struct ExponentPair {
  unsigned e1 = 0;  // e1 <= e2
  unsigned e2 = 0;

  friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
    return a.e1 == b.e1 && a.e2 == b.e2;
  }
};

// Derivations act on linear forms: (f dx + g dy)(a x + b y) = a f + b g.
inline HomoPoly apply(const Derivation& theta, const LinearForm& l) {
  return add(scale(l.a(), theta.f()), scale(l.b(), theta.g()));
}

// theta is in D(A,m) iff alpha_i^{m_i} divides theta(alpha_i) for every i;
// m_i = 0 imposes no condition.
inline bool is_member(const Derivation& theta, const Multiarrangement& arr,
                      const Multiplicity& m) {
  if (arr.size() != m.size())
    throw LengthMismatch("multiplicity length does not match arrangement");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (m[i] == 0) continue;
    if (!divides_pow(arr.form(i), m[i], apply(theta, arr.form(i))))
      return false;
  }
  return true;
}

inline bool is_balanced(const Multiplicity& m) {
  const unsigned s = m.sum();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (2 * m[i] + 1 > s) return false;
  return true;
}

inline HomoPoly saito_determinant(const Derivation& t1, const Derivation& t2) {
  return sub(mul(t1.f(), t2.g()), mul(t2.f(), t1.g()));
}

// Saito's criterion for two homogeneous members: they form a basis iff their
// degrees sum to |m| and the coefficient determinant is nonzero.
inline bool saito_check(const Derivation& t1, const Derivation& t2,
                        const Multiarrangement& arr, const Multiplicity& m) {
  if (!is_member(t1, arr, m) || !is_member(t2, arr, m))
    throw NotMember("saito_check requires members of D(A,m)");
  if (static_cast<unsigned>(t1.degree() + t2.degree()) != m.sum())
    return false;
  return !saito_determinant(t1, t2).is_zero();
}

}  // namespace b2der
