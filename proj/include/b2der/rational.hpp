#pragma once

// Exact scalar types for the whole library: arbitrary-precision rationals
// (GMP) with Eigen interoperability.  All arithmetic is exact; there is no
// floating-point mode anywhere.

#include <gmpxx.h>
#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace b2der {

using Integer = mpz_class;
// Stored in lowest terms with positive denominator (mpq_class canonical form).
using Rational = mpq_class;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p/q"; canonicalizes.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace b2der

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80
  };
};

}  // namespace Eigen
