#pragma once

// Hard-coded reference data shared by the unit and acceptance tests: the 19
// printed four-line derivations and the 10 printed three-line derivations,
// transcribed term by term.

#include <vector>

#include "b2der/a2.hpp"
#include "b2der/closedform.hpp"

namespace b2der_test {

using namespace b2der;

struct Term {
  long num, den;
  Eigen::Index yexp;
};

inline HomoPoly poly_of(Eigen::Index degree, const std::vector<Term>& terms) {
  HomoPoly p(degree);
  for (const Term& t : terms) p.coeff(t.yexp) = rat(t.num, t.den);
  return p;
}

inline Derivation deriv_of(Eigen::Index degree, const std::vector<Term>& f,
                           const std::vector<Term>& g) {
  return Derivation(poly_of(degree, f), poly_of(degree, g));
}

struct B2Example {
  B2Multiplicity m;
  Derivation expected;
};

// The 19 printed theta_m derivations; g holds the literal dy coefficient.
inline std::vector<B2Example> b2_examples() {
  std::vector<B2Example> ex;
  ex.push_back({{3, 5, 2, 2},
                deriv_of(5, {{1, 10, 0}, {-1, 6, 2}}, {{-1, 15, 5}})});
  ex.push_back({{3, 5, 4, 4},
                deriv_of(7, {{1, 280, 0}, {-1, 60, 2}, {1, 24, 4}},
                         {{1, 30, 5}, {-1, 210, 7}})});
  ex.push_back({{3, 9, 4, 4},
                deriv_of(9, {{1, 432, 0}, {-1, 112, 2}, {1, 80, 4}, {-1, 144, 6}},
                         {{-1, 945, 9}})});
  ex.push_back({{5, 7, 2, 2},
                deriv_of(7, {{1, 42, 0}, {-1, 30, 2}}, {{-1, 105, 7}})});
  ex.push_back({{5, 7, 4, 4},
                deriv_of(9, {{1, 504, 0}, {-1, 140, 2}, {1, 120, 4}},
                         {{1, 210, 7}, {-1, 630, 9}})});
  ex.push_back({{5, 11, 4, 4},
                deriv_of(11,
                         {{1, 1584, 0}, {-1, 432, 2}, {1, 336, 4}, {-1, 720, 6}},
                         {{-1, 10395, 11}})});
  ex.push_back({{7, 9, 2, 2},
                deriv_of(9, {{1, 270, 0}, {-1, 210, 2}}, {{-1, 945, 9}})});
  ex.push_back({{7, 9, 4, 4},
                deriv_of(11, {{1, 2376, 0}, {-1, 756, 2}, {1, 840, 4}},
                         {{1, 1890, 9}, {-1, 4158, 11}})});
  ex.push_back({{7, 13, 4, 4},
                deriv_of(13,
                         {{1, 9360, 0}, {-1, 2640, 2}, {1, 2160, 4}, {-1, 5040, 6}},
                         {{-1, 135135, 13}})});
  ex.push_back({{1, 3, 2, 2},
                deriv_of(3, {{1, 6, 0}, {-1, 2, 2}}, {{-1, 3, 3}})});
  ex.push_back({{1, 5, 3, 3},
                deriv_of(5, {{1, 40, 0}, {-1, 12, 2}, {1, 8, 4}}, {{1, 15, 5}})});
  ex.push_back({{1, 3, 4, 4},
                deriv_of(5, {{-1, 120, 0}, {1, 12, 2}, {1, 8, 4}},
                         {{1, 6, 3}, {1, 30, 5}})});
  ex.push_back({{1, 7, 4, 4},
                deriv_of(7, {{1, 336, 0}, {-1, 80, 2}, {1, 48, 4}, {-1, 48, 6}},
                         {{-1, 105, 7}})});
  ex.push_back({{1, 5, 5, 5},
                deriv_of(7, {{-1, 1680, 0}, {1, 240, 2}, {-1, 48, 4}, {-1, 48, 6}},
                         {{-1, 30, 5}, {-1, 210, 7}})});
  ex.push_back({{1, 9, 5, 5},
                deriv_of(9,
                         {{1, 3456, 0},
                          {-1, 672, 2},
                          {1, 320, 4},
                          {-1, 288, 6},
                          {1, 384, 8}},
                         {{1, 945, 9}})});
  ex.push_back({{1, 3, 6, 6},
                deriv_of(7, {{1, 1680, 0}, {-1, 80, 2}, {-1, 16, 4}, {-1, 48, 6}},
                         {{-1, 24, 3}, {-1, 20, 5}, {-1, 280, 7}})});
  ex.push_back({{1, 7, 6, 6},
                deriv_of(9,
                         {{-1, 24192, 0},
                          {1, 3360, 2},
                          {-1, 960, 4},
                          {1, 288, 6},
                          {1, 384, 8}},
                         {{1, 210, 7}, {1, 1890, 9}})});
  ex.push_back({{1, 11, 6, 6},
                deriv_of(11,
                         {{1, 42240, 0},
                          {-1, 6912, 2},
                          {1, 2688, 4},
                          {-1, 1920, 6},
                          {1, 2304, 8},
                          {-1, 3840, 10}},
                         {{-1, 10395, 11}})});
  ex.push_back({{1, 5, 7, 7},
                deriv_of(9,
                         {{1, 40320, 0},
                          {-1, 3360, 2},
                          {1, 320, 4},
                          {1, 96, 6},
                          {1, 384, 8}},
                         {{1, 120, 5}, {1, 140, 7}, {1, 2520, 9}})});
  return ex;
}

struct A2Example {
  A2Multiplicity m;
  Derivation expected;
};

// The 10 printed theta'_m derivations.
inline std::vector<A2Example> a2_examples() {
  std::vector<A2Example> ex;
  ex.push_back({{2, 3},
                deriv_of(3, {{-2, 3, 0}, {-2, 1, 1}}, {{-2, 1, 2}, {-2, 3, 3}})});
  ex.push_back({{3, 5},
                deriv_of(5, {{2, 15, 0}, {2, 3, 1}, {4, 3, 2}},
                         {{4, 3, 3}, {2, 3, 4}, {2, 15, 5}})});
  ex.push_back({{4, 3},
                deriv_of(5, {{2, 5, 0}, {2, 3, 1}}, {{2, 3, 4}, {2, 5, 5}})});
  ex.push_back({{4, 7},
                deriv_of(7, {{-2, 105, 0}, {-2, 15, 1}, {-2, 5, 2}, {-2, 3, 3}},
                         {{-2, 3, 4}, {-2, 5, 5}, {-2, 15, 6}, {-2, 105, 7}})});
  ex.push_back({{5, 5},
                deriv_of(7, {{-8, 105, 0}, {-4, 15, 1}, {-4, 15, 2}},
                         {{-4, 15, 5}, {-4, 15, 6}, {-8, 105, 7}})});
  ex.push_back({{5, 9},
                deriv_of(9,
                         {{2, 945, 0}, {2, 105, 1}, {8, 105, 2}, {8, 45, 3}, {4, 15, 4}},
                         {{4, 15, 5}, {8, 45, 6}, {8, 105, 7}, {2, 105, 8}, {2, 945, 9}})});
  ex.push_back({{6, 3},
                deriv_of(7, {{-4, 21, 0}, {-4, 15, 1}}, {{-4, 15, 6}, {-4, 21, 7}})});
  ex.push_back({{6, 7},
                deriv_of(9, {{2, 189, 0}, {2, 35, 1}, {4, 35, 2}, {4, 45, 3}},
                         {{4, 45, 6}, {4, 35, 7}, {2, 35, 8}, {2, 189, 9}})});
  ex.push_back({{6, 11},
                deriv_of(11,
                         {{-2, 10395, 0},
                          {-2, 945, 1},
                          {-2, 189, 2},
                          {-2, 63, 3},
                          {-4, 63, 4},
                          {-4, 45, 5}},
                         {{-4, 45, 6},
                          {-4, 63, 7},
                          {-2, 63, 8},
                          {-2, 189, 9},
                          {-2, 945, 10},
                          {-2, 10395, 11}})});
  ex.push_back({{7, 5},
                deriv_of(9, {{2, 63, 0}, {2, 21, 1}, {8, 105, 2}},
                         {{8, 105, 7}, {2, 21, 8}, {2, 63, 9}})});
  return ex;
}

}  // namespace b2der_test
