#pragma once

// Front-end logic shared by the CLI and the tests: pick the construction for
// a given multiplicity (dominant-line formula, main closed form, dispatch
// table, optionally the brute-force oracle) and run the cross-check sweep.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "b2der/a2.hpp"
#include "b2der/closedform.hpp"
#include "b2der/io.hpp"
#include "b2der/oracle.hpp"

namespace b2der {

// Dispatch order: non-balanced formula, then the main closed form, then the
// case table, then (only if allowed) the oracle.  Throws CaseNotCovered when
// nothing applies and the oracle is not allowed.  Closed forms are specific
// to the four-line preset; other arrangements go straight to the oracle.
inline OutputRecord compute_basis(const Multiarrangement& arr,
                                  const Multiplicity& m, bool b2_preset,
                                  bool fallback_oracle, bool recheck = true) {
  if (arr.size() != m.size())
    throw LengthMismatch("multiplicity length does not match arrangement");
  OutputRecord rec{m.values(), {}, euler_derivation(), euler_derivation(),
                   "", ""};

  bool done = false;
  if (b2_preset && !is_balanced(m)) {
    auto [t1, t2, e] = non_balanced_basis(arr, m);
    rec.t1 = std::move(t1);
    rec.t2 = std::move(t2);
    rec.exps = e;
    rec.provenance = "non_balanced";
    done = true;
  }
  if (!done && b2_preset) {
    const B2Multiplicity bm{m[0], m[1], m[2], m[3]};
    if (bm.diagonal_equal() && bm.m1_odd() && bm.m2_odd() && bm.sum_div4() &&
        bm.balanced()) {
      auto [t1, t2, e] = main_basis(bm);
      rec.t1 = std::move(t1);
      rec.t2 = std::move(t2);
      rec.exps = e;
      rec.provenance = "closed_form";
      rec.case_id = "main";
      done = true;
    } else if (bm.balanced()) {
      try {
        CorQBasis cq = cor_Q_basis(bm);
        rec.t1 = std::move(cq.t1);
        rec.t2 = std::move(cq.t2);
        unsigned e1 = static_cast<unsigned>(rec.t1.degree());
        unsigned e2 = static_cast<unsigned>(rec.t2.degree());
        if (e1 > e2) std::swap(e1, e2);
        rec.exps = ExponentPair{e1, e2};
        rec.provenance = "closed_form";
        rec.case_id = cq.case_id;
        done = true;
      } catch (const CaseNotCovered&) {
        // fall through
      }
    }
  }
  if (!done) {
    if (!fallback_oracle)
      throw CaseNotCovered(
          "no closed form applies; rerun with --fallback-oracle");
    auto [t1, t2] = oracle_basis(arr, m);
    rec.exps = ExponentPair{static_cast<unsigned>(t1.degree()),
                            static_cast<unsigned>(t2.degree())};
    rec.t1 = std::move(t1);
    rec.t2 = std::move(t2);
    rec.provenance = "oracle";
    done = true;
  }

  if (recheck &&
      (!is_member(rec.t1, arr, m) || !saito_check(rec.t1, rec.t2, arr, m)))
    throw DomainError("computed basis failed re-verification");
  return rec;
}

struct VerifyReport {
  unsigned long cases = 0;   // multiplicities visited
  unsigned long checks = 0;  // individual assertions run
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string mult_label(const B2Multiplicity& m) {
  std::ostringstream out;
  out << "(" << m.m1 << "," << m.m2 << "," << m.m3 << "," << m.m4 << ")";
  return out.str();
}

inline void verify_one(const B2Multiplicity& bm, const Multiarrangement& arr,
                       VerifyReport& rep) {
  const Multiplicity m = bm.as_multiplicity();
  const std::string label = mult_label(bm);
  auto expect = [&](bool ok, const char* what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back(label + ": " + what);
  };

  const ExponentPair e = exponents(arr, m);
  expect(e.e1 + e.e2 == m.sum(), "exponent sum");

  if (!is_balanced(m)) {
    unsigned mk = 0;
    for (unsigned v : m.values()) mk = std::max(mk, v);
    expect(e == ExponentPair{m.sum() - mk, mk}, "non-balanced exponents");
    auto [t1, t2, eb] = non_balanced_basis(arr, m);
    expect(eb == e, "non-balanced exponent pair");
    expect(saito_check(t1, t2, arr, m), "non-balanced saito");
    return;
  }

  // Predicted exponent difference, where the case table speaks.
  try {
    expect(exponent_difference(bm) == e.e2 - e.e1, "exponent difference");
  } catch (const CaseNotCovered&) {
  }

  if (bm.diagonal_equal() && bm.m1_odd() && bm.m2_odd() && bm.sum_div4()) {
    Derivation t = theta_m(bm);
    expect(is_member(t, arr, m), "theta_m membership");
    expect(check_cor_P(bm), "no common linear factor");
    auto [t1, t2, eb] = main_basis(bm);
    expect(eb == e, "main exponents");
    expect(saito_check(t1, t2, arr, m), "main saito");
    if (bm.m1 == 1) expect(check_lemma_B(bm), "diagonal recursion");
    expect(check_lemma_D(bm), "off-diagonal recursion");
  }

  try {
    CorQBasis cq = cor_Q_basis(bm);
    expect(saito_check(cq.t1, cq.t2, arr, m), "case-table saito");
    unsigned d1 = static_cast<unsigned>(cq.t1.degree());
    unsigned d2 = static_cast<unsigned>(cq.t2.degree());
    if (d1 > d2) std::swap(d1, d2);
    expect(ExponentPair{d1, d2} == e, "case-table degrees");
  } catch (const CaseNotCovered&) {
  }
}

}  // namespace detail

// Cross-check every four-line multiplicity with |m| <= max_sum against the
// oracle and the closed forms whose hypotheses apply.
inline VerifyReport verify_sweep(unsigned max_sum) {
  const Multiarrangement arr = b2_arrangement();
  VerifyReport rep;
  for (unsigned m1 = 0; m1 <= max_sum; ++m1)
    for (unsigned m2 = 0; m1 + m2 <= max_sum; ++m2)
      for (unsigned m3 = 0; m1 + m2 + m3 <= max_sum; ++m3)
        for (unsigned m4 = 0; m1 + m2 + m3 + m4 <= max_sum; ++m4) {
          ++rep.cases;
          detail::verify_one({m1, m2, m3, m4}, arr, rep);
        }
  return rep;
}

}  // namespace b2der
