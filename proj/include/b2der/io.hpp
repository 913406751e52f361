#pragma once

// Serialization: the JSON wire format for derivations and result records,
// display-style LaTeX rendering, and parsing of multiplicities and custom
// form lists from the command line.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "b2der/arrangement.hpp"

namespace b2der {

using nlohmann::json;

// {"degree": d, "f": [["p/q", xexp, yexp], ...], "g": [...]}; nonzero terms
// only, decreasing x-exponent.
inline json derivation_to_json(const Derivation& theta) {
  auto poly_terms = [](const HomoPoly& p) {
    json terms = json::array();
    const Eigen::Index d = p.degree();
    for (Eigen::Index i = 0; i <= d; ++i) {
      if (p.coeff(i) == 0) continue;
      terms.push_back({to_string(p.coeff(i)), d - i, i});
    }
    return terms;
  };
  return json{{"degree", theta.degree()},
              {"f", poly_terms(theta.f())},
              {"g", poly_terms(theta.g())}};
}

inline Derivation derivation_from_json(const json& j) {
  const Eigen::Index d = j.at("degree").get<Eigen::Index>();
  auto read_poly = [d](const json& terms) {
    HomoPoly p(d);
    for (const json& t : terms) {
      const Rational c = parse_rational(t.at(0).get<std::string>());
      const Eigen::Index xe = t.at(1).get<Eigen::Index>();
      const Eigen::Index ye = t.at(2).get<Eigen::Index>();
      if (xe + ye != d) throw DegreeMismatch("term exponents do not sum to degree");
      p.coeff(ye) += c;
    }
    return p;
  };
  return Derivation(read_poly(j.at("f")), read_poly(j.at("g")));
}

namespace detail {

inline std::string latex_rational(const Rational& r, bool with_sign) {
  Rational a = abs(r);
  std::ostringstream out;
  if (with_sign && r < 0) out << "-";
  if (a.get_den() == 1)
    out << a.get_num().get_str();
  else
    out << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str()
        << "}";
  return out.str();
}

}  // namespace detail

// Display style: \frac{1}{10} \, x^{5} - \frac{1}{6} \, x^{3} y^{2}.
inline std::string latex_poly(const HomoPoly& p) {
  std::ostringstream out;
  bool first = true;
  const Eigen::Index d = p.degree();
  for (Eigen::Index i = 0; i <= d; ++i) {
    const Rational& c = p.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Eigen::Index xe = d - i, ye = i;
    const bool has_var = xe > 0 || ye > 0;
    const Rational a = abs(c);
    if (!has_var || a != 1) {
      out << detail::latex_rational(a, false);
      if (has_var) out << " \\, ";
    }
    if (xe > 0) {
      out << "x";
      if (xe > 1) out << "^{" << xe << "}";
      if (ye > 0) out << " ";
    }
    if (ye > 0) {
      out << "y";
      if (ye > 1) out << "^{" << ye << "}";
    }
  }
  if (first) out << "0";
  return out.str();
}

inline std::string latex_derivation(const Derivation& theta) {
  std::ostringstream out;
  out << "\\left(" << latex_poly(theta.f()) << "\\right)\\partial_x"
      << "+\\left(" << latex_poly(theta.g()) << "\\right)\\partial_y";
  return out.str();
}

// Result of a basis computation, ready for printing.
struct OutputRecord {
  std::vector<unsigned> multiplicity;
  ExponentPair exps;
  Derivation t1, t2;
  std::string provenance;  // "closed_form", "non_balanced" or "oracle"
  std::string case_id;     // dispatch-table row for closed_form results
};

inline json record_to_json(const OutputRecord& rec) {
  json j{{"multiplicity", rec.multiplicity},
         {"exponents", {rec.exps.e1, rec.exps.e2}},
         {"basis", {derivation_to_json(rec.t1), derivation_to_json(rec.t2)}},
         {"provenance", rec.provenance}};
  if (!rec.case_id.empty()) j["case"] = rec.case_id;
  return j;
}

inline std::string record_to_latex(const OutputRecord& rec) {
  std::ostringstream out;
  out << "\\theta_1 = " << latex_derivation(rec.t1) << "\n";
  out << "\\theta_2 = " << latex_derivation(rec.t2) << "\n";
  out << "\\exp = (" << rec.exps.e1 << ", " << rec.exps.e2 << ")\n";
  return out.str();
}

inline std::string record_to_text(const OutputRecord& rec) {
  std::ostringstream out;
  out << "theta1 = (" << to_string(rec.t1.f()) << ") dx + ("
      << to_string(rec.t1.g()) << ") dy\n";
  out << "theta2 = (" << to_string(rec.t2.f()) << ") dx + ("
      << to_string(rec.t2.g()) << ") dy\n";
  out << "exponents = (" << rec.exps.e1 << ", " << rec.exps.e2 << ")\n";
  out << "provenance = " << rec.provenance;
  if (!rec.case_id.empty()) out << " [" << rec.case_id << "]";
  out << "\n";
  return out.str();
}

// "m1,m2,...,mk"
inline std::vector<unsigned> parse_multiplicity(const std::string& s) {
  std::vector<unsigned> values;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0)
      throw DomainError("multiplicity entries must be nonnegative integers");
    values.push_back(static_cast<unsigned>(v));
  }
  if (values.empty()) throw DomainError("empty multiplicity");
  return values;
}

// "a1,b1;a2,b2;..." with rational entries.
inline std::vector<LinearForm> parse_forms(const std::string& s) {
  std::vector<LinearForm> forms;
  std::istringstream in(s);
  std::string pair;
  while (std::getline(in, pair, ';')) {
    const std::size_t comma = pair.find(',');
    if (comma == std::string::npos)
      throw DomainError("each form needs two comma-separated coefficients");
    forms.emplace_back(parse_rational(pair.substr(0, comma)),
                       parse_rational(pair.substr(comma + 1)));
  }
  if (forms.empty()) throw DomainError("empty form list");
  return forms;
}

}  // namespace b2der
