// Command-line front end: compute bases and exponents, run the verification
// sweep, query the brute-force oracle, and re-emit serialized derivations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "b2der/dispatch.hpp"

namespace {

using namespace b2der;

struct ArrangementChoice {
  std::string preset = "b2";  // "b2", "a2" or "custom"
  std::string forms;          // "a1,b1;a2,b2;..." when custom
};

Multiarrangement resolve_arrangement(const ArrangementChoice& choice) {
  if (!choice.forms.empty()) return Multiarrangement(parse_forms(choice.forms));
  if (choice.preset == "b2") return b2_arrangement();
  if (choice.preset == "a2") return a2_arrangement();
  throw DomainError("unknown arrangement preset: " + choice.preset);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot open output file: " + out_path);
  out << text;
}

std::string render_record(const OutputRecord& rec, const std::string& format) {
  if (format == "json") return record_to_json(rec).dump(2) + "\n";
  if (format == "latex") return record_to_latex(rec);
  if (format == "text") return record_to_text(rec);
  throw DomainError("unknown format: " + format);
}

int cmd_basis(const ArrangementChoice& choice, const std::string& mult,
              bool fallback, bool no_recheck, const std::string& format,
              const std::string& out_path) {
  const Multiarrangement arr = resolve_arrangement(choice);
  const Multiplicity m(parse_multiplicity(mult));
  const bool b2_preset = choice.forms.empty() && choice.preset == "b2";
  try {
    OutputRecord rec = compute_basis(arr, m, b2_preset, fallback, !no_recheck);
    write_output(render_record(rec, format), out_path);
    return 0;
  } catch (const CaseNotCovered& e) {
    std::cerr << "case not covered: " << e.what() << "\n";
    return 3;
  }
}

int cmd_oracle(const ArrangementChoice& choice, const std::string& mult,
               const std::string& format, const std::string& out_path) {
  const Multiarrangement arr = resolve_arrangement(choice);
  const Multiplicity m(parse_multiplicity(mult));
  auto [t1, t2] = oracle_basis(arr, m);
  OutputRecord rec{m.values(),
                   ExponentPair{static_cast<unsigned>(t1.degree()),
                                static_cast<unsigned>(t2.degree())},
                   std::move(t1),
                   std::move(t2),
                   "oracle",
                   ""};
  write_output(render_record(rec, format), out_path);
  return 0;
}

int cmd_verify(unsigned max_sum) {
  const VerifyReport rep = verify_sweep(max_sum);
  for (const std::string& f : rep.failures) std::cerr << "FAIL " << f << "\n";
  std::cout << "cases: " << rep.cases << "\nchecks: " << rep.checks
            << "\nfailures: " << rep.failures.size() << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_emit(const std::string& in_path, const std::string& format,
             const std::string& out_path) {
  std::stringstream buf;
  if (in_path.empty()) {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(in_path);
    if (!in) throw DomainError("cannot open input file: " + in_path);
    buf << in.rdbuf();
  }
  const Derivation theta = derivation_from_json(json::parse(buf.str()));
  std::string text;
  if (format == "json")
    text = derivation_to_json(theta).dump(2) + "\n";
  else if (format == "latex")
    text = latex_derivation(theta) + "\n";
  else
    throw DomainError("unknown format: " + format);
  write_output(text, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bases and exponents for rank-2 multiarrangement "
               "derivation modules"};
  app.require_subcommand(1);

  ArrangementChoice choice;
  std::string mult, format = "text", out_path, in_path;
  bool fallback = false, no_recheck = false;
  unsigned max_sum = 16;

  CLI::App* basis = app.add_subcommand("basis", "compute a homogeneous basis");
  basis->add_option("preset", choice.preset, "arrangement preset (b2|a2)");
  basis->add_option("multiplicity", mult, "comma-separated multiplicities")
      ->required();
  basis->add_option("--forms", choice.forms,
                    "custom forms \"a1,b1;a2,b2;...\" (overrides preset)");
  basis->add_flag("--fallback-oracle", fallback,
                  "use the brute-force oracle when no closed form applies");
  basis->add_flag("--no-recheck", no_recheck,
                  "skip re-verification of the computed basis");
  basis->add_option("--format", format, "output format (text|json|latex)");
  basis->add_option("--out", out_path, "write output to a file");

  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force basis and exponents");
  oracle->add_option("preset", choice.preset, "arrangement preset (b2|a2)");
  oracle->add_option("multiplicity", mult, "comma-separated multiplicities")
      ->required();
  oracle->add_option("--forms", choice.forms,
                     "custom forms \"a1,b1;a2,b2;...\" (overrides preset)");
  oracle->add_option("--format", format, "output format (text|json|latex)");
  oracle->add_option("--out", out_path, "write output to a file");

  CLI::App* verify =
      app.add_subcommand("verify", "cross-check closed forms vs the oracle");
  verify->add_option("--max-sum", max_sum, "sweep all |m| <= this bound")
      ->required();

  CLI::App* emit = app.add_subcommand("emit", "re-render a serialized derivation");
  emit->add_option("--in", in_path, "input JSON file (default: stdin)");
  emit->add_option("--format", format, "output format (json|latex)")
      ->required();
  emit->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (basis->parsed())
      return cmd_basis(choice, mult, fallback, no_recheck, format, out_path);
    if (oracle->parsed()) return cmd_oracle(choice, mult, format, out_path);
    if (verify->parsed()) return cmd_verify(max_sum);
    if (emit->parsed()) return cmd_emit(in_path, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
