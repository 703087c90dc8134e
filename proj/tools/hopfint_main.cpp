// Command-line front end. Exit codes:
//   0  a verdict was produced (including negative mathematical verdicts)
//   2  the input could not be parsed (files, elements, flags)
//   3  the operation is unsupported on this input (ring tier, missing
//      antipode, non-associative table, ...)

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfint/cli.hpp"

namespace {

int emit(const hopfint::Report& r, const std::string& out_path) {
  std::cout << hopfint::render_report_text(r);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << hopfint::report_to_json(r).dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integrals, separability, and smash products for finite-rank "
               "algebras over commutative rings"};
  app.require_subcommand(1);

  std::string file, side = "left", candidate, out, what, family_name, ring;
  std::size_t degree = 16, max_order = 4;
  std::vector<std::string> rings;

  CLI::App* verify = app.add_subcommand("verify", "Check the axioms of a description file");
  verify->add_option("file", file, "description file")->required();
  verify->add_option("--out", out, "write the report as JSON");

  CLI::App* integrals =
      app.add_subcommand("integrals", "Compute the module of one-sided integrals");
  integrals->add_option("file", file, "description file")->required();
  integrals->add_option("--side", side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  integrals->add_option("--out", out, "write the report as JSON");

  CLI::App* separability =
      app.add_subcommand("separability", "Decide separability via integrals");
  separability->add_option("file", file, "description file")->required();
  separability->add_option("--candidate", candidate,
                           "integral candidate, e.g. \"e + g1\" (verify-only rings)");
  separability->add_option("--side", side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  separability->add_option("--out", out, "write the report as JSON");

  CLI::App* smash = app.add_subcommand("smash", "Smash-product computations");
  smash
      ->add_option("what", what,
                   "invariants | lemma44 | trace-one | separability")
      ->required()
      ->check(CLI::IsMember({"invariants", "lemma44", "trace-one", "separability"}));
  smash->add_option("file", file, "module-algebra description file")->required();
  smash->add_option("--out", out, "write the report as JSON");

  CLI::App* family = app.add_subcommand("family", "Bounded-degree checks of infinite models");
  family
      ->add_option("name", family_name, "rxmodnx | projective | ctrex46 | kxkx")
      ->required()
      ->check(CLI::IsMember({"rxmodnx", "projective", "ctrex46", "kxkx"}));
  family->add_option("--ring", ring, "coefficient ring, e.g. Z/6")->required();
  family->add_option("--candidate", candidate,
                     "element parameter (n for rxmodnx, the idempotent for the others)");
  family->add_option("--degree", degree, "truncation degree (default 16)");
  family->add_option("--out", out, "write the report as JSON");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate-semigroups", "Exhaustive small-order semigroup cross-checks");
  enumerate->add_option("max-order", max_order, "largest order to enumerate (1..4)");
  enumerate->add_option("--ring", rings, "coefficient ring(s), default GF(2) GF(3)");
  enumerate->add_option("--out", out, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    hopfint::Report r;
    hopfint::Side s = side == "right" ? hopfint::Side::right : hopfint::Side::left;
    if (verify->parsed())
      r = hopfint::cmd_verify(file);
    else if (integrals->parsed())
      r = hopfint::cmd_integrals(file, s);
    else if (separability->parsed())
      r = hopfint::cmd_separability(file, candidate, s);
    else if (smash->parsed())
      r = hopfint::cmd_smash(file, what);
    else if (family->parsed())
      r = hopfint::cmd_family(family_name, ring, candidate, degree);
    else
      r = hopfint::cmd_enumerate_semigroups(max_order, rings);
    return emit(r, out);
  } catch (const hopfint::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == hopfint::errc::parse_error ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
