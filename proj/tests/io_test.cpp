#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <string>

#include "hopfint/cli.hpp"

using namespace hopfint;

namespace {

std::string fixture(const std::string& name) {
  return std::string(HOPFINT_FIXTURE_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const CheckResult* find(const Report& r, const std::string& name) {
  for (auto& c : r.verdicts)
    if (c.name == name) return &c;
  return nullptr;
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error to be raised";
  return errc::invalid_element;
}

void expect_parse_error(const std::string& name, const std::string& content,
                        const std::string& needle) {
  std::string path = write_temp(name, content);
  try {
    load_description(path);
    ADD_FAILURE() << "expected a parse error for " << name;
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parse_error);
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

}  // namespace

// --- element grammar ---

TEST(Elements, FormatParsesBack) {
  Ring Q = Ring::rationals();
  std::vector<std::string> labels = {"e", "g1"};
  Vec v = {Q.parse_element("2"), Q.parse_element("-1/2")};
  std::string s = format_element(labels, v);
  EXPECT_EQ(s, "2*e + -1/2*g1");
  EXPECT_EQ(parse_element_expr(Q, labels, s), v);

  EXPECT_EQ(format_element(labels, zero_vec(Q, 2)), "0");
  EXPECT_EQ(parse_element_expr(Q, labels, "0"), zero_vec(Q, 2));

  Vec u = {Q.one(), Q.zero()};
  EXPECT_EQ(format_element(labels, u), "e");
  EXPECT_EQ(parse_element_expr(Q, labels, "e"), u);
  EXPECT_EQ(parse_element_expr(Q, labels, "3*e - 2*e - e"), zero_vec(Q, 2));
  EXPECT_EQ(parse_element_expr(Q, labels, "-g1"), (Vec{Q.zero(), Q.parse_element("-1")}));
}

TEST(Elements, ProductRingCoefficients) {
  Ring R = Ring::parse("QxQ");
  std::vector<std::string> labels = {"a", "b"};
  Vec v = {R.parse_element("(1/2, -1)"), R.parse_element("(0, 3)")};
  std::string s = format_element(labels, v);
  EXPECT_EQ(parse_element_expr(R, labels, s), v);
}

TEST(Elements, TensorTerms) {
  Ring Q = Ring::rationals();
  std::vector<std::string> labels = {"e", "g1"};
  Matrix T = parse_tensor_expr(Q, labels, "e@e + 2*g1@g1 - e@g1");
  EXPECT_TRUE(T.at(0, 0).is_one());
  EXPECT_EQ(T.at(1, 1), Q.parse_element("2"));
  EXPECT_EQ(T.at(0, 1), Q.parse_element("-1"));
  EXPECT_TRUE(T.at(1, 0).is_zero());
}

TEST(Elements, BadExpressionsRaise) {
  Ring Q = Ring::rationals();
  std::vector<std::string> labels = {"e", "g1"};
  EXPECT_EQ(code_of([&] { parse_element_expr(Q, labels, "zz"); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { parse_element_expr(Q, labels, "q*e"); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { parse_element_expr(Q, labels, "1*2*e"); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { parse_tensor_expr(Q, labels, "e + g1"); }), errc::parse_error);
}

// --- description files ---

TEST(Descriptions, FixturesLoad) {
  ParsedDescription hopf = load_description(fixture("q_c2.alg"));
  EXPECT_EQ(hopf.kind, "hopf");
  ASSERT_TRUE(hopf.algebra.has_value());
  EXPECT_EQ(hopf.algebra->dim, 2u);
  EXPECT_TRUE(hopf.algebra->has_coalgebra());
  EXPECT_TRUE(hopf.algebra->has_antipode());
  ASSERT_TRUE(hopf.algebra->unit.has_value());
  EXPECT_EQ(*hopf.algebra->unit, hopf.algebra->basis_vec(0));

  // No unit line: it is inferred by solving over GF(2).
  ParsedDescription inferred = load_description(fixture("gf2_c2.alg"));
  ASSERT_TRUE(inferred.algebra->unit.has_value());
  EXPECT_EQ(*inferred.algebra->unit, inferred.algebra->basis_vec(0));

  ParsedDescription alg = load_description(fixture("dual_numbers_q.alg"));
  EXPECT_EQ(alg.kind, "algebra");
  EXPECT_FALSE(alg.algebra->has_coalgebra());
  EXPECT_EQ(alg.algebra->multiply(alg.algebra->basis_vec(1), alg.algebra->basis_vec(1)),
            zero_vec(*alg.ring, 2));

  ParsedDescription sg = load_description(fixture("q_rect_band1.alg"));
  EXPECT_EQ(sg.kind, "semigroup");
  ASSERT_TRUE(sg.semigroup.has_value());
  EXPECT_EQ(sg.semigroup->order(), 5u);
  ASSERT_TRUE(sg.algebra.has_value());       // associative, so the bialgebra exists
  EXPECT_TRUE(sg.algebra->unit.has_value()); // adjoined identity makes it a monoid

  ParsedDescription ma = load_description(fixture("sign_action_q.ma"));
  EXPECT_EQ(ma.kind, "module-algebra");
  ASSERT_TRUE(ma.module_algebra.has_value());
  EXPECT_TRUE(verify_module_algebra(*ma.module_algebra).all_ok());
  const Matrix& g = ma.module_algebra->action[1];
  EXPECT_TRUE(g.at(0, 0).is_one());
  EXPECT_EQ(g.at(1, 1), ma.ring_of().parse_element("-1"));
}

TEST(Descriptions, LineAnchoredErrors) {
  expect_parse_error("no_kind.alg", "ring Q\nbasis\ne\n", "missing 'kind' section");
  expect_parse_error("bad_kind.alg", "kind blob\n", "unknown kind 'blob'");
  expect_parse_error("stray.alg", "junk here\n", ":1: expected a section keyword");
  expect_parse_error("dup_basis.alg", "ring Q\nkind algebra\nbasis\ne e\nmul\ne e -> e\n",
                     ":4: duplicate basis label 'e'");
  expect_parse_error("bad_label.alg",
                     "ring Q\nkind algebra\nbasis\ne\nmul\ne h -> e\n",
                     ":6: unknown basis label 'h'");
  expect_parse_error("bad_coeff.alg",
                     "ring Q\nkind algebra\nbasis\ne\nmul\ne e -> q*e\n",
                     ":6: bad coefficient 'q'");
  expect_parse_error("no_arrow.alg", "ring Q\nkind algebra\nbasis\ne\nmul\ne e e\n",
                     ":6: expected 'lhs -> rhs'");
  expect_parse_error("ring_body.alg", "kind algebra\nring Q\nstray line\n",
                     ":3: unexpected line inside 'ring' section");
  expect_parse_error("bad_ring.alg", "ring Zq\nkind algebra\nbasis\ne\nmul\ne e -> e\n",
                     "bad ring 'Zq'");
  expect_parse_error("short_cayley.alg",
                     "ring Q\nkind semigroup\nbasis\na b\ncayley\na b\n",
                     "cayley table needs exactly 2 rows");
  expect_parse_error("wide_cayley.alg",
                     "ring Q\nkind semigroup\nbasis\na b\ncayley\na b\nb a a\n",
                     ":7: cayley row needs exactly 2 entries");
  expect_parse_error("hopf_no_antipode.alg",
                     "ring Q\nkind hopf\nbasis\ne\ncayley\ne\nunit e\ncomul\ne -> e@e\n"
                     "counit\ne -> 1\n",
                     "needs an 'antipode' section");
  expect_parse_error("missing_counit_line.alg",
                     "ring Q\nkind bialgebra\nbasis\ne g1\ncayley\ne g1\ng1 e\ncomul\n"
                     "e -> e@e\ng1 -> g1@g1\ncounit\ne -> 1\n",
                     "misses basis label 'g1'");
  expect_parse_error("reserved_label.alg", "ring Q\nkind algebra\nbasis\ne mul\n",
                     "reserved section keyword");
  expect_parse_error("semigroup_mul.alg",
                     "ring Q\nkind semigroup\nbasis\na\nmul\na a -> a\n",
                     "section 'mul' is not allowed for kind 'semigroup'");
}

TEST(Descriptions, ModuleAlgebraErrors) {
  std::string good_h = fixture("q_c2.alg");
  std::string good_a = fixture("dual_numbers_q.alg");
  expect_parse_error("ma_missing_block.ma",
                     "kind module-algebra\nalgebra " + good_a + "\nhopf " + good_h +
                         "\naction e\n1 -> 1\ny -> y\n",
                     "missing action block for 'g1'");
  expect_parse_error("ma_missing_row.ma",
                     "kind module-algebra\nalgebra " + good_a + "\nhopf " + good_h +
                         "\naction e\n1 -> 1\naction g1\n1 -> 1\ny -> y\n",
                     "misses module basis label 'y'");
  expect_parse_error("ma_not_coalgebra.ma",
                     "kind module-algebra\nalgebra " + good_a + "\nhopf " + good_a +
                         "\naction e\n1 -> 1\ny -> y\n",
                     "carries no coalgebra");
  expect_parse_error("ma_missing_file.ma",
                     "kind module-algebra\nalgebra nowhere.alg\nhopf " + good_h +
                         "\naction e\n1 -> 1\n",
                     "cannot open file");
}

// --- reports ---

TEST(Reports, JsonRoundTrip) {
  Report r;
  r.command = "integrals --side left something.alg";
  r.add("integral_module", true, "rank 1");
  r.add("oracle", false, "span differs");
  r.certificates["integrals"] = {{"rank", 1}, {"generators", {"e + g1"}}};
  r.timing_ms = 12.5;

  nlohmann::json j = report_to_json(r);
  Report back = report_from_json(j);
  EXPECT_TRUE(reports_equal(r, back));
  EXPECT_EQ(back.timing_ms, 12.5);

  back.timing_ms = 99.0;  // timing is environmental; equality ignores it
  EXPECT_TRUE(reports_equal(r, back));
  back.verdicts[0].ok = false;
  EXPECT_FALSE(reports_equal(r, back));

  std::string text = render_report_text(r);
  EXPECT_NE(text.find("[PASS] integral_module: rank 1"), std::string::npos);
  EXPECT_NE(text.find("[FAIL] oracle: span differs"), std::string::npos);
}

// --- verify ---

TEST(CmdVerify, Fixtures) {
  Report hopf = cmd_verify(fixture("q_c2.alg"));
  EXPECT_TRUE(hopf.all_ok());
  ASSERT_NE(find(hopf, "antipode_left"), nullptr);
  EXPECT_TRUE(find(hopf, "antipode_left")->ok);

  EXPECT_TRUE(cmd_verify(fixture("gf2_c2.alg")).all_ok());
  EXPECT_TRUE(cmd_verify(fixture("zhalf_c2.alg")).all_ok());
  EXPECT_TRUE(cmd_verify(fixture("dual_numbers_q.alg")).all_ok());
  EXPECT_TRUE(cmd_verify(fixture("sign_action_q.ma")).all_ok());

  Report sg = cmd_verify(fixture("z2_zmod3_monoid.alg"));
  EXPECT_TRUE(sg.all_ok());
  EXPECT_TRUE(find(sg, "cayley_associative")->ok);
  EXPECT_TRUE(find(sg, "comul_multiplicative")->ok);
}

TEST(CmdVerify, NamedViolations) {
  // Non-associative table: the named check fails, nothing else is run.
  std::string bad_table = write_temp(
      "bad_table.alg", "ring Q\nkind semigroup\nbasis\na b\ncayley\nb a\nb a\n");
  Report r = cmd_verify(bad_table);
  EXPECT_FALSE(r.all_ok());
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_EQ(r.verdicts[0].name, "cayley_associative");
  EXPECT_FALSE(r.verdicts[0].ok);
  EXPECT_FALSE(r.verdicts[0].detail.empty());

  // A wrong antipode line: parses fine, fails exactly the antipode axiom.
  std::string bad_hopf = write_temp(
      "bad_hopf.alg",
      "ring Q\nkind hopf\nbasis\ne g1\ncayley\ne g1\ng1 e\nunit e\ncomul\ne -> e@e\n"
      "g1 -> g1@g1\ncounit\ne -> 1\ng1 -> 1\nantipode\ne -> e\ng1 -> e\n");
  Report h = cmd_verify(bad_hopf);
  EXPECT_FALSE(h.all_ok());
  EXPECT_FALSE(find(h, "antipode_left")->ok);
  EXPECT_TRUE(find(h, "comul_multiplicative")->ok);
}

// --- integrals ---

TEST(CmdIntegrals, SemigroupExamples) {
  Report band = cmd_integrals(fixture("q_rect_band1.alg"), Side::left);
  EXPECT_TRUE(band.all_ok());
  EXPECT_EQ(find(band, "integral_module")->detail, "rank 0");
  EXPECT_TRUE(find(band, "ideal_group_oracle")->ok);
  EXPECT_TRUE(find(band, "cyclic_right_ideal")->ok);
  EXPECT_EQ(band.certificates["integrals"]["rank"].get<size_t>(), 0u);

  Report c3 = cmd_integrals(fixture("q_c3.alg"), Side::left);
  EXPECT_TRUE(c3.all_ok());
  EXPECT_EQ(find(c3, "integral_module")->detail, "rank 1");
  EXPECT_EQ(c3.certificates["integrals"]["generators"][0].get<std::string>(), "e + g1 + g2");
  EXPECT_EQ(c3.certificates["ideal_group_sums"][0].get<std::string>(), "e + g1 + g2");

  Report monoid = cmd_integrals(fixture("z2_zmod3_monoid.alg"), Side::left);
  EXPECT_TRUE(monoid.all_ok());
  EXPECT_EQ(monoid.certificates["integrals"]["generators"][0].get<std::string>(), "x0");
}

TEST(CmdIntegrals, SidednessOnRightZero) {
  std::string rz = write_temp("right_zero.alg",
                              "ring Q\nkind semigroup\nbasis\na b\ncayley\na b\na b\n");
  Report left = cmd_integrals(rz, Side::left);
  EXPECT_EQ(find(left, "integral_module")->detail, "rank 2");
  EXPECT_TRUE(left.all_ok());

  Report right = cmd_integrals(rz, Side::right);
  EXPECT_EQ(find(right, "integral_module")->detail, "rank 0");
  EXPECT_EQ(find(right, "ideal_group_oracle"), nullptr);  // oracle is left-sided
  EXPECT_TRUE(right.certificates.contains("note"));
}

TEST(CmdIntegrals, NonAssociativeInputIsACapabilityError) {
  std::string bad = write_temp("bad_table2.alg",
                               "ring Q\nkind semigroup\nbasis\na b\ncayley\nb a\nb a\n");
  EXPECT_EQ(code_of([&] { cmd_integrals(bad, Side::left); }), errc::not_associative);
}

// --- separability ---

TEST(CmdSeparability, SolvableRings) {
  Report qc2 = cmd_separability(fixture("q_c2.alg"));
  EXPECT_TRUE(find(qc2, "separable")->ok);
  EXPECT_TRUE(find(qc2, "methods_agree")->ok);
  EXPECT_TRUE(qc2.certificates.contains("omega"));
  EXPECT_EQ(qc2.certificates["integral"].get<std::string>(), "e + g1");

  Report gf2 = cmd_separability(fixture("gf2_c2.alg"));
  EXPECT_FALSE(find(gf2, "separable")->ok);
  EXPECT_NE(find(gf2, "separable")->detail.find("PROVABLY_NONE"), std::string::npos);
  EXPECT_TRUE(find(gf2, "methods_agree")->ok);
}

TEST(CmdSeparability, VerifyOnlyRingNeedsACandidate) {
  Report blind = cmd_separability(fixture("zhalf_c2.alg"));
  EXPECT_FALSE(find(blind, "separable")->ok);
  EXPECT_NE(find(blind, "separable")->detail.find("NOT_FOUND"), std::string::npos);
  EXPECT_EQ(find(blind, "methods_agree"), nullptr);  // generic solve unavailable

  Report with = cmd_separability(fixture("zhalf_c2.alg"), "e + g1");
  EXPECT_TRUE(with.all_ok());
  EXPECT_TRUE(find(with, "separable")->ok);
  EXPECT_TRUE(with.certificates.contains("omega"));

  Report bad = cmd_separability(fixture("zhalf_c2.alg"), "e - g1");
  EXPECT_FALSE(find(bad, "separable")->ok);
  EXPECT_NE(find(bad, "separable")->detail.find("NotAnIntegral"), std::string::npos);

  EXPECT_EQ(code_of([&] { cmd_separability(fixture("zhalf_c2.alg"), "e + zz"); }),
            errc::parse_error);
}

// --- smash ---

TEST(CmdSmash, SignAction) {
  Report inv = cmd_smash(fixture("sign_action_q.ma"), "invariants");
  EXPECT_TRUE(inv.all_ok());
  EXPECT_EQ(inv.certificates["invariants"]["rank"].get<size_t>(), 2u);

  Report l44 = cmd_smash(fixture("sign_action_q.ma"), "lemma44");
  EXPECT_TRUE(find(l44, "invariants_match_integral_image")->ok);

  Report sep = cmd_smash(fixture("sign_action_q.ma"), "separability");
  EXPECT_TRUE(find(sep, "cocommutative_mode")->ok);
  EXPECT_TRUE(find(sep, "epsilon_unit_mode")->ok);
  EXPECT_TRUE(find(sep, "separable_over_coefficients")->ok);
  EXPECT_EQ(sep.certificates["mode"].get<std::string>(), "cocommutative");
  EXPECT_TRUE(sep.certificates.contains("omega"));
  // Relative and absolute separability genuinely differ here: the smash
  // product keeps the nilpotent ideal (y, y#g1), so over Q it is not
  // separable even though Omega certifies separability over A.
  ASSERT_NE(find(sep, "separable_over_base_ring"), nullptr);
  EXPECT_FALSE(find(sep, "separable_over_base_ring")->ok);
}

TEST(CmdSmash, MonoidActionTraceOneButNotSeparable) {
  Report t1 = cmd_smash(fixture("z2_zmod3_trivial.ma"), "trace-one");
  EXPECT_TRUE(find(t1, "trace_one")->ok);
  EXPECT_EQ(t1.certificates["t"].get<std::string>(), "x0");
  EXPECT_EQ(t1.certificates["a"].get<std::string>(), "1");

  Report sep = cmd_smash(fixture("z2_zmod3_trivial.ma"), "separability");
  EXPECT_TRUE(find(sep, "smash_modes")->ok);  // no antipode: modes skipped, not failed
  EXPECT_FALSE(find(sep, "separable_over_coefficients")->ok);
  EXPECT_FALSE(find(sep, "separable_over_base_ring")->ok);
  EXPECT_NE(find(sep, "separable_over_base_ring")->detail.find("PROVABLY_NONE"),
            std::string::npos);

  EXPECT_EQ(code_of([&] { cmd_smash(fixture("z2_zmod3_trivial.ma"), "lemma44"); }),
            errc::antipode_required);
}

TEST(CmdSmash, InputErrors) {
  EXPECT_EQ(code_of([&] { cmd_smash(fixture("q_c2.alg"), "invariants"); }),
            errc::parse_error);
  EXPECT_EQ(code_of([&] { cmd_smash(fixture("sign_action_q.ma"), "everything"); }),
            errc::parse_error);
}

// --- families ---

TEST(CmdFamily, BoundedDegreeChecks) {
  Report z4 = cmd_family("rxmodnx", "Z/4", "2", 32);
  EXPECT_TRUE(find(z4, "integral_family")->ok);

  Report z6 = cmd_family("rxmodnx", "Z/6", "3", 16);
  EXPECT_TRUE(find(z6, "integral_family")->ok);

  Report ce = cmd_family("ctrex46", "QxQ", "(1, 0)", 16);
  EXPECT_TRUE(find(ce, "invariants_vanish")->ok);
  EXPECT_NE(find(ce, "invariants_vanish")->detail.find("16"), std::string::npos);

  Report proj = cmd_family("projective", "Z/6", "3", 16);
  EXPECT_TRUE(find(proj, "projective_witness")->ok);

  Report kx = cmd_family("kxkx", "Q", "", 16);
  EXPECT_TRUE(find(kx, "integral_verified")->ok);
  EXPECT_FALSE(kx.certificates["t"].get<std::string>().empty());
}

TEST(CmdFamily, ParameterErrors) {
  EXPECT_EQ(code_of([&] { cmd_family("nosuch", "Q", "", 8); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { cmd_family("rxmodnx", "Z/4", "", 8); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { cmd_family("kxkx", "Q", "1", 8); }), errc::parse_error);
  EXPECT_EQ(code_of([&] { cmd_family("rxmodnx", "Q", "2", 8); }), errc::invalid_modulus);
  EXPECT_EQ(code_of([&] { cmd_family("projective", "GF(5)", "2", 8); }),
            errc::not_idempotent);
  EXPECT_EQ(code_of([&] { cmd_family("kxkx", "Z", "", 8); }), errc::invalid_element);
}

// --- enumeration ---

TEST(CmdEnumerate, SmallOrdersCrossCheck) {
  Report r = cmd_enumerate_semigroups(3);
  EXPECT_TRUE(r.all_ok());
  auto counts = r.certificates["counts"];
  ASSERT_EQ(counts.size(), 3u);
  EXPECT_EQ(counts[0]["semigroups"].get<size_t>(), 1u);
  EXPECT_EQ(counts[1]["semigroups"].get<size_t>(), 8u);
  EXPECT_EQ(counts[2]["semigroups"].get<size_t>(), 113u);

  EXPECT_EQ(code_of([&] { cmd_enumerate_semigroups(5); }), errc::parse_error);
}

// --- determinism ---

TEST(Cli, DeterministicReports) {
  Report a = cmd_integrals(fixture("q_c3.alg"), Side::left);
  Report b = cmd_integrals(fixture("q_c3.alg"), Side::left);
  EXPECT_TRUE(reports_equal(a, b));
  EXPECT_EQ(render_report_text(a), render_report_text(b));

  nlohmann::json ja = report_to_json(a), jb = report_to_json(b);
  ja["timing_ms"] = 0.0;
  jb["timing_ms"] = 0.0;
  EXPECT_EQ(ja.dump(), jb.dump());
}
