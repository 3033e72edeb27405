#include <gtest/gtest.h>

#include <cstdio>

#include "hahnfield/error.hpp"
#include "hahnfield/session.hpp"
#include "support/transcript.hpp"

using hahn::run_line;
using hahn::SessionContext;

TEST(Session, Tokenize) {
  EXPECT_EQ(hahn::tokenize(R"(val "3*t^{-1/2} + 2"  --bound 3)"),
            (std::vector<std::string>{"val", "3*t^{-1/2} + 2", "--bound", "3"}));
  EXPECT_EQ(hahn::tokenize("  "), std::vector<std::string>{});
  EXPECT_THROW(hahn::tokenize("eval \"1 + t"), hahn::SyntaxError);
}

TEST(Session, ParseCommand) {
  const auto cmd = hahn::parse_command({"ip", "check", "--samples=10", "--seed", "3"});
  EXPECT_EQ(cmd.verb, hahn::Verb::IpCheck);
  EXPECT_EQ(cmd.flags.at("samples"), "10");
  EXPECT_EQ(cmd.flags.at("seed"), "3");
  EXPECT_EQ(hahn::parse_command({"ipa", "--full"}).flags.at("full"), "true");
  EXPECT_THROW(hahn::parse_command({"ipa", "--colour", "red"}), hahn::SyntaxError);
  EXPECT_THROW(hahn::parse_command({"nope"}), hahn::SyntaxError);
  EXPECT_THROW(hahn::parse_command({"inv", "t", "--bound"}), hahn::SyntaxError);
  for (const char* verb : {"eval", "val", "cmp", "floor", "residue", "decomp-add", "decomp-mul", "inv", "root",
                           "classify", "ip-check", "expgroup", "ipa", "axioms", "catalog"}) {
    EXPECT_STREQ(hahn::to_string(hahn::parse_command({verb}).verb), verb);
  }
}

TEST(Session, Examples) {
  SessionContext ctx;
  const auto val = run_line(R"(val "3*t^{-1/2}+2")", ctx);
  EXPECT_EQ(val.text, "-1/2 (at chain point 0)");
  EXPECT_EQ(val.exit_code, hahn::kExitOk);
  EXPECT_EQ(run_line("val 0", ctx).text, "infinity");

  const auto ipa = run_line(R"x(ipa --group "HahnSum(Finite(1); Rat)" --field Rat)x", ctx);
  EXPECT_EQ(ipa.exit_code, 0);
  EXPECT_NE(ipa.text.find("verdict: NoIPA"), std::string::npos);
  EXPECT_NE(ipa.text.find("witness: RankFinite"), std::string::npos);

  const auto axioms = run_line("axioms --bound 1048576", ctx);
  EXPECT_EQ(axioms.exit_code, 0);
  int lines = 0;
  std::size_t at = 0;
  while ((at = axioms.text.find("PASS", at)) != std::string::npos) ++lines, ++at;
  EXPECT_EQ(lines, 5);
}

TEST(Session, ExitCodes) {
  SessionContext ctx;
  EXPECT_EQ(run_line("eval 1 +", ctx).exit_code, hahn::kExitSyntaxError);
  EXPECT_EQ(run_line("residue t^{-1}", ctx).exit_code, hahn::kExitDomainError);
  EXPECT_EQ(run_line("inv t", ctx).exit_code, hahn::kExitSyntaxError);
  EXPECT_EQ(run_line("root t 0 --bound 1", ctx).exit_code, hahn::kExitSyntaxError);
  EXPECT_EQ(run_line("axioms --bound 1", ctx).exit_code, hahn::kExitDomainError);
  EXPECT_EQ(run_line("ipa --field Rat --target RatRoot2", ctx).exit_code, hahn::kExitDomainError);
  EXPECT_EQ(run_line("field Real; group HahnSum(Finite(1); Rat)", ctx).exit_code, hahn::kExitSyntaxError);
  EXPECT_EQ(run_line("# comment", ctx).exit_code, hahn::kExitOk);
  EXPECT_EQ(run_line("", ctx).text, "");
}

TEST(Session, BindingsFollowCarriers) {
  SessionContext ctx;
  EXPECT_EQ(run_line("let x = 1 + t", ctx).text, "x = 1 + t^{1}");
  EXPECT_EQ(run_line("eval x*x", ctx).text, "1 + 2*t^{1} + t^{2}");
  EXPECT_EQ(run_line("let t = 3", ctx).exit_code, hahn::kExitSyntaxError);
  EXPECT_EQ(run_line("field Rat; group HahnSum(Rationals; Rat)", ctx).exit_code, 0);
  EXPECT_TRUE(ctx.bindings().empty());
  EXPECT_EQ(run_line("eval x", ctx).exit_code, hahn::kExitSyntaxError);
  // --group applies to one command only.
  EXPECT_EQ(run_line("eval t^{(1/2, 1)}", ctx).text, "t^{(1/2, 1)}");
  EXPECT_EQ(run_line("eval t^{(1/2, 1)} --group HahnSum(Finite(1);Rat)", ctx).exit_code, hahn::kExitSyntaxError);
  EXPECT_EQ(run_line("eval t^{(1/2, 1)}", ctx).exit_code, 0);
}

TEST(Session, OutFile) {
  SessionContext ctx;
  const std::string path = testing::TempDir() + "hahnfield_cert.txt";
  const auto r = run_line("expgroup --group \"HahnSum(Integers; Rat)\" --out " + path, ctx);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(transcript::read_file(path), r.text + "\n");
  std::remove(path.c_str());
}

TEST(Session, RegressionScript) {
  const std::string script = transcript::read_file(HAHN_TEST_DATA "/regression.hfs");
  const std::string expected = transcript::read_file(HAHN_TEST_DATA "/regression.expected");
  ASSERT_FALSE(expected.empty());
  EXPECT_EQ(transcript::run(script), expected);
}
