#include <gtest/gtest.h>

#include <sstream>

#include "vwreath/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = vwreath::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VMul) {
  const Outcome r = run({"v-mul", "{0->00,10->01,11->1}", "{0->00,10->01,11->1}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{0->000, 10->001, 110->01, 111->1}\n");
}

TEST(Cli, VerbsOnElements) {
  EXPECT_EQ(run({"v-inv", "{0->00,10->01,11->1}"}).out, "{00->0, 01->10, 1->11}\n");
  EXPECT_EQ(run({"v-act", "{0->1,1->0}", "{C:00, P:11}"}).out, "{C:10, P:01}\n");
  EXPECT_EQ(run({"v-slope", "{0->00,10->01,11->1}", "P:11"}).out, "1\n");
  EXPECT_EQ(run({"--group", "Z5", "--twist", "x2", "k-act", "{0->00,10->01,11->1}", "exc{P:=1}"}).out,
            "base{} exc{P:=2}\n");
  EXPECT_EQ(run({"--group", "S3", "k-supp", "base{C:0=(12)} exc{P:0=e}"}).out, "{C:0}\n");
}

TEST(Cli, Centre) {
  const Outcome z2 = run({"g-center", "base{C:=1} exc{} ; {}"});
  EXPECT_EQ(z2.code, 0);
  EXPECT_EQ(z2.out, "centre values {0,1}\ncentral\n");
  const Outcome s3 = run({"--group", "S3", "g-center", "base{C:0=(12)} exc{} ; {}"});
  EXPECT_EQ(s3.code, 1);
  EXPECT_EQ(s3.out, "centre values {e}\nnot central\n");
}

TEST(Cli, ClassifyExitCodes) {
  const Outcome no = run({"classify", "wreath", "cyclic:3", "id", "cyclic:3", "inv"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "NOT-ISO\n");
  const Outcome yes = run({"classify", "wreath", "S3", "id", "S3", "ad((12))"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out.rfind("ISO\n", 0), 0u);
  const Outcome endo = run({"classify", "endo", "Z6", "x3", "Z2", "id"});
  EXPECT_EQ(endo.code, 0);
  EXPECT_NE(endo.out.find("\nISO\n"), std::string::npos);
  const Outcome omega = run({"classify", "omega", "Z3", "id/zero", "Z3", "inv/zero"});
  EXPECT_EQ(omega.code, 1);
  EXPECT_EQ(omega.out, "NO-WITNESS\n");
  EXPECT_EQ(run({"--jobs", "0", "classify", "omega", "S3", "id/zero", "S3", "zero/id"}).code, 0);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-verb"}).code, 2);
  EXPECT_EQ(run({"v-mul", "{0->00}"}).code, 2);
  const Outcome bad = run({"v-inv", "{0->2,1->0}"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("parse error"), std::string::npos);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"classify", "wreath", "Z4", "x2", "Z4", "id"}).code, 2);
}

TEST(Cli, Aut) {
  const Outcome b = run({"--group", "Z4", "aut", "build", "A2(inv) * A3(2)", "base{} exc{P:1=1} ; {0->00,10->01,11->1}"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("validated"), std::string::npos);
  const Outcome f = run({"--group", "Z4", "aut", "factor", "A1({0->1,1->0}) * A3(2) * A6(x2)"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("recovered A1({0->1, 1->0}) * A3(2) * A6([0,2,0,2])"), std::string::npos);
  EXPECT_EQ(run({"--group", "Z4", "aut", "a5-check", "id"}).out, "A5\n");
  EXPECT_EQ(run({"--group", "Z4", "aut", "a5-check", "A3(1)"}).code, 1);
  EXPECT_EQ(run({"--group", "Z2", "rigidity", "decompose", "A1({0->1,1->0})"}).code, 0);
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<std::string> args{"--seed", "7", "--samples", "20", "verify", "all"};
  const Outcome a = run(args);
  const Outcome b = run(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> parallel = args;
  parallel.insert(parallel.begin(), {"--jobs", "0"});
  EXPECT_EQ(run(parallel).out, a.out);
}

TEST(Cli, VerifySingleSuite) {
  const Outcome r = run({"--samples", "10", "verify", "psi-embed"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS  11 psi-embed", 0), 0u);
}
