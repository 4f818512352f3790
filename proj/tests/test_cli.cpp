#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 5 && a.ends_with(".spec")) a = std::string(CUNTZ_TEST_DATA) + "/" + a;
    else if (a.ends_with(".assign")) a = std::string(CUNTZ_TEST_DATA) + "/" + a;
  std::ostringstream out;
  std::ostringstream err;
  const int code = cuntz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifySimple) {
  const Outcome r = run({"classify", "--spec", "e23.spec"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "SimplePurelyInfinite\n"
            "exponent matrix (rows: primes, columns: generators)\n"
            "  2: 1 0\n"
            "  3: 0 1\n"
            "rank 2\n"
            "dimension function injective\n");
}

TEST(Cli, ClassifyTensorCircle) {
  const Outcome r = run({"classify", "--spec", "e24.spec"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "TensorCircle(2)\n"
            "exponent matrix (rows: primes, columns: generators)\n"
            "  2: 1 2\n"
            "rank 1\n"
            "dimension function not injective\n"
            "kernel vector (2,-1)\n"
            "witness s=(2,0) t=(0,1)\n"
            "l=2 a=1 b=2\n");
  EXPECT_EQ(run({"classify", "--spec", "e48.spec"}).out.substr(0, 16), "TensorCircle(2)\n");
  EXPECT_EQ(run({"classify", "--spec", "e15.spec"}).out.substr(0, 16), "TensorCircle(5)\n");
  EXPECT_EQ(run({"classify", "--spec", "rot4.spec"}).out.substr(0, 8), "Unknown\n");
}

TEST(Cli, ClassifyJson) {
  const Outcome r = run({"classify", "--spec", "e23.spec", "--format", "json-lines"});
  EXPECT_EQ(r.out,
            R"({"exponents":[[1,0],[0,1]],"injective":true,"primes":[2,3],"rank":2,"verdict":"SimplePurelyInfinite"})"
            "\n");
}

TEST(Cli, Equals) {
  Outcome r = run({"equals", "--spec", "e24.spec", "I", "e(1,0;0)*e(1,0;0)' + e(1,0;1)*e(1,0;1)'"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run({"equals", "--spec", "e23.spec", "e(1,0;0)", "e(1,0;1)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false\n");
  r = run({"equals", "--spec", "e24.spec", "--format", "json-lines", "I", "e(1,0;0)*e(1,0;0)' + e(1,0;1)*e(1,0;1)'"});
  EXPECT_EQ(r.out, "{\"equal\":true}\n");
}

TEST(Cli, Normalize) {
  Outcome r = run({"normalize", "--spec", "e23.spec", "e(1,0;1)*e(0,1;2)'"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "degree (1,-1) bidegree (1,0) (0,1) shape 2x3\n  [1,2] 1\n");
  r = run({"normalize", "--spec", "rot4.spec", "e(0,1;0)*e(1,0;0) - zeta(4)*e(1,0;0)*e(0,1;0)"});
  EXPECT_EQ(r.out, "0\n");
  r = run({"normalize", "--spec", "e23.spec", "--format", "json-lines", "e(1,0;1)*e(0,1;2)'"});
  EXPECT_EQ(r.out,
            R"({"cols":3,"degree":[1,-1],"entries":[[1,2,"1"]],"left_level":[1,0],"right_level":[0,1],"rows":2})"
            "\n");
}

TEST(Cli, ExpectAndAlpha) {
  Outcome r = run({"expect", "--spec", "e23.spec", "e(1,0;0)*e(0,1;0)' + e(1,1;0)*e(1,1;0)'"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "e(1,1;0)*e(1,1;0)'\n");
  r = run({"alpha", "--spec", "e23.spec", "(1,0)", "e(0,1;0)*e(0,1;0)'"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "e(1,1;0)*e(1,1;0)' + e(1,1;3)*e(1,1;3)'\n");
}

TEST(Cli, Eval) {
  Outcome r = run({"eval", "--spec", "e24.spec", "--level", "4", "e(2,0;0) - e(0,1;0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "level 4: zero matrix\n");
  r = run({"eval", "--spec", "e23.spec", "--level", "3", "e(0,1;0)"});
  EXPECT_EQ(r.out, "level 3 -> 9\n9 3 3\n0 0 1\n1 1 1\n2 2 1\n");
  r = run({"eval", "--spec", "e24.spec", "--level", "4", "--lambda", "i,1", "e(2,0;0) - e(0,1;0)"});
  EXPECT_EQ(r.out, "level 4 -> 16\n16 4 4\n0 0 -2\n1 1 -2\n2 2 -2\n3 3 -2\n");
  r = run({"eval", "--spec", "e24.spec", "--level", "4", "--format", "json-lines", "e(2,0;0) - e(0,1;0)"});
  EXPECT_EQ(r.out, "{\"level_in\":4,\"zero\":true}\n");
}

TEST(Cli, EvalErrors) {
  Outcome r = run({"eval", "--spec", "e23.spec", "--level", "5", "e(0,1;0)'"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err, "error: level 5 is not divisible by 3; minimal valid level is 3\n");
  r = run({"eval", "--spec", "rot4.spec", "--level", "1", "I"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("untwisted"), std::string::npos);
}

TEST(Cli, Witness) {
  Outcome r = run({"witness", "--spec", "e24.spec"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "s=(2,0) t=(0,1) dim 4\n"
            "b = -e(0,1;0) + e(2,0;0)\n"
            "lambda = (i,1)\n"
            "level 1: S(b) zero, T(b) nonzero\n"
            "level 2: S(b) zero, T(b) nonzero\n"
            "level 4: S(b) zero, T(b) nonzero\n"
            "witness verified\n");
  r = run({"witness", "--spec", "e23.spec"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "dimension function injective: no witness\n");
}

TEST(Cli, Kill) {
  Outcome r = run({"kill", "--spec", "e23.spec", "e(1,0;0)", "e(0,1;0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "c=(1,1)\n"
            "w in fiber (0,6), dim 729, 1 nonzero entries\n"
            "steps 6 (6 swapped)\n"
            "w = e(0,6;243)\n"
            "annihilation at level 13122: zero\n");
  r = run({"kill", "--spec", "rot4.spec", "e(1,0;0)", "e(0,1;0)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("hypothesis violated: ", 0), 0u);
  r = run({"kill", "--spec", "e23.spec", "e(1,0;0)"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Iso) {
  Outcome r = run({"iso", "2", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "E = E(2,3), F = E(2,6)\n"
            "forward psi: F -> O_E relations ok (38 checked)\n"
            "backward phi: E -> O_F relations ok (17 checked)\n"
            "roundtrip true\n"
            "surjectivity (a+b <= 2) true\n");
  r = run({"iso", "2", "3", "--format", "json-lines"});
  EXPECT_EQ(r.out,
            R"({"E":"E(2,3), rational scalars","F":"E(2,6), rational scalars","backward_relations":true,)"
            R"("forward_relations":true,"reason":"","roundtrip":true,"surjectivity":true})"
            "\n");
}

TEST(Cli, Relations) {
  Outcome r = run({"relations", "--spec", "e23.spec", "canon23.assign", "e(1,1;3)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "checked 17 relations, 0 violated\ne(1,1;3) -> e(1,1;3)\n");
  r = run({"relations", "--spec", "e23.spec", "--order", "2,1", "canon23.assign", "e(1,1;3)", "e(2,1;7)"});
  EXPECT_EQ(r.out, "checked 17 relations, 0 violated\ne(1,1;3) -> e(1,1;3)\ne(2,1;7) -> e(2,1;7)\n");
  r = run({"relations", "--spec", "e23.spec", "bad23.assign"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out,
            "checked 17 relations, 6 violated\n"
            "  U(1,0)* U(1,1) != 0\n"
            "  sum_i U(1,i) U(1,i)* != 1\n"
            "  U(1,0) U(2,0) != U(2,0) U(1,0)\n"
            "  U(1,0) U(2,1) != U(2,0) U(1,1)\n"
            "  U(1,0) U(2,2) != U(2,1) U(1,0)\n"
            "  U(1,1) U(2,1) != U(2,2) U(1,0)\n");
}

TEST(Cli, Selftest) {
  const Outcome r = run({"selftest"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ok   E(2,3): mul_basis associativity\n"), std::string::npos);
  EXPECT_TRUE(r.out.ends_with("selftest: 53 passed, 0 failed\n")) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"classify", "--spec", "nope.spec"}).code, 2);
  Outcome r = run({"normalize", "--spec", "e23.spec", "e(1,0;7)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err, "error: at position 6: index 7 out of range for fiber (1,0) of dimension 2\n");
  EXPECT_EQ(run({"normalize", "--spec", "e23.spec", "--format", "xml", "I"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
