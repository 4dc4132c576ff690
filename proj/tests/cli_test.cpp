#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "coreforge_cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = coreforge::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DecomposeWorkedExample) {
    const auto r = run({"decompose", "[7,5,4,3,2]", "--t", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"core\": [4, 2], \"quotient\": [[2], [1, 1], [1]]}\n");
}

TEST(Cli, Pj) {
    const auto r = run({"pj", "--n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"0\": 5}\n");
    EXPECT_EQ(run({"pj", "--n", "3"}).out, "{\"-1\": 1, \"1\": 2}\n");
}

TEST(Cli, ExpandGoldens) {
    EXPECT_EQ(run({"expand", "E(1)", "--order", "10"}).out,
              "{\"precision\": 10, \"coeffs\": [\"1\", \"-1\", \"-1\", \"0\", \"0\", \"1\", \"0\", \"1\", \"0\", \"0\"]}\n");
    EXPECT_EQ(run({"expand", "1/E(1)", "--order", "8"}).out,
              "{\"precision\": 8, \"coeffs\": [\"1\", \"1\", \"2\", \"3\", \"5\", \"7\", \"11\", \"15\"]}\n");
    EXPECT_EQ(run({"expand", "q^2*psi(1) - 3", "--order", "6"}).out,
              "{\"precision\": 6, \"coeffs\": [\"-3\", \"0\", \"1\", \"1\", \"0\", \"1\"]}\n");
    EXPECT_EQ(run({"expand", "f(+1,-4)", "--order", "8"}).out,
              "{\"precision\": 8, \"coeffs\": [\"1\", \"1\", \"0\", \"0\", \"-1\", \"0\", \"0\", \"-1\"]}\n");
    EXPECT_EQ(run({"expand", "bracket(1,2)^-1", "--order", "5"}).out, run({"expand", "E(2)^2/E(1)^2", "--order", "5"}).out);
    EXPECT_EQ(run({"expand", "(phi(1) - 1)^2", "--order", "6"}).out,
              "{\"precision\": 6, \"coeffs\": [\"0\", \"0\", \"4\", \"0\", \"0\", \"8\"]}\n");
}

TEST(Cli, ExpandDefaultOrderAndEnvironment) {
    const auto r = run({"expand", "E(1)"});
    EXPECT_NE(r.out.find("\"precision\": 50"), std::string::npos);
    ::setenv("COREFORGE_ORDER", "7", 1);
    EXPECT_NE(run({"expand", "E(1)"}).out.find("\"precision\": 7"), std::string::npos);
    EXPECT_NE(run({"expand", "E(1)", "--order", "9"}).out.find("\"precision\": 9"), std::string::npos);
    ::setenv("COREFORGE_ORDER", "x", 1);
    EXPECT_EQ(run({"expand", "E(1)"}).code, 2);
    ::unsetenv("COREFORGE_ORDER");
}

TEST(Cli, ExpandErrorsAreUsageErrors) {
    EXPECT_EQ(run({"expand", "E(", "--order", "5"}).code, 2);
    EXPECT_EQ(run({"expand", "1/q", "--order", "5"}).code, 2);
    EXPECT_EQ(run({"expand", "foo(1)", "--order", "5"}).code, 2);
    EXPECT_EQ(run({"expand", "bracket(3,3)", "--order", "5"}).code, 2);
    EXPECT_EQ(run({"expand", "E(1)", "--order", "0"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"pj", "--n", "4", "--bogus"}).code, 2);
    EXPECT_EQ(run({"verify", "no-such-id"}).code, 2);
    EXPECT_EQ(run({"decompose", "[1,2]", "--t", "3"}).code, 2);
    EXPECT_EQ(run({"orbit", "[3]"}).code, 2);
    EXPECT_EQ(run({"gbg", "--s", "2", "--t", "4"}).code, 2);
    EXPECT_EQ(run({"coeff", "a5j", "2", "3"}).code, 2);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifySingleIdJson) {
    const auto r = run({"verify", "6.12", "--order", "120", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[{\"id\": \"6.12\", \"params\": {}, \"order\": 120, \"status\": \"pass\", \"discrepancy\": null}]\n");
}

TEST(Cli, VerifyTextAndJobsAreDeterministic) {
    const auto a = run({"verify", "6.16a", "--order", "60"});
    const auto b = run({"verify", "6.16a", "--order", "60", "--jobs", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("pass 6.16a p=3 j=-1 order=60"), std::string::npos);
    EXPECT_NE(a.out.find("15 checks, 0 failed"), std::string::npos);
}

TEST(Cli, VerifyTiming) {
    const auto r = run({"verify", "6.2", "--order", "50", "--json", "--timing"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"seconds\""), std::string::npos);
}

TEST(Cli, Orbit) {
    const auto r = run({"orbit", "[4]"});
    EXPECT_EQ(r.code, 0);
    const auto j = coreforge::Json::parse(r.out);
    ASSERT_EQ(j.size(), 5u);
    EXPECT_EQ(j[0]["partition"], coreforge::Json::array({4}));
    EXPECT_EQ(j[1]["partition"], coreforge::Json::array({2, 2}));
    for (int k = 0; k < 5; ++k) {
        EXPECT_EQ(j[k]["norm"], 4);
        EXPECT_EQ(j[k]["bg"], 0);
        EXPECT_EQ(j[k]["crank"], (3 + k) % 5);
    }
}

TEST(Cli, Coefficients) {
    EXPECT_EQ(run({"coeff", "a5", "6"}).out, "6\n");
    EXPECT_EQ(run({"coeff", "a5j", "-1", "3"}).out, "1\n");
    EXPECT_EQ(run({"coeff", "a5j", "1", "3"}).out, "2\n");
    const auto t = run({"table", "a5", "--max", "5", "--csv"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out, "n,enumerated,formula\n0,1,1\n1,1,1\n2,2,2\n3,3,3\n4,5,5\n5,2,2\n");
    const auto tj = coreforge::Json::parse(run({"table", "a5", "--max", "2"}).out);
    EXPECT_EQ(tj[2]["enumerated"], "2");
}

TEST(Cli, Gbg) {
    const auto r = run({"gbg", "--s", "2", "--t", "5", "--order", "80"});
    EXPECT_EQ(r.code, 0);
    const auto j = coreforge::Json::parse(r.out);
    EXPECT_EQ(j["nu"], 3);
    EXPECT_EQ(j["bound"], 3);
    EXPECT_EQ(j["values"], coreforge::Json::array({"[-1]", "[0]", "[1]"}));
    EXPECT_EQ(j["g0"], "[-1]");
    EXPECT_EQ(j["checks"][0]["status"], "pass");
    EXPECT_EQ(j["checks"][1]["status"], "pass");
    const auto even = coreforge::Json::parse(run({"gbg", "--s", "3", "--t", "2", "--order", "30"}).out);
    EXPECT_EQ(even["checks"][0]["status"], "skipped");
}
