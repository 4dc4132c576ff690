#include <gtest/gtest.h>

#include "coreforge/identities.hpp"
#include "coreforge/io.hpp"

using namespace coreforge;

TEST(Io, SeriesRoundTrip) {
    const Series s = inverse(euler_E(1, 450));  // coefficients beyond 64 bits
    const Json j = to_json(s);
    EXPECT_EQ(j["precision"], 450);
    EXPECT_EQ(j["coeffs"][4], "5");
    EXPECT_EQ(series_from_json(Json::parse(j.dump())), s);
    EXPECT_THROW(series_from_json(Json::parse(R"({"precision": 3, "coeffs": ["1"]})")), std::invalid_argument);
}

TEST(Io, DecompositionRoundTrip) {
    const auto d = phi1(Partition({7, 5, 4, 3, 2}), 3);
    EXPECT_EQ(to_text(to_json(d)), R"({"core": [4, 2], "quotient": [[2], [1, 1], [1]]})");
    EXPECT_EQ(decomposition_from_json(Json::parse(to_json(d).dump())), d);
}

TEST(Io, ReportFields) {
    Series a = Series::one(5), b = a;
    b[2] = 7;
    const auto r = compare_series("6.12", {{"t", "5"}}, a, b, 5);
    const Json j = to_json(r);
    EXPECT_EQ(j["id"], "6.12");
    EXPECT_EQ(j["params"]["t"], "5");
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["discrepancy"]["exponent"], 2);
    EXPECT_EQ(j["discrepancy"]["lhs"], "0");
    EXPECT_EQ(j["discrepancy"]["rhs"], "7");
    const Json ok = to_json(compare_series("6.12", {}, a, a, 5));
    EXPECT_TRUE(ok["discrepancy"].is_null());
    EXPECT_EQ(ok["status"], "pass");
}

TEST(Io, TextRendering) {
    EXPECT_EQ(to_text(Json::parse(R"({"0": 5})")), R"({"0": 5})");
    EXPECT_EQ(to_text(Json::array()), "[]");
    EXPECT_EQ(to_text(Json{{"a", Json::array({1, "x"})}}), R"({"a": [1, "x"]})");
}
