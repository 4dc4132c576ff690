#include <gtest/gtest.h>

#include <random>

#include "coreforge/cyclotomic.hpp"

using coreforge::CyclotomicDivisor;
using coreforge::CyclotomicInt;

TEST(Cyclotomic, Polynomials) {
    using V = std::vector<std::int64_t>;
    EXPECT_EQ(coreforge::cyclotomic_polynomial(2), (V{1, 1}));
    EXPECT_EQ(coreforge::cyclotomic_polynomial(3), (V{1, 1, 1}));
    EXPECT_EQ(coreforge::cyclotomic_polynomial(4), (V{1, 0, 1}));
    EXPECT_EQ(coreforge::cyclotomic_polynomial(6), (V{1, -1, 1}));
    EXPECT_EQ(coreforge::cyclotomic_polynomial(12), (V{1, 0, -1, 0, 1}));
    for (int s = 2; s <= 30; ++s) {
        int phi = 0;
        for (int k = 1; k <= s; ++k) phi += std::gcd(k, s) == 1 ? 1 : 0;
        EXPECT_EQ(coreforge::euler_phi(s), phi) << s;
    }
}

TEST(Cyclotomic, OmegaPowers) {
    for (int s = 2; s <= 9; ++s) {
        EXPECT_EQ(CyclotomicInt::omega_pow(s, s), CyclotomicInt::integer(s, 1));
        EXPECT_EQ(CyclotomicInt::omega_pow(s, -1) * CyclotomicInt::omega_pow(s, 1), CyclotomicInt::integer(s, 1));
        CyclotomicInt sum = CyclotomicInt::integer(s, 0);
        for (int k = 0; k < s; ++k) sum = sum + CyclotomicInt::omega_pow(s, k);
        EXPECT_TRUE(sum.is_zero()) << s;
    }
    EXPECT_EQ(CyclotomicInt::omega_pow(2, 1), CyclotomicInt::integer(2, -1));
}

TEST(CyclotomicProperty, RingLaws) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int s : {3, 4, 5, 6, 7, 9, 12}) {
        auto rnd = [&] {
            std::vector<std::int64_t> c(static_cast<std::size_t>(s));
            for (auto& x : c) x = d(rng);
            return CyclotomicInt(s, c);
        };
        for (int it = 0; it < 50; ++it) {
            const auto a = rnd(), b = rnd(), c = rnd();
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_TRUE((a - a).is_zero());
        }
    }
}

TEST(Cyclotomic, ExactDivision) {
    for (int s : {3, 5, 7}) {
        const auto one = CyclotomicInt::integer(s, 1);
        const auto den = (one - CyclotomicInt::omega_pow(s, 1)) * (one - CyclotomicInt::omega_pow(s, 2));
        const CyclotomicDivisor div(den);
        const auto x = CyclotomicInt(s, {3, -1, 4});
        EXPECT_EQ(div.divide(den * x), x);
        // the divisor is not a unit
        EXPECT_THROW(div.divide(one), std::logic_error);
    }
}

TEST(Cyclotomic, Text) {
    EXPECT_EQ(coreforge::to_string(CyclotomicInt(3, {1, 2, 3})), "[-2,-1]");
    EXPECT_THROW(CyclotomicInt(3, {1}) + CyclotomicInt(5, {1}), std::invalid_argument);
}
