#include <gtest/gtest.h>

#include "coreforge/arith.hpp"
#include "oracles.hpp"

using namespace coreforge;

TEST(Arith, Factorize) {
    EXPECT_TRUE(factorize(1).factors.empty());
    EXPECT_EQ(factorize(60).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}}));
    EXPECT_EQ(factorize(121).factors, (std::vector<PrimePower>{{11, 2}}));
    EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(ArithProperty, FactorizationMultipliesBack) {
    for (std::int64_t m = 1; m < 3000; ++m) {
        const auto f = factorize(m);
        std::int64_t prod = 1, prev = 1;
        for (const auto& pp : f.factors) {
            ASSERT_GT(pp.prime, prev);
            ASSERT_TRUE(is_prime(pp.prime));
            prev = pp.prime;
            for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
        }
        ASSERT_EQ(prod, m);
    }
}

TEST(Arith, Legendre) {
    EXPECT_EQ(legendre(1, 5), 1);
    EXPECT_EQ(legendre(2, 5), -1);
    EXPECT_EQ(legendre(11, 5), 1);
    EXPECT_EQ(legendre(19, 5), 1);
    EXPECT_EQ(legendre(10, 5), 0);
    EXPECT_THROW(legendre(1, 9), std::invalid_argument);
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        for (std::int64_t a = -30; a <= 30; ++a) {
            const int expected = a % p == 0 ? 0 : oracle::is_square_mod(((a % p) + p) % p, p) ? 1 : -1;
            ASSERT_EQ(legendre(a, p), expected) << a << " " << p;
        }
    }
}

TEST(Arith, A5Examples) {
    EXPECT_EQ(a5_explicit(0), 1);
    EXPECT_EQ(a5_explicit(4), 5);
    EXPECT_EQ(a5_explicit(6), 6);
}

TEST(ArithProperty, A5MatchesHookCount) {
    for (int n = 0; n < 24; ++n) {
        int count = 0;
        for_each_partition(n, [&](const Partition& p) { count += oracle::hook_t_core(p, 5) ? 1 : 0; });
        ASSERT_EQ(a5_explicit(n), count) << n;
    }
}

TEST(ArithProperty, A5jMatchesHookCountByBg) {
    for (int n = 0; n < 22; ++n) {
        std::map<int, int> by;
        for_each_partition(n, [&](const Partition& p) {
            if (oracle::hook_t_core(p, 5)) ++by[bg_rank(p)];
        });
        for (int j = -1; j <= 1; ++j) ASSERT_EQ(a5j_explicit(j, n), by[j]) << n << " " << j;
    }
}

TEST(Arith, A5jExamples) {
    EXPECT_EQ(a5j_explicit(-1, 3), 1);
    EXPECT_EQ(a5j_explicit(1, 3), 2);
    EXPECT_EQ(a51_closed_4n3(0), 2);
    for (int k = 0; k < 50; ++k) EXPECT_EQ(a5j_explicit(0, 2 * k + 1), 0);
    EXPECT_THROW(a5j_explicit(2, 3), std::invalid_argument);
}

TEST(ArithProperty, ClosedFormForFourNPlusThree) {
    for (int n = 0; n < 300; ++n) ASSERT_EQ(a51_closed_4n3(n), a5j_explicit(1, 4 * n + 3)) << n;
}

TEST(ArithProperty, ResultDependsOnlyOnFactorization) {
    for (std::int64_t n = 0; n < 500; ++n) {
        auto f = factorize(n + 1);
        std::reverse(f.factors.begin(), f.factors.end());
        std::reverse(f.plus_minus_one.begin(), f.plus_minus_one.end());
        std::reverse(f.plus_minus_two.begin(), f.plus_minus_two.end());
        ASSERT_EQ(a5_from_factorization(f), a5_explicit(n));
    }
}

TEST(Arith, HeckeRecurrenceExamples) {
    EXPECT_TRUE(verify_hecke_recurrence(5, 0, 100).passed());
    EXPECT_TRUE(verify_hecke_recurrence(3, 1, 100).passed());
    EXPECT_TRUE(verify_hecke_recurrence(7, -1, 100).passed());
    EXPECT_THROW(verify_hecke_recurrence(2, 0, 10), std::invalid_argument);
}

TEST(Arith, HeckeRecurrenceDetectsCorruption) {
    Series a = Ctj_enumerated(5, 0, 300);
    a[40] += 1;
    const auto r = verify_hecke_recurrence(3, 0, 100, a);
    EXPECT_EQ(r.status, Status::fail);
    ASSERT_TRUE(r.discrepancy.has_value());
}

TEST(Arith, FiveNPlusFour) { EXPECT_TRUE(verify_a5_5n4(60).passed()); }
