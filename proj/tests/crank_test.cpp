#include <gtest/gtest.h>

#include "coreforge/crank.hpp"
#include "oracles.hpp"

using namespace coreforge;

TEST(Crank, Crank5Examples) {
    EXPECT_EQ(crank5(Partition{}), 1);
    EXPECT_EQ(crank5(Partition{4}), 3);
    EXPECT_EQ(crank5(Partition({2, 2})), 4);
}

TEST(Crank, AlphaExamples) {
    EXPECT_EQ(alpha_of(NVector(5, {0, 0, 0, 1, -1})), AlphaVector({0, 0, 0, 1, 0}));
    EXPECT_EQ(alpha_of(NVector(5, {1, 1, 0, -1, -1})), AlphaVector({0, 0, 0, 0, 1}));
    EXPECT_EQ(alpha_inv(AlphaVector({0, 0, 0, 1, 0})), NVector(5, {0, 0, 0, 1, -1}));
    EXPECT_EQ(alpha_inv(AlphaVector({1, 0, 0, 0, 0})), NVector(5, {1, -1, 0, 0, 0}));
    EXPECT_THROW(AlphaVector({0, 0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(alpha_of(NVector::zero(5)), std::invalid_argument);
}

TEST(Crank, QFormAndCrankFromAlpha) {
    EXPECT_EQ(q_form(AlphaVector({0, 0, 0, 1, 0})), 1);
    EXPECT_EQ(q_form(AlphaVector({1, 0, 0, 0, 0})), 1);
    EXPECT_EQ(q_form(AlphaVector({0, 0, 0, 0, 1})), 1);
    EXPECT_EQ(crank_from_alpha(AlphaVector({0, 0, 0, 1, 0})), 3);
    EXPECT_EQ(crank_from_alpha(AlphaVector({0, 0, 0, 0, 1})), 4);
    EXPECT_EQ(crank_from_alpha(AlphaVector({1, 0, 0, 0, 0})), 0);
}

TEST(Crank, BgFromPhiExample) {
    EXPECT_EQ(bg_from_phi(PhiImage{AlphaVector({0, 0, 0, 1, 0}), {}}), 0);
}

TEST(Crank, OrbitOpExample) {
    EXPECT_EQ(orbit_op(Partition{4}), Partition({2, 2}));
    EXPECT_THROW(orbit_op(Partition{3}), std::invalid_argument);
}

TEST(Crank, CountPj) {
    EXPECT_EQ(count_pj(4), (std::map<int, std::int64_t>{{0, 5}}));
    EXPECT_EQ(count_pj(1), (std::map<int, std::int64_t>{{1, 1}}));
    EXPECT_EQ(count_pj(3), (std::map<int, std::int64_t>{{1, 2}, {-1, 1}}));
}

TEST(Crank, LiftExample) {
    const NVector l = lift_5core(NVector::zero(5));
    EXPECT_EQ(l, NVector(5, {1, 1, 0, -1, -1}));
    const Partition c = phi2_inv(l);
    EXPECT_EQ(c, Partition({2, 2}));
    EXPECT_EQ(bg_rank(c), 0);
    EXPECT_EQ(crank5(c), 4);
}

TEST(CrankProperty, AlphaCoordinatesOnCores) {
    for_each_nvector(5, 200, [&](const NVector& n) {
        const Partition core = phi2_inv(n);
        if (norm(core) % 5 != 4) return;
        const AlphaVector a = alpha_of(n);
        ASSERT_EQ(alpha_inv(a), n);
        ASSERT_EQ(5 * q_form(a) - 1, norm(core));
        ASSERT_EQ(crank_from_alpha(a), crank5(core));
        ASSERT_EQ(bg_from_phi(PhiImage{a, {}}), bg_rank(core));
        // C1 advances the crank by one
        ASSERT_EQ(crank_from_alpha(a.rotated()), (crank5(core) + 1) % 5);
        ASSERT_EQ(q_form(a.rotated()), q_form(a));
    });
}

TEST(CrankProperty, PipelineOnPartitionsOf5nPlus4) {
    for (int n = 0; n <= 3; ++n) {
        for_each_partition(5 * n + 4, [&](const Partition& p) {
            const auto img = big_phi(p);
            ASSERT_EQ(big_phi_inv(img), p);
            ASSERT_EQ(bg_from_phi(img), bg_rank(p));
            Partition cur = p;
            for (int k = 0; k < 5; ++k) {
                const Partition next = orbit_op(cur);
                ASSERT_EQ(norm(next), norm(p));
                ASSERT_EQ(bg_rank(next), bg_rank(p));
                ASSERT_EQ(crank5(next), (crank5(cur) + 1) % 5);
                cur = next;
            }
            ASSERT_EQ(cur, p);
        });
    }
}

TEST(Crank, TheoremSmallCases) {
    for (int n = 0; n <= 5; ++n) {
        const auto rep = verify_theorem(n);
        EXPECT_TRUE(rep.ok) << rep.failure;
        std::int64_t total = 0;
        for (const auto& [j, c] : rep.counts) {
            EXPECT_EQ(c % 5, 0);
            total += c;
        }
        EXPECT_EQ(total, oracle::partition_counts(5 * n + 5)[static_cast<std::size_t>(5 * n + 4)]);
        EXPECT_EQ(static_cast<std::int64_t>(rep.orbits.size()) * 5, total);
        for (const auto& o : rep.orbits) {
            ASSERT_EQ(o.members.size(), 5u);
            for (const auto& m : o.members) EXPECT_FALSE(m < o.members.front());
        }
    }
}

TEST(Crank, TheoremCountsMatchBruteForce) {
    const auto rep = verify_theorem(2);
    EXPECT_EQ(rep.counts, count_pj(14));
}
