#include <gtest/gtest.h>

#include <set>

#include "coreforge/abacus.hpp"
#include "oracles.hpp"

using coreforge::NVector;
using coreforge::Partition;

TEST(Abacus, IsTCore) {
    EXPECT_TRUE(coreforge::is_t_core(Partition({4, 2}), 3));
    EXPECT_FALSE(coreforge::is_t_core(Partition({7, 5, 4, 3, 2}), 3));
    for (int t = 2; t <= 6; ++t) {
        for (int n = 0; n < t; ++n) {
            coreforge::for_each_partition(n, [&](const Partition& p) { EXPECT_TRUE(coreforge::is_t_core(p, t)); });
        }
    }
}

TEST(Abacus, CoreOf) {
    EXPECT_EQ(coreforge::t_core_of(Partition({7, 5, 4, 3, 2}), 3), Partition({4, 2}));
    EXPECT_EQ(coreforge::t_core_of(Partition{}, 4), Partition{});
    EXPECT_EQ(coreforge::t_core_of(Partition{5}, 5), Partition{});
}

TEST(Abacus, Phi2Examples) {
    EXPECT_EQ(coreforge::phi2(Partition({4, 2}), 3), NVector(3, {2, -1, -1}));
    EXPECT_EQ(coreforge::phi2(Partition{}, 5), NVector::zero(5));
    EXPECT_EQ(coreforge::phi2(Partition{4}, 5), NVector(5, {0, 0, 0, 1, -1}));
    EXPECT_EQ(coreforge::phi2_inv(NVector(3, {2, -1, -1})), Partition({4, 2}));
    EXPECT_EQ(coreforge::phi2_inv(NVector::zero(4)), Partition{});
    EXPECT_EQ(coreforge::phi2_inv(NVector(5, {1, 1, 0, -1, -1})), Partition({2, 2}));
    EXPECT_THROW(NVector(3, {1, 0, 0}), std::invalid_argument);
}

TEST(Abacus, Phi1WorkedExample) {
    const auto d = coreforge::phi1(Partition({7, 5, 4, 3, 2}), 3);
    EXPECT_EQ(d.core, Partition({4, 2}));
    ASSERT_EQ(d.quotient.size(), 3u);
    EXPECT_EQ(d.quotient[0], Partition{2});
    EXPECT_EQ(d.quotient[1], Partition({1, 1}));
    EXPECT_EQ(d.quotient[2], Partition{1});
    EXPECT_EQ(coreforge::phi1_inv(d, 3), Partition({7, 5, 4, 3, 2}));

    const auto e = coreforge::phi1(Partition{}, 4);
    EXPECT_EQ(e.core, Partition{});
    EXPECT_EQ(e.quotient, std::vector<Partition>(4));
    EXPECT_EQ(coreforge::phi1_inv(e, 4), Partition{});
}

TEST(Abacus, BgOfNVector) {
    EXPECT_EQ(coreforge::bg_of_nvector(NVector::zero(5)), 0);
    EXPECT_EQ(coreforge::bg_of_nvector(NVector(3, {2, -1, -1})), 0);
    EXPECT_EQ(coreforge::bg_of_nvector(NVector(5, {0, 0, 0, 1, -1})), 0);
    EXPECT_THROW(coreforge::bg_of_nvector(NVector::zero(4)), std::invalid_argument);
}

TEST(Abacus, BgEvenT) {
    EXPECT_EQ(coreforge::bg_even_t(Partition{}, 4), 0);
    EXPECT_EQ(coreforge::bg_even_t(Partition({7, 5, 4, 3, 2}), 2), -1);
    EXPECT_EQ(coreforge::bg_even_t(Partition({3, 1}), 4), 0);
}

TEST(Abacus, BgDecomposition) {
    EXPECT_TRUE(coreforge::bg_decompose_check(Partition({7, 5, 4, 3, 2}), 3));
    EXPECT_TRUE(coreforge::bg_decompose_check(Partition{}, 5));
    for (int n = 0; n <= 16; ++n) {
        coreforge::for_each_partition(n, [&](const Partition& p) {
            for (int t : {3, 5, 7}) ASSERT_TRUE(coreforge::bg_decompose_check(p, t)) << coreforge::to_string(p) << " t=" << t;
        });
    }
}

TEST(Abacus, ParityClassExamples) {
    const NVector z = NVector::zero(5);
    EXPECT_EQ(coreforge::bg_of_parity_class(5, coreforge::parity_class_of(z)), 0);
    const NVector n(5, {0, 0, 0, 1, -1});
    EXPECT_EQ(coreforge::bg_of_parity_class(5, coreforge::parity_class_of(n)), coreforge::bg_of_nvector(n));
}

TEST(AbacusProperty, ParityClassAgreesWithBg) {
    for (int t : {3, 5, 7}) {
        coreforge::for_each_nvector(t, 41, [&](const NVector& n) {
            const auto c = coreforge::parity_class_of(n);
            const int expected = c.tilde ? (((t + 1) / 2) % 2 == 0 ? 1 : -1) * ((t + 1) / 4) : coreforge::bg_of_parity_class(t, c);
            ASSERT_EQ(expected, coreforge::bg_of_nvector(n)) << coreforge::to_string(n);
            ASSERT_EQ(coreforge::bg_of_parity_class(t, c), coreforge::bg_of_nvector(n));
        });
    }
}

TEST(AbacusProperty, CoreTestAgreesWithHookLengths) {
    for (int n = 0; n <= 16; ++n) {
        coreforge::for_each_partition(n, [&](const Partition& p) {
            for (int t = 2; t <= 6; ++t) ASSERT_EQ(coreforge::is_t_core(p, t), oracle::hook_t_core(p, t)) << coreforge::to_string(p) << " t=" << t;
        });
    }
}

TEST(AbacusProperty, CoreOfAgreesWithDiagramStripping) {
    for (int n = 0; n <= 14; ++n) {
        coreforge::for_each_partition(n, [&](const Partition& p) {
            for (int t = 2; t <= 5; ++t) {
                const auto c = coreforge::t_core_of(p, t);
                ASSERT_EQ(c, oracle::diagram_core(p, t));
                ASSERT_EQ(c, coreforge::t_core_of(p, t, coreforge::StripOrder::lowest_first));
                ASSERT_EQ(coreforge::t_core_of(c, t), c);
                ASSERT_TRUE(oracle::hook_t_core(c, t));
            }
        });
    }
}

TEST(AbacusProperty, LatticeEnumerationFindsEveryCore) {
    // The cores of norm < N found through the lattice must be exactly the partitions
    // of norm < N without a t-hook.
    const int N = 19;
    for (int t = 2; t <= 6; ++t) {
        std::set<Partition> brute, lattice;
        for (int n = 0; n < N; ++n) {
            coreforge::for_each_partition(n, [&](const Partition& p) {
                if (oracle::hook_t_core(p, t)) brute.insert(p);
            });
        }
        for (const auto& c : coreforge::t_cores_below(t, N)) lattice.insert(c);
        EXPECT_EQ(brute, lattice) << "t=" << t;
    }
}

TEST(AbacusProperty, Phi2RoundTripsAndNormLaw) {
    for (int t = 2; t <= 7; ++t) {
        coreforge::for_each_nvector(t, 41, [&](const NVector& n) {
            const auto core = coreforge::phi2_inv(n);
            ASSERT_EQ(coreforge::norm(core), coreforge::norm_form(n));
            ASSERT_TRUE(oracle::hook_t_core(core, t));
            ASSERT_EQ(coreforge::phi2(core, t), n);
            // conjugation reverses and negates
            std::vector<std::int64_t> rev(n.coords().rbegin(), n.coords().rend());
            for (auto& x : rev) x = -x;
            ASSERT_EQ(coreforge::phi2(coreforge::conjugate(core), t), NVector(t, rev));
        });
    }
}

TEST(AbacusProperty, Phi1RoundTripAndNormSplit) {
    for (int t = 2; t <= 5; ++t) {
        for (int n = 0; n <= 14; ++n) {
            coreforge::for_each_partition(n, [&](const Partition& p) {
                const auto d = coreforge::phi1(p, t);
                ASSERT_EQ(coreforge::phi1_inv(d, t), p);
                ASSERT_EQ(d.core, oracle::diagram_core(p, t));
                std::int64_t q = 0;
                for (const auto& x : d.quotient) q += coreforge::norm(x);
                ASSERT_EQ(coreforge::norm(d.core) + t * q, n);
            });
        }
    }
}

TEST(AbacusProperty, BgBoundOnCores) {
    for (int t : {3, 5, 7, 9}) {
        std::set<int> seen;
        coreforge::for_each_nvector(t, 61, [&](const NVector& n) {
            const int bg = coreforge::bg_rank(coreforge::phi2_inv(n));
            ASSERT_EQ(bg, coreforge::bg_of_nvector(n));
            ASSERT_GE(bg, coreforge::bg_lower_bound(t));
            ASSERT_LE(bg, coreforge::bg_upper_bound(t));
            seen.insert(bg);
        });
        EXPECT_EQ(*seen.begin(), coreforge::bg_lower_bound(t));
        EXPECT_EQ(*seen.rbegin(), coreforge::bg_upper_bound(t));
    }
}

TEST(AbacusProperty, EvenTBgFormula) {
    for (int n = 0; n <= 14; ++n) {
        coreforge::for_each_partition(n, [&](const Partition& p) {
            for (int t : {2, 4, 6}) ASSERT_EQ(coreforge::bg_even_t(p, t), coreforge::bg_rank(p));
        });
    }
}

TEST(AbacusText, NVectorFormat) {
    EXPECT_EQ(coreforge::to_string(NVector(3, {2, -1, -1})), "3:[2,-1,-1]");
    EXPECT_EQ(coreforge::parse_nvector("3:[2,-1,-1]"), NVector(3, {2, -1, -1}));
    EXPECT_THROW(coreforge::parse_nvector("3:[2,-1]"), std::invalid_argument);
}
