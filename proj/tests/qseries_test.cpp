#include <gtest/gtest.h>

#include "coreforge/abacus.hpp"
#include "coreforge/qseries.hpp"
#include "oracles.hpp"

using namespace coreforge;

namespace {
// Pentagonal-number expansion of E(q), written independently of the product.
Series pentagonal(std::size_t N) {
    Series s(N);
    for (std::int64_t k = -100; k <= 100; ++k) {
        const std::int64_t e = k * (3 * k - 1) / 2;
        if (e >= 0 && e < static_cast<std::int64_t>(N)) s[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    return s;
}

Series triangular(std::int64_t k, std::size_t N) {
    Series s(N);
    for (std::int64_t n = 0; k * n * (n + 1) / 2 < static_cast<std::int64_t>(N); ++n) s[static_cast<std::size_t>(k * n * (n + 1) / 2)] = 1;
    return s;
}
}  // namespace

TEST(QSeries, EulerProductMatchesPentagonalNumbers) {
    EXPECT_EQ(euler_E(1, 300), pentagonal(300));
    const Series e3 = euler_E(3, 90);
    for (std::size_t i = 0; i < 90; ++i) {
        if (i % 3 != 0) EXPECT_EQ(e3[i], 0);
        else EXPECT_EQ(e3[i], pentagonal(30)[i / 3]);
    }
}

TEST(QSeries, EtaQuotientExamples) {
    EXPECT_EQ(eta_quotient({}, 0, 10), Series::one(10));
    // 5-cores counted by hook lengths.
    const Series a5 = eta_quotient({{5, 5}, {1, -1}}, 0, 22);
    for (int n = 0; n < 22; ++n) {
        int count = 0;
        for_each_partition(n, [&](const Partition& p) { count += oracle::hook_t_core(p, 5) ? 1 : 0; });
        EXPECT_EQ(a5[static_cast<std::size_t>(n)], count) << n;
    }
    const std::vector<int> head{1, 1, 2, 3, 5, 2};
    for (std::size_t i = 0; i < head.size(); ++i) EXPECT_EQ(a5[i], head[i]);
    const Series F5 = eta_quotient({{10, 1}, {5, 2}, {2, 3}, {1, -2}}, 0, 6);
    const std::vector<int> Fhead{1, 2, 2, 4, 5, 4};
    for (std::size_t i = 0; i < Fhead.size(); ++i) EXPECT_EQ(F5[i], Fhead[i]);
    EXPECT_EQ(eta_quotient({{20, 5}, {4, -1}}, 3, 10)[3], 1);
}

TEST(QSeries, ThetaExamples) {
    Series phi_sq(100);
    for (std::int64_t n = -10; n <= 10; ++n) {
        if (n * n < 100) phi_sq[static_cast<std::size_t>(n * n)] += 1;
    }
    EXPECT_EQ(theta_f(qpow(1), qpow(1), 100), phi_sq);
    EXPECT_EQ(phi(1, 100), phi_sq);
    EXPECT_EQ(theta_f(qpow(1), qpow(3), 100), triangular(1, 100));
    EXPECT_EQ(psi(1, 100), triangular(1, 100));
    EXPECT_EQ(psi(3, 100), triangular(3, 100));
    EXPECT_EQ(pow(psi(1, 50), 2)[0], 1);
}

TEST(QSeries, ThetaSumEqualsProductForSmallMonomials) {
    for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
            for (int ea = 0; ea <= 12; ++ea) {
                for (int eb = 0; eb <= 12; ++eb) {
                    if (ea + eb < 1) continue;
                    const SignedMonomial a(sa, ea), b(sb, eb);
                    const auto sum = theta_f_laurent(a, b, 150);
                    const auto prod = theta_f_product(a, b, 150);
                    for (std::int64_t e = std::min(sum.valuation(), prod.valuation()); e < 150; ++e) {
                        ASSERT_EQ(sum.coeff(e), prod.coeff(e)) << sa << " " << ea << " " << sb << " " << eb << " at " << e;
                    }
                }
            }
        }
    }
}

TEST(QSeries, ThetaWithNegativeExponent) {
    // f(q^-1, q^3) = f(q^3, q^-1) and both forms agree.
    const auto a = theta_f_laurent(qpow(-1), qpow(3), 60), b = theta_f_laurent(qpow(3), qpow(-1), 60);
    const auto c = theta_f_product(qpow(-1), qpow(3), 60);
    for (std::int64_t e = -5; e < 60; ++e) {
        EXPECT_EQ(a.coeff(e), b.coeff(e));
        EXPECT_EQ(a.coeff(e), c.coeff(e));
    }
}

TEST(QSeries, PochhammerSignedStep) {
    // (x; -q)_inf = (x; q^2)_inf (-xq; q^2)_inf
    const auto lhs = pochhammer_inf(qpow(1), 1, 60, -1);
    const auto rhs = pochhammer_inf(qpow(1), 2, 60) * pochhammer_inf(neg_qpow(2), 2, 60);
    for (std::int64_t e = 0; e < 60; ++e) EXPECT_EQ(lhs.coeff(e), rhs.coeff(e));
}

TEST(QSeries, JacobiTripleProduct) {
    for (std::int64_t k : {1, 2, 3}) {
        const std::int64_t N = 200;
        const auto a = pochhammer_inf(qpow(2), 2, N + 20), b = pochhammer_inf(neg_qpow(1 + k), 2, N + 20),
                   c = pochhammer_inf(neg_qpow(1 - k), 2, N + 20);
        const auto prod = a * b * c;
        for (std::int64_t e = -10; e < N; ++e) {
            Integer direct = 0;
            for (std::int64_t n = -40; n <= 40; ++n) direct += (n * n + k * n == e) ? 1 : 0;
            ASSERT_EQ(prod.coeff(e), direct) << "k=" << k << " e=" << e;
        }
    }
}

TEST(QSeries, Brackets) {
    const std::size_t N = 120;
    EXPECT_EQ(bracket(1, 2, N), eta_quotient({{1, 2}, {2, -2}}, 0, N));
    EXPECT_EQ(bracket(1, 3, N) * euler_E(3, N), euler_E(1, N));
    EXPECT_EQ(bracket(2, 7, N)[0], 1);
    EXPECT_THROW(bracket(6, 3, N), std::invalid_argument);
    // a general exponent: [q^8; q^5] = -q^-3 [q^3; q^5]
    const auto g = bracket_laurent(qpow(8), 5, 60);
    const auto base = bracket_laurent(qpow(3), 5, 70);
    for (std::int64_t e = -3; e < 60; ++e) EXPECT_EQ(g.coeff(e), -base.coeff(e + 3));
}

TEST(QSeries, LambertFamilies) {
    const std::size_t N = 300;
    EXPECT_EQ(lambert_bilateral(LambertFamily::cores5, N), eta_quotient({{5, 5}, {1, -1}}, 0, N));
    EXPECT_EQ(lambert_bilateral(LambertFamily::psi_squared, 200), pow(psi(2, 200), 2));
    // the n = 0, i = 1 term alone is 1/(1-q)^2
    Series sq(10);
    for (std::size_t i = 0; i < 10; ++i) sq[i] = static_cast<int>(i) + 1;
    EXPECT_EQ(pow(Series::one(10) - Series::monomial(1, 1, 10), -2), sq);
}

TEST(QSeries, HeckeOperator) {
    const std::size_t N = 400;
    const Series f = eta_quotient({{5, 5}, {1, -1}}, 1, N);
    const Series t2 = hecke_T(2, f);
    EXPECT_EQ(t2, f.truncated(t2.precision()));
    const Series t3 = hecke_T(3, f);
    EXPECT_EQ(t3, f.truncated(t3.precision()) * Integer(2));
    EXPECT_TRUE(hecke_T(7, Series(50)).is_zero());
    EXPECT_THROW(hecke_T(4, f), std::invalid_argument);
}

TEST(QSeries, Legendre5Table) {
    EXPECT_EQ(legendre5(1), 1);
    EXPECT_EQ(legendre5(-1), 1);
    EXPECT_EQ(legendre5(2), -1);
    EXPECT_EQ(legendre5(-2), -1);
    EXPECT_EQ(legendre5(5), 0);
    EXPECT_EQ(legendre5(11), 1);
    EXPECT_EQ(legendre5(19), 1);
}

TEST(QSeries, PsiRejectsBadArguments) {
    EXPECT_THROW(psi(0, 10), std::invalid_argument);
    EXPECT_THROW(euler_E(0, 10), std::invalid_argument);
}
