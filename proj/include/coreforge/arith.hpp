#pragma once

// Trial-division factorization, Legendre symbols, and the closed forms for the
// number of 5-cores (graded and ungraded by BG-rank).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coreforge/cores.hpp"
#include "coreforge/qseries.hpp"
#include "coreforge/report.hpp"

namespace coreforge {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::int64_t value = 1;
    std::vector<PrimePower> factors;  // increasing primes

    int d = 0;                       // exponent of 2
    int c = 0;                       // exponent of 5
    std::vector<PrimePower> plus_minus_one;  // primes = +-1 mod 5
    std::vector<PrimePower> plus_minus_two;  // odd primes = +-2 mod 5
};

inline Factorization factorize(std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("factorize: m must be positive");
    Factorization f;
    f.value = m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (m > 1) f.factors.push_back({m, 1});
    for (const auto& pp : f.factors) {
        if (pp.prime == 2) {
            f.d = pp.exponent;
        } else if (pp.prime == 5) {
            f.c = pp.exponent;
        } else if (pp.prime % 5 == 1 || pp.prime % 5 == 4) {
            f.plus_minus_one.push_back(pp);
        } else {
            f.plus_minus_two.push_back(pp);
        }
    }
    return f;
}

namespace detail {

inline Integer ipow(std::int64_t base, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline Integer exact_div(const Integer& a, const Integer& b, const char* where) {
    if (b == 0 || a % b != 0) throw std::logic_error(std::string(where) + ": inexact division");
    return a / b;
}

// 5^c * prod (p^{a+1}-1)/(p-1) * prod (q^{b+1}+(-1)^b)/(q+1).
inline Integer odd_part_product(const Factorization& f) {
    Integer r = ipow(5, f.c);
    for (const auto& pp : f.plus_minus_one) {
        r *= exact_div(ipow(pp.prime, pp.exponent + 1) - 1, pp.prime - 1, "a5");
    }
    for (const auto& pp : f.plus_minus_two) {
        const int sign = pp.exponent % 2 == 0 ? 1 : -1;
        r *= exact_div(ipow(pp.prime, pp.exponent + 1) + sign, pp.prime + 1, "a5");
    }
    return r;
}

}  // namespace detail

/// Euler's criterion; p must be an odd prime.
inline int legendre(std::int64_t a, std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    const std::int64_t r = ((a % p) + p) % p;
    if (r == 0) return 0;
    std::int64_t result = 1, base = r, e = (p - 1) / 2;
    while (e) {
        if (e & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % p);
        base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % p);
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

/// a_5(n) from the factorization of n + 1.
inline Integer a5_from_factorization(const Factorization& f) {
    const int sign = f.d % 2 == 0 ? 1 : -1;
    return detail::exact_div(detail::ipow(2, f.d + 1) + sign, 3, "a5") * detail::odd_part_product(f);
}

inline Integer a5_explicit(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("a5_explicit: n must be nonnegative");
    return a5_from_factorization(factorize(n + 1));
}

/// Number of 5-cores of n with BG-rank j, for j in {-1, 0, 1}.
inline Integer a5j_explicit(int j, std::int64_t n) {
    if (j < -1 || j > 1) throw std::invalid_argument("a5j_explicit: j must be -1, 0 or 1");
    if (n < 0) throw std::invalid_argument("a5j_explicit: n must be nonnegative");
    switch (j) {
        case 0: return n % 2 == 0 ? a5_explicit(n) : Integer(0);
        case -1: return n % 4 == 3 ? a5_explicit(n / 4) : Integer(0);
        default:
            if (n % 4 == 1) return a5_explicit(2 * (n / 4));
            if (n % 4 == 3) return a5_explicit(n / 4) + a5_explicit(2 * (n / 4) + 1);
            return 0;
    }
}

/// a_{5,1}(4n+3) = 2^{d+1} 5^c prod(...) prod(...), d and c from n + 1.
inline Integer a51_closed_4n3(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("a51_closed_4n3: n must be nonnegative");
    const auto f = factorize(n + 1);
    return detail::ipow(2, f.d + 1) * detail::odd_part_product(f);
}

/// a(pn+p-1) + p (p/5) a((n+1)/p - 1) = (p + (p/5)) a(n) for n < N, on the given
/// coefficients (which must reach index pN - 1).
inline VerificationReport verify_hecke_recurrence(std::int64_t p, int j, std::int64_t N, const Series& a) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("verify_hecke_recurrence: p must be an odd prime");
    auto r = make_report("hecke", {{"p", std::to_string(p)}, {"j", std::to_string(j)}}, N);
    if (static_cast<std::int64_t>(a.precision()) < p * N) throw std::invalid_argument("verify_hecke_recurrence: coefficients too short");
    const int leg = legendre5(p);
    for (std::int64_t n = 0; n < N; ++n) {
        Integer lhs = a[static_cast<std::size_t>(p * n + p - 1)];
        if ((n + 1) % p == 0) lhs += p * leg * a[static_cast<std::size_t>((n + 1) / p - 1)];
        Integer rhs = (p + leg) * a[static_cast<std::size_t>(n)];
        if (lhs != rhs) {
            record_mismatch(r, n, lhs, rhs);
            break;
        }
    }
    return r;
}

inline VerificationReport verify_hecke_recurrence(std::int64_t p, int j, std::int64_t N) {
    return verify_hecke_recurrence(p, j, N, Ctj_enumerated(5, j, static_cast<std::size_t>(p * N)));
}

/// a_5(5n+4) = 5 a_5(n) for n < N, by the closed form and by enumeration.
inline VerificationReport verify_a5_5n4(std::int64_t N) {
    auto r = make_report("6.30", {}, N);
    const auto a = core_series(5, static_cast<std::size_t>(5 * N));
    for (std::int64_t n = 0; n < N; ++n) {
        const Integer& big = a[static_cast<std::size_t>(5 * n + 4)];
        const Integer five_small = 5 * a[static_cast<std::size_t>(n)];
        if (big != five_small) {
            r.note = "enumeration";
            record_mismatch(r, n, big, five_small);
            break;
        }
        const Integer f_big = a5_explicit(5 * n + 4), f_small = 5 * a5_explicit(n);
        if (f_big != f_small) {
            r.note = "closed form";
            record_mismatch(r, n, f_big, f_small);
            break;
        }
    }
    return r;
}

}  // namespace coreforge
