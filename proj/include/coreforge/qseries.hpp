#pragma once

// Series constructors: Euler products and eta-quotients, theta functions,
// q-Pochhammer brackets, bilateral Lambert sums and the Hecke operator.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coreforge/series.hpp"

namespace coreforge {

/// sign * q^exponent.
struct SignedMonomial {
    int sign = 1;
    std::int64_t exponent = 1;

    SignedMonomial() = default;
    SignedMonomial(int s, std::int64_t e) : sign(s), exponent(e) {
        if (s != 1 && s != -1) throw std::invalid_argument("SignedMonomial: sign must be +1 or -1");
    }

    friend SignedMonomial operator*(const SignedMonomial& a, const SignedMonomial& b) {
        return SignedMonomial(a.sign * b.sign, a.exponent + b.exponent);
    }
    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

inline SignedMonomial qpow(std::int64_t e) { return SignedMonomial(1, e); }
inline SignedMonomial neg_qpow(std::int64_t e) { return SignedMonomial(-1, e); }

/// prod_{j >= 1} (1 - q^{kj}) modulo q^N.
inline Series euler_E(std::int64_t k, std::size_t N) {
    if (k < 1) throw std::invalid_argument("euler_E: k must be positive");
    Series r = Series::one(N);
    const auto step = static_cast<std::size_t>(k);
    for (std::size_t e = step; e < N; e += step) {
        // In-place multiplication by (1 - q^e), high to low.
        for (std::size_t i = N - 1; i >= e; --i) {
            if (r[i - e] != 0) r[i] -= r[i - e];
            if (i == e) break;
        }
    }
    return r;
}

struct EtaFactor {
    std::int64_t k;         // E(q^k)
    std::int64_t exponent;  // raised to this power
};

/// q^prefactor * prod E(q^k)^{e_k} modulo q^N.
inline Series eta_quotient(const std::vector<EtaFactor>& factors, std::size_t prefactor, std::size_t N) {
    Series r(N);
    if (prefactor >= N) return r;
    const std::size_t body = N - prefactor;
    Series num = Series::one(body), den = Series::one(body);
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        const Series e = euler_E(f.k, body);
        if (f.exponent > 0) num *= pow(e, f.exponent);
        else den *= pow(e, -f.exponent);
    }
    Series b = num / den;
    for (std::size_t i = 0; i < body; ++i) r[i + prefactor] = b[i];
    return r;
}

namespace detail {

inline int pow_sign(int sign, std::int64_t e) { return (sign < 0 && (e % 2 != 0)) ? -1 : 1; }

// Exponent of the n-th term of f(a, b): A n(n+1)/2 + B n(n-1)/2.
inline std::int64_t theta_exponent(std::int64_t A, std::int64_t B, std::int64_t n) {
    return A * (n * (n + 1) / 2) + B * (n * (n - 1) / 2);
}

}  // namespace detail

/// f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2} for exponents below `order`.
/// Requires a.exponent + b.exponent >= 1; negative exponents are allowed.
inline LaurentSeries theta_f_laurent(const SignedMonomial& a, const SignedMonomial& b, std::int64_t order) {
    const std::int64_t A = a.exponent, B = b.exponent;
    if (A + B < 1) throw std::invalid_argument("theta_f: ab must have positive exponent");
    // The exponent is convex in n with minimum near n0 = (B - A) / (2(A + B)).
    const std::int64_t center = (B - A) / (2 * (A + B));
    std::int64_t lowest = detail::theta_exponent(A, B, center);
    for (std::int64_t d = -2; d <= 2; ++d) lowest = std::min(lowest, detail::theta_exponent(A, B, center + d));
    const std::int64_t v = std::min<std::int64_t>(0, lowest);
    if (order <= v) throw std::invalid_argument("theta_f: order below the valuation");
    Series body(static_cast<std::size_t>(order - v));
    auto add_term = [&](std::int64_t n) {
        const auto e = detail::theta_exponent(A, B, n);
        if (e >= order) return false;
        const int s = detail::pow_sign(a.sign, n * (n + 1) / 2) * detail::pow_sign(b.sign, n * (n - 1) / 2);
        body[static_cast<std::size_t>(e - v)] += s;
        return true;
    };
    add_term(center);
    for (std::int64_t n = center + 1; add_term(n) || n <= center + 2; ++n) {}
    for (std::int64_t n = center - 1; add_term(n) || n >= center - 2; --n) {}
    return LaurentSeries(v, std::move(body));
}

/// f(a, b) as a power series; every term must have a nonnegative exponent.
inline Series theta_f(const SignedMonomial& a, const SignedMonomial& b, std::size_t N) {
    return theta_f_laurent(a, b, static_cast<std::int64_t>(N)).to_series();
}

/// (x; s q^k)_inf for x = sign * q^e with any integer e and s = step_sign, known below `order`.
/// Factors with nonpositive exponent are rewritten as 1 - c q^{-m} = -c q^{-m} (1 - c q^m).
inline LaurentSeries pochhammer_inf(const SignedMonomial& x, std::int64_t k, std::int64_t order, int step_sign = 1) {
    if (k < 1) throw std::invalid_argument("pochhammer_inf: step must be positive");
    if (step_sign != 1 && step_sign != -1) throw std::invalid_argument("pochhammer_inf: step sign must be +1 or -1");
    std::int64_t shift = 0;
    Integer scale = 1;
    std::vector<std::int64_t> positive;  // factors (1 - c q^m), m > 0
    std::vector<int> signs;
    for (std::int64_t j = 0;; ++j) {
        const std::int64_t e = x.exponent + k * j;
        const int c = (step_sign < 0 && j % 2 != 0) ? -x.sign : x.sign;
        if (e == 0) {
            if (c == 1) return LaurentSeries(0, Series(static_cast<std::size_t>(std::max<std::int64_t>(order, 1))));
            scale *= 2;
        } else if (e < 0) {
            scale *= -c;
            shift += e;
            positive.push_back(-e);
            signs.push_back(c);
        } else {
            if (e >= order - shift) break;
            positive.push_back(e);
            signs.push_back(c);
        }
    }
    const std::int64_t top = order - shift;
    if (top <= 0) throw std::invalid_argument("pochhammer_inf: order below the valuation");
    Series body = Series::one(static_cast<std::size_t>(top));
    const auto N = static_cast<std::size_t>(top);
    for (std::size_t f = 0; f < positive.size(); ++f) {
        const auto m = static_cast<std::size_t>(positive[f]);
        if (m >= N) continue;
        for (std::size_t i = N - 1; i >= m; --i) {
            if (body[i - m] != 0) {
                if (signs[f] == 1) body[i] -= body[i - m];
                else body[i] += body[i - m];
            }
            if (i == m) break;
        }
    }
    body *= scale;
    return LaurentSeries(shift, std::move(body));
}

/// Product form (ab, -a, -b; ab)_inf of f(a, b).
inline LaurentSeries theta_f_product(const SignedMonomial& a, const SignedMonomial& b, std::int64_t order) {
    const SignedMonomial ab = a * b;
    if (ab.exponent < 1) throw std::invalid_argument("theta_f_product: ab must have positive exponent");
    // The valuation of each factor is at most zero, so computing each to `order` minus
    // the others' valuations keeps the product exact below `order`.
    const auto p1 = pochhammer_inf(ab, ab.exponent, order, ab.sign);
    const auto p2 = pochhammer_inf(SignedMonomial(-a.sign, a.exponent), ab.exponent, order, ab.sign);
    const auto p3 = pochhammer_inf(SignedMonomial(-b.sign, b.exponent), ab.exponent, order, ab.sign);
    const std::int64_t vsum = p1.valuation() + p2.valuation() + p3.valuation();
    const std::int64_t need = order - vsum;
    auto widen = [&](const SignedMonomial& x, const LaurentSeries& p) {
        return pochhammer_inf(x, ab.exponent, need + p.valuation(), ab.sign);
    };
    return widen(ab, p1) * widen(SignedMonomial(-a.sign, a.exponent), p2) * widen(SignedMonomial(-b.sign, b.exponent), p3);
}

/// [x; q^k]_inf = (x, q^k / x; q^k)_inf.
inline LaurentSeries bracket_laurent(const SignedMonomial& x, std::int64_t k, std::int64_t order) {
    const SignedMonomial y(x.sign, k - x.exponent);
    const auto p1 = pochhammer_inf(x, k, order);
    const auto p2 = pochhammer_inf(y, k, order);
    const auto need = order - p1.valuation() - p2.valuation();
    return pochhammer_inf(x, k, need + p1.valuation()) * pochhammer_inf(y, k, need + p2.valuation());
}

/// [q^a; q^k]_inf = (q^a; q^k)_inf (q^{k-a}; q^k)_inf.
inline Series bracket(std::int64_t a, std::int64_t k, std::size_t N) {
    if (k < 1) throw std::invalid_argument("bracket: step must be positive");
    if (a % k == 0) throw std::invalid_argument("bracket: exponent divisible by the step gives a vanishing factor");
    return bracket_laurent(qpow(a), k, static_cast<std::int64_t>(N)).to_series();
}

/// Sum of q^{k n(n+1)/2} over n >= 0.  Cross-checked against E^2(q^{2k}) / E(q^k).
inline Series psi(std::int64_t k, std::size_t N) {
    if (k < 1) throw std::invalid_argument("psi: k must be positive");
    Series r(N);
    for (std::int64_t n = 0; static_cast<std::size_t>(k * n * (n + 1) / 2) < N; ++n) r[static_cast<std::size_t>(k * n * (n + 1) / 2)] += 1;
    if (r != eta_quotient({{2 * k, 2}, {k, -1}}, 0, N)) throw std::logic_error("psi: sum and product forms disagree");
    return r;
}

/// f(q^k, q^k) = sum of q^{k n^2} over Z.
inline Series phi(std::int64_t k, std::size_t N) {
    if (k < 1) throw std::invalid_argument("phi: k must be positive");
    return theta_f(qpow(k), qpow(k), N);
}

/// Bilateral Lambert sums.
enum class LambertFamily {
    cores5,           // sum_{i=1,2} sum_n (-1)^{i+1} q^{5n+i-1} / (1 - q^{5n+i})^2
    r_function,       // sum_{i=0,1} sum_n (-1)^i q^{5n+i} (1 + q^{10n+2i+1}) / (1 - q^{10n+2i+1})^2
    psi_squared,      // sum_n q^n / (1 - q^{4n+2})
    r_function_even,  // sum_{i=0,1} sum_n (-1)^i q^{10n+2i} (1 + q^{20n+4i+2}) / (1 - q^{20n+4i+2})^2
};

namespace detail {

enum class LambertKind { square, plus_square, linear };

// sign * q^e * K(q^m), with K(x) = 1/(1-x)^2, (1+x)/(1-x)^2 or 1/(1-x); m != 0.
inline void add_lambert_term(Series& out, int sign, std::int64_t e, std::int64_t m, LambertKind kind) {
    if (m == 0) throw std::logic_error("lambert: vanishing denominator");
    if (m < 0) {
        const std::int64_t M = -m;
        switch (kind) {
            case LambertKind::square: e += 2 * M; break;
            case LambertKind::plus_square: e += M; break;
            case LambertKind::linear:
                e += M;
                sign = -sign;
                break;
        }
        m = M;
    }
    if (e < 0) throw std::logic_error("lambert: negative exponent after folding");
    const auto N = static_cast<std::int64_t>(out.precision());
    for (std::int64_t j = 0; e + j * m < N; ++j) {
        std::int64_t c = 1;
        if (kind == LambertKind::square) c = j + 1;
        if (kind == LambertKind::plus_square) c = 2 * j + 1;
        out[static_cast<std::size_t>(e + j * m)] += sign * c;
    }
}

}  // namespace detail

inline Series lambert_bilateral(LambertFamily family, std::size_t N) {
    using detail::LambertKind;
    Series r(N);
    const auto bound = static_cast<std::int64_t>(N) + 2;
    for (std::int64_t n = -bound; n <= bound; ++n) {
        // Terms whose folded leading exponent reaches N contribute nothing; the
        // folding routine simply adds no coefficients for them.
        switch (family) {
            case LambertFamily::cores5:
                detail::add_lambert_term(r, 1, 5 * n, 5 * n + 1, LambertKind::square);
                detail::add_lambert_term(r, -1, 5 * n + 1, 5 * n + 2, LambertKind::square);
                break;
            case LambertFamily::r_function:
                detail::add_lambert_term(r, 1, 5 * n, 10 * n + 1, LambertKind::plus_square);
                detail::add_lambert_term(r, -1, 5 * n + 1, 10 * n + 3, LambertKind::plus_square);
                break;
            case LambertFamily::psi_squared:
                detail::add_lambert_term(r, 1, n, 4 * n + 2, LambertKind::linear);
                break;
            case LambertFamily::r_function_even:
                detail::add_lambert_term(r, 1, 10 * n, 20 * n + 2, LambertKind::plus_square);
                detail::add_lambert_term(r, -1, 10 * n + 2, 20 * n + 6, LambertKind::plus_square);
                break;
        }
    }
    return r;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// (a/5).
inline int legendre5(std::int64_t a) {
    switch (((a % 5) + 5) % 5) {
        case 1:
        case 4: return 1;
        case 2:
        case 3: return -1;
        default: return 0;
    }
}

/// T_p(sum a_n q^n) = sum a_{pn} q^n + p (p/5) sum a_n q^{pn}.
/// The result is known for n <= (N-1)/p.
inline Series hecke_T(std::int64_t p, const Series& f) {
    if (!is_prime(p)) throw std::invalid_argument("hecke_T: p must be prime");
    const std::size_t N = f.precision();
    const auto pp = static_cast<std::size_t>(p);
    const std::size_t out = (N - 1) / pp + 1;
    const Integer weight = Integer(p) * legendre5(p);
    Series r(out);
    for (std::size_t n = 0; n < out; ++n) {
        r[n] = f[pp * n];
        if (n % pp == 0) r[n] += weight * f[n / pp];
    }
    return r;
}

}  // namespace coreforge
