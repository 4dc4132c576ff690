#pragma once

// Elements of Z[w_s], w_s a primitive s-th root of unity, stored as integer
// polynomials of degree < phi(s) reduced modulo the s-th cyclotomic polynomial.

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coreforge {

namespace detail {

using Poly = std::vector<std::int64_t>;  // coefficient of x^k at index k

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by a monic divisor; the remainder must vanish.
inline Poly divide_monic_exact(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("divide_monic_exact: degree too small");
    Poly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        const std::int64_t c = a[k];
        q[k - db] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("divide_monic_exact: nonzero remainder");
    return q;
}

inline Poly cyclotomic_poly_uncached(int s);

inline const Poly& cyclotomic_poly(int s) {
    static std::map<int, Poly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(s);
        if (it != cache.end()) return it->second;
    }
    Poly p = cyclotomic_poly_uncached(s);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(s, std::move(p)).first->second;
}

// x^s - 1 divided by Phi_d for every proper divisor d of s.
inline Poly cyclotomic_poly_uncached(int s) {
    Poly p(static_cast<std::size_t>(s) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(s)] = 1;
    for (int d = 1; d < s; ++d) {
        if (s % d == 0) p = divide_monic_exact(p, cyclotomic_poly(d));
    }
    return p;
}

}  // namespace detail

/// The s-th cyclotomic polynomial, constant term first.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(int s) {
    if (s < 1) throw std::invalid_argument("cyclotomic_polynomial: s must be positive");
    return detail::cyclotomic_poly(s);
}

inline int euler_phi(int s) { return static_cast<int>(cyclotomic_polynomial(s).size()) - 1; }

class CyclotomicInt {
public:
    CyclotomicInt() = default;

    /// Reduces an arbitrary integer polynomial in w_s.
    CyclotomicInt(int s, std::vector<std::int64_t> poly) : s_(s) {
        if (s < 2) throw std::invalid_argument("CyclotomicInt: s must be at least 2");
        const auto& phi = cyclotomic_polynomial(s);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t k = poly.size(); k-- > deg;) {
            const std::int64_t c = poly[k];
            if (c == 0) continue;
            for (std::size_t i = 0; i <= deg; ++i) {
                poly[k - deg + i] = detail::checked_add(poly[k - deg + i], -detail::checked_mul(c, phi[i]));
            }
        }
        poly.resize(deg, 0);
        c_ = std::move(poly);
    }

    static CyclotomicInt integer(int s, std::int64_t v) { return CyclotomicInt(s, {v}); }

    /// w_s^k for any integer k.
    static CyclotomicInt omega_pow(int s, std::int64_t k) {
        std::vector<std::int64_t> p(static_cast<std::size_t>(((k % s) + s) % s) + 1, 0);
        p.back() = 1;
        return CyclotomicInt(s, std::move(p));
    }

    int s() const noexcept { return s_; }

    /// Coordinates in the basis 1, w, ..., w^{phi(s)-1}.
    const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (auto x : c_) {
            if (x != 0) return false;
        }
        return true;
    }

    friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
        same_ring(a, b);
        auto r = a.c_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::checked_add(r[i], b.c_[i]);
        return CyclotomicInt(a.s_, std::move(r));
    }

    friend CyclotomicInt operator-(const CyclotomicInt& a) {
        auto r = a.c_;
        for (auto& x : r) x = detail::checked_mul(x, -1);
        return CyclotomicInt(a.s_, std::move(r));
    }

    friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) { return a + (-b); }

    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
        same_ring(a, b);
        std::vector<std::int64_t> r(a.c_.size() + b.c_.size(), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
            }
        }
        return CyclotomicInt(a.s_, std::move(r));
    }

    friend CyclotomicInt operator*(std::int64_t k, const CyclotomicInt& a) { return CyclotomicInt::integer(a.s_, k) * a; }

    friend auto operator<=>(const CyclotomicInt&, const CyclotomicInt&) = default;
    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

private:
    static void same_ring(const CyclotomicInt& a, const CyclotomicInt& b) {
        if (a.s_ != b.s_) throw std::invalid_argument("CyclotomicInt: mismatched rings");
    }

    int s_ = 2;
    std::vector<std::int64_t> c_{0};
};

inline std::string to_string(const CyclotomicInt& z) {
    std::string out = "[";
    for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(z.coeffs()[i]);
    }
    return out + "]";
}

/// Exact division by a fixed nonzero element d. The multiplication-by-d matrix M
/// is inverted once over Q and stored as an integer matrix A with M^{-1} = A / L.
class CyclotomicDivisor {
public:
    explicit CyclotomicDivisor(const CyclotomicInt& d) : s_(d.s()) {
        using boost::multiprecision::cpp_rational;
        using boost::multiprecision::cpp_int;
        const int n = euler_phi(s_);
        const auto un = static_cast<std::size_t>(n);
        // Column k of M is d * w^k.
        std::vector<std::vector<cpp_rational>> m(un, std::vector<cpp_rational>(2 * un, 0));
        for (std::size_t k = 0; k < un; ++k) {
            const auto col = d * CyclotomicInt::omega_pow(s_, static_cast<std::int64_t>(k));
            for (std::size_t i = 0; i < un; ++i) m[i][k] = col.coeffs()[i];
            m[k][un + k] = 1;
        }
        for (std::size_t c = 0; c < un; ++c) {
            std::size_t piv = c;
            while (piv < un && m[piv][c] == 0) ++piv;
            if (piv == un) throw std::domain_error("CyclotomicDivisor: divisor is zero");
            std::swap(m[c], m[piv]);
            const cpp_rational inv = 1 / m[c][c];
            for (auto& x : m[c]) x *= inv;
            for (std::size_t r = 0; r < un; ++r) {
                if (r == c || m[r][c] == 0) continue;
                const cpp_rational f = m[r][c];
                for (std::size_t k = 0; k < 2 * un; ++k) m[r][k] -= f * m[c][k];
            }
        }
        cpp_int lcm = 1;
        for (std::size_t i = 0; i < un; ++i) {
            for (std::size_t k = 0; k < un; ++k) lcm = boost::multiprecision::lcm(lcm, denominator(m[i][un + k]));
        }
        denom_ = static_cast<std::int64_t>(lcm);
        adj_.assign(un, std::vector<std::int64_t>(un, 0));
        for (std::size_t i = 0; i < un; ++i) {
            for (std::size_t k = 0; k < un; ++k) {
                const cpp_rational v = m[i][un + k] * lcm;
                adj_[i][k] = static_cast<std::int64_t>(numerator(v));
            }
        }
    }

    /// a / d; throws logic_error when d does not divide a in Z[w_s].
    CyclotomicInt divide(const CyclotomicInt& a) const {
        if (a.s() != s_) throw std::invalid_argument("CyclotomicDivisor: mismatched rings");
        std::vector<std::int64_t> x(adj_.size(), 0);
        for (std::size_t i = 0; i < adj_.size(); ++i) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < adj_.size(); ++k) acc = detail::checked_add(acc, detail::checked_mul(adj_[i][k], a.coeffs()[k]));
            if (acc % denom_ != 0) throw std::logic_error("CyclotomicDivisor: inexact division");
            x[i] = acc / denom_;
        }
        return CyclotomicInt(s_, std::move(x));
    }

private:
    int s_;
    std::int64_t denom_ = 1;
    std::vector<std::vector<std::int64_t>> adj_;
};

}  // namespace coreforge
