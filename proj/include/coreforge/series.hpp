#pragma once

// Truncated power series with exact integer coefficients.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coreforge {

using Integer = boost::multiprecision::cpp_int;

/// sum_{k < precision} c_k q^k, known modulo q^precision.
class Series {
public:
    Series() = default;

    explicit Series(std::size_t precision) : c_(precision) {
        if (precision == 0) throw std::invalid_argument("Series: precision must be positive");
    }

    explicit Series(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: precision must be positive");
    }

    static Series one(std::size_t precision) { return monomial(1, 0, precision); }

    static Series monomial(const Integer& coeff, std::size_t exponent, std::size_t precision) {
        Series s(precision);
        if (exponent < precision) s.c_[exponent] = coeff;
        return s;
    }

    std::size_t precision() const noexcept { return c_.size(); }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }

    const Integer& operator[](std::size_t k) const { return c_.at(k); }
    Integer& operator[](std::size_t k) { return c_.at(k); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x == 0; });
    }

    Series truncated(std::size_t precision) const {
        if (precision == 0 || precision > c_.size()) throw std::invalid_argument("truncated: precision out of range");
        return Series(std::vector<Integer>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(precision)));
    }

    /// Multiplies by q^k, keeping the precision.
    Series shifted(std::size_t k) const {
        Series r(c_.size());
        for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// f(q^k) with the precision stretched to `precision` (at most k * current).
    Series substituted(std::size_t k, std::size_t precision) const {
        if (k == 0) throw std::invalid_argument("substituted: k must be positive");
        if (precision > k * (c_.size() - 1) + 1) throw std::invalid_argument("substituted: precision not determined");
        Series r(precision);
        for (std::size_t i = 0; i * k < precision; ++i) r.c_[i * k] = c_[i];
        return r;
    }

    Series& operator+=(const Series& o) {
        shrink_to(o.precision());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    Series& operator-=(const Series& o) {
        shrink_to(o.precision());
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    Series& operator*=(const Integer& k) {
        for (auto& x : c_) x *= k;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Integer& k) { return a *= k; }
    friend Series operator*(const Integer& k, Series a) { return a *= k; }
    friend Series operator-(Series a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.precision(), b.precision());
        Series r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend bool operator==(const Series&, const Series&) = default;

private:
    void shrink_to(std::size_t n) {
        if (n < c_.size()) c_.resize(n);
    }

    std::vector<Integer> c_;
};

/// Multiplicative inverse; the constant term must be +1 or -1.
inline Series inverse(const Series& a) {
    const Integer& c0 = a[0];
    if (c0 != 1 && c0 != -1) throw std::domain_error("inverse: constant term must be a unit");
    const std::size_t n = a.precision();
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k < n; ++k) {
        if (a[k] != 0) support.push_back(k);
    }
    Series r(n);
    r[0] = c0;
    for (std::size_t m = 1; m < n; ++m) {
        Integer s = 0;
        for (auto k : support) {
            if (k > m) break;
            s += a[k] * r[m - k];
        }
        r[m] = -s * c0;
    }
    return r;
}

inline Series operator/(const Series& a, const Series& b) { return a * inverse(b); }

/// Integer power; negative exponents go through `inverse`.
inline Series pow(const Series& a, std::int64_t e) {
    Series base = e < 0 ? inverse(a) : a;
    std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    Series r = Series::one(a.precision());
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

/// (f(q) + f(-q)) / 2.
inline Series even_part(const Series& f) {
    Series r = f;
    for (std::size_t k = 1; k < r.precision(); k += 2) r[k] = 0;
    return r;
}

/// q^valuation * body, for expansions whose lowest exponent may be negative.
/// Coefficients are known for exponents below valuation + body.precision().
class LaurentSeries {
public:
    LaurentSeries(std::int64_t valuation, Series body) : v_(valuation), body_(std::move(body)) {}

    static LaurentSeries zero(std::int64_t order) {
        // Anchored at valuation 0 when possible so that sums keep their range.
        const std::int64_t v = std::min<std::int64_t>(0, order - 1);
        return LaurentSeries(v, Series(static_cast<std::size_t>(order - v)));
    }

    std::int64_t valuation() const noexcept { return v_; }
    const Series& body() const noexcept { return body_; }

    /// Exponents below this bound are exact.
    std::int64_t order() const noexcept { return v_ + static_cast<std::int64_t>(body_.precision()); }

    Integer coeff(std::int64_t e) const {
        if (e >= order()) throw std::out_of_range("coefficient beyond known order");
        if (e < v_) return 0;
        return body_[static_cast<std::size_t>(e - v_)];
    }

    LaurentSeries shifted(std::int64_t k) const { return LaurentSeries(v_ + k, body_); }

    /// Restricted to exponents in [lo, hi); lo may be below the valuation.
    LaurentSeries window(std::int64_t lo, std::int64_t hi) const {
        if (hi > order() || lo >= hi) throw std::invalid_argument("window outside known range");
        Series s(static_cast<std::size_t>(hi - lo));
        for (auto e = std::max(lo, v_); e < hi; ++e) s[static_cast<std::size_t>(e - lo)] = coeff(e);
        return LaurentSeries(lo, std::move(s));
    }

    /// Plain series over exponents [0, order); fails if a negative exponent has a nonzero coefficient.
    Series to_series() const {
        if (order() <= 0) throw std::domain_error("to_series: nothing known at nonnegative exponents");
        for (auto e = v_; e < 0; ++e) {
            if (coeff(e) != 0) throw std::domain_error("to_series: negative exponent present");
        }
        return window(0, order()).body_;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        const auto lo = std::min(a.v_, b.v_);
        const auto hi = std::min(a.order(), b.order());
        if (hi <= lo) throw std::domain_error("sum has no known coefficients");
        Series s = a.window(lo, hi).body_ + b.window(lo, hi).body_;
        return LaurentSeries(lo, std::move(s));
    }

    friend LaurentSeries operator-(const LaurentSeries& a) { return LaurentSeries(a.v_, -a.body_); }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        return LaurentSeries(a.v_ + b.v_, a.body_ * b.body_);
    }

    friend LaurentSeries operator*(const Integer& k, const LaurentSeries& a) { return LaurentSeries(a.v_, a.body_ * k); }

private:
    std::int64_t v_;
    Series body_;
};

inline LaurentSeries to_laurent(const Series& s) { return LaurentSeries(0, s); }

}  // namespace coreforge
