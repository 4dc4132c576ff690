#pragma once

// Small expression language over truncated series, used by `coreforge expand`.
//
//   expr    := term (('+' | '-') term)*
//   term    := power (('*' | '/') power)*
//   power   := unary ('^' ['-'] int)?
//   unary   := '-' unary | atom
//   atom    := int | 'q' | E(k) | psi(k) | phi(k) | f(±a, ±b) | bracket(a, k) | '(' expr ')'
//
// f(+a,-b) is f(q^a, -q^b); a bare sign defaults to '+'.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coreforge/qseries.hpp"
#include "coreforge/series.hpp"

namespace coreforge {

class ExprError : public std::invalid_argument {
public:
    ExprError(const std::string& what, std::size_t pos) : std::invalid_argument(what + " at position " + std::to_string(pos)) {}
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view src, std::size_t N) : s_(src), n_(N) {}

    Series parse() {
        Series r = expr();
        skip();
        if (i_ != s_.size()) throw ExprError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
        return r;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw ExprError(std::string("expected '") + c + "'", i_);
    }

    std::int64_t integer() {
        skip();
        const std::size_t start = i_;
        std::int64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > (INT64_MAX - 9) / 10) throw ExprError("integer too large", start);
            v = v * 10 + (s_[i_++] - '0');
        }
        if (i_ == start) throw ExprError("expected integer", start);
        return v;
    }

    std::int64_t signed_integer() {
        if (eat('-')) return -integer();
        eat('+');
        return integer();
    }

    SignedMonomial signed_monomial() {
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        return SignedMonomial(sign, integer());
    }

    std::string word() {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
        return std::string(s_.substr(start, i_ - start));
    }

    Series expr() {
        Series r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    Series term() {
        Series r = power();
        for (;;) {
            if (eat('*')) {
                r = r * power();
            } else if (eat('/')) {
                const std::size_t at = i_;
                const Series d = power();
                if (d[0] != 1 && d[0] != -1) throw ExprError("divisor needs constant term +1 or -1", at);
                r = r / d;
            } else {
                return r;
            }
        }
    }

    Series power() {
        Series base = unary();
        if (!eat('^')) return base;
        const std::size_t at = i_;
        const std::int64_t e = signed_integer();
        if (e < 0 && base[0] != 1 && base[0] != -1) throw ExprError("negative power needs constant term +1 or -1", at);
        return pow(base, e);
    }

    Series unary() {
        if (eat('-')) return -unary();
        return atom();
    }

    std::int64_t positive_arg(const std::string& name) {
        const std::size_t at = i_;
        const auto k = integer();
        if (k < 1) throw ExprError(name + " needs a positive argument", at);
        return k;
    }

    Series atom() {
        skip();
        if (i_ >= s_.size()) throw ExprError("unexpected end of input", i_);
        if (eat('(')) {
            Series r = expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[i_]))) return Series::monomial(integer(), 0, n_);
        const std::size_t at = i_;
        const std::string w = word();
        if (w == "q") return Series::monomial(1, 1, n_);
        if (w.empty()) throw ExprError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
        expect('(');
        Series r;
        if (w == "E") {
            r = euler_E(positive_arg(w), n_);
        } else if (w == "psi") {
            r = psi(positive_arg(w), n_);
        } else if (w == "phi") {
            r = phi(positive_arg(w), n_);
        } else if (w == "f") {
            const auto a = signed_monomial();
            expect(',');
            const auto b = signed_monomial();
            if (a.exponent + b.exponent < 1) throw ExprError("f needs a positive total exponent", at);
            r = theta_f(a, b, n_);
        } else if (w == "bracket") {
            const auto a = signed_integer();
            expect(',');
            const auto k = positive_arg(w);
            if (a % k == 0) throw ExprError("bracket exponent divisible by its step", at);
            r = bracket(a, k, n_);
        } else {
            throw ExprError("unknown function '" + w + "'", at);
        }
        expect(')');
        return r;
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t i_ = 0;
};

}  // namespace detail

/// Evaluates `src` to precision N; throws ExprError on malformed input.
inline Series expand(std::string_view src, std::size_t N) {
    if (N == 0) throw std::invalid_argument("expand: order must be positive");
    return detail::ExprParser(src, N).parse();
}

}  // namespace coreforge
