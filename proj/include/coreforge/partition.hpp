#pragma once

// Integer partitions and their elementary statistics.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coreforge {

/// A partition stored as its nonincreasing sequence of positive parts.
/// Ordering is lexicographic on the part sequence.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be nonincreasing");
            }
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Drops trailing zeros; the remaining entries must already be nonincreasing.
    static Partition from_padded(std::vector<int> parts) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part `i` (0-based), zero beyond the last part.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::int64_t norm(const Partition& p) {
    std::int64_t s = 0;
    for (int x : p.parts()) s += x;
    return s;
}

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(p.parts().front()), 0);
    for (int x : p.parts()) {
        for (int i = 0; i < x; ++i) ++out[static_cast<std::size_t>(i)];
    }
    return Partition(std::move(out));
}

inline int durfee(const Partition& p) {
    int d = 0;
    while (static_cast<std::size_t>(d) < p.length() && p.parts()[static_cast<std::size_t>(d)] >= d + 1) ++d;
    return d;
}

inline int floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

/// Cell counts of the t-residue diagram: cell in row i, column j has color (j - i) mod t.
inline std::vector<std::int64_t> residue_counts(const Partition& p, int t) {
    if (t < 2) throw std::invalid_argument("residue_counts: t must be at least 2");
    std::vector<std::int64_t> r(static_cast<std::size_t>(t), 0);
    for (std::size_t row = 0; row < p.length(); ++row) {
        const int len = p.parts()[row];
        for (int col = 0; col < len; ++col) {
            ++r[static_cast<std::size_t>(floor_mod(col - static_cast<std::int64_t>(row), t))];
        }
    }
    return r;
}

/// Alternating count of odd parts: sum over j of (-1)^{j+1} [lambda_j odd].
inline int bg_rank(const Partition& p) {
    int s = 0;
    for (std::size_t j = 0; j < p.length(); ++j) {
        if (p.parts()[j] % 2 != 0) s += (j % 2 == 0) ? 1 : -1;
    }
    return s;
}

/// r_0(pi,2) - r_1(pi,2).
inline int bg_rank_from_residues(const Partition& p) {
    const auto r = residue_counts(p, 2);
    return static_cast<int>(r[0] - r[1]);
}

/// Visits every partition of n in lexicographically decreasing order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ...
template <class Visitor>
void for_each_partition(int n, Visitor&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be nonnegative");
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> a{n};
    for (;;) {
        visit(Partition(a));
        // Rightmost part greater than one.
        int rest = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rest;
        }
        if (a.empty()) return;
        const int k = --a.back();
        ++rest;
        while (rest > k) {
            a.push_back(k);
            rest -= k;
        }
        if (rest > 0) a.push_back(rest);
    }
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    s += ']';
    return s;
}

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

// Parses "[a,b,...]" of (possibly negative) integers starting at i.
inline std::vector<std::int64_t> parse_int_list(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != '[') throw std::invalid_argument("expected '['");
    ++i;
    std::vector<std::int64_t> out;
    skip_ws(s, i);
    if (i < s.size() && s[i] == ']') {
        ++i;
        return out;
    }
    for (;;) {
        skip_ws(s, i);
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || s[i] < '0' || s[i] > '9') throw std::invalid_argument("expected integer");
        std::int64_t v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + (s[i] - '0');
            if (v > (std::int64_t{1} << 40)) throw std::invalid_argument("integer out of range");
            ++i;
        }
        out.push_back(neg ? -v : v);
        skip_ws(s, i);
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == ']') {
            ++i;
            return out;
        }
        throw std::invalid_argument("expected ',' or ']'");
    }
}

}  // namespace detail

/// Parses the bracketed text form, e.g. "[7,5,4,3,2]" or "[]".
inline Partition parse_partition(std::string_view text) {
    std::size_t i = 0;
    const auto vals = detail::parse_int_list(text, i);
    detail::skip_ws(text, i);
    if (i != text.size()) throw std::invalid_argument("trailing characters after partition");
    std::vector<int> parts;
    parts.reserve(vals.size());
    for (auto v : vals) parts.push_back(static_cast<int>(v));
    return Partition(std::move(parts));
}

}  // namespace coreforge
