#pragma once

// Brute-force references that share no code with the library: diagram hook lengths,
// coin-change partition counts, trial quadratic residues.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "coreforge/partition.hpp"

namespace oracle {

/// Number of partitions of each n < N by the coin-change recurrence.
inline std::vector<std::int64_t> partition_counts(int N) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(N), 0);
    p[0] = 1;
    for (int part = 1; part < N; ++part) {
        for (int n = part; n < N; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
    }
    return p;
}

/// Column lengths read off the diagram.
inline std::vector<int> columns(const std::vector<int>& rows) {
    std::vector<int> c(rows.empty() ? 0 : static_cast<std::size_t>(rows[0]), 0);
    for (int r : rows) {
        for (int j = 0; j < r; ++j) ++c[static_cast<std::size_t>(j)];
    }
    return c;
}

/// A partition is a t-core iff no cell has hook length t.
inline bool hook_t_core(const coreforge::Partition& p, int t) {
    const auto& rows = p.parts();
    const auto cols = columns(rows);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            const int hook = rows[i] - j + cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            if (hook == t) return false;
        }
    }
    return true;
}

/// Cell (i, j) has colour (j - i) mod t.
inline std::vector<std::int64_t> diagram_residues(const coreforge::Partition& p, int t) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(t), 0);
    for (std::size_t i = 0; i < p.length(); ++i) {
        for (int j = 0; j < p.parts()[i]; ++j) ++r[static_cast<std::size_t>(((j - static_cast<int>(i)) % t + t) % t)];
    }
    return r;
}

/// t-core by sliding first-column hook lengths down by t until none can move,
/// rebuilding the rows after every step.
inline coreforge::Partition diagram_core(coreforge::Partition p, int t) {
    for (;;) {
        std::vector<int> rows = p.parts();
        const std::size_t len = rows.size();
        std::vector<int> beta(len);
        for (std::size_t i = 0; i < len; ++i) beta[i] = rows[i] + static_cast<int>(len - 1 - i);
        bool moved = false;
        for (std::size_t i = 0; i < len && !moved; ++i) {
            const int target = beta[i] - t;
            if (target < 0) continue;
            bool taken = false;
            for (int b : beta) taken = taken || b == target;
            if (!taken) {
                beta[i] = target;
                moved = true;
            }
        }
        if (!moved) return p;
        std::sort(beta.begin(), beta.end(), std::greater<int>());
        std::vector<int> out;
        for (std::size_t i = 0; i < len; ++i) {
            const int part = beta[i] - static_cast<int>(len - 1 - i);
            if (part > 0) out.push_back(part);
        }
        p = coreforge::Partition(out);
    }
}

inline bool is_square_mod(std::int64_t a, std::int64_t p) {
    for (std::int64_t x = 0; x < p; ++x) {
        if ((x * x - a) % p == 0) return true;
    }
    return false;
}

}  // namespace oracle
