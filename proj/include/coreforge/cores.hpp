#pragma once

// Generating functions of t-cores built by lattice enumeration of phi2 images.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "coreforge/abacus.hpp"
#include "coreforge/series.hpp"

namespace coreforge {

namespace detail {
inline Series from_counts(const std::vector<std::int64_t>& c) {
    std::vector<Integer> v(c.begin(), c.end());
    return Series(std::move(v));
}
}  // namespace detail

/// sum over t-cores of q^{|core|}, to precision N.
inline Series core_series(int t, std::size_t N) {
    std::vector<std::int64_t> c(N, 0);
    for_each_nvector(t, static_cast<std::int64_t>(N), [&](const NVector& n) { ++c[static_cast<std::size_t>(norm_form(n))]; });
    return detail::from_counts(c);
}

/// C_{t,j} for every BG value j attained by t-cores (odd t). Every admissible j
/// is present, possibly as the zero series.
inline std::map<int, Series> core_series_by_bg(int t, std::size_t N) {
    if (t % 2 == 0 || t < 3) throw std::invalid_argument("core_series_by_bg: t must be odd and at least 3");
    std::map<int, std::vector<std::int64_t>> c;
    for (int j = bg_lower_bound(t); j <= bg_upper_bound(t); ++j) c[j].assign(N, 0);
    for_each_nvector(t, static_cast<std::int64_t>(N), [&](const NVector& n) {
        auto it = c.find(bg_of_nvector(n));
        if (it == c.end()) throw std::logic_error("core_series_by_bg: BG value outside the admissible range");
        ++it->second[static_cast<std::size_t>(norm_form(n))];
    });
    std::map<int, Series> out;
    for (const auto& [j, v] : c) out.emplace(j, detail::from_counts(v));
    return out;
}

inline Series Ctj_enumerated(int t, int j, std::size_t N) {
    auto all = core_series_by_bg(t, N);
    auto it = all.find(j);
    return it == all.end() ? Series(N) : it->second;
}

/// Core series graded by the mod-2 class of the phi2 image, keyed by the BG value the
/// class predicts (no BG-rank is evaluated).
inline std::map<int, Series> core_series_by_parity_class(int t, std::size_t N) {
    std::map<int, std::vector<std::int64_t>> c;
    for (int j = bg_lower_bound(t); j <= bg_upper_bound(t); ++j) c[j].assign(N, 0);
    for_each_nvector(t, static_cast<std::int64_t>(N), [&](const NVector& n) {
        const auto cls = parity_class_of(n);
        const int j = cls.tilde ? (((t + 1) / 2) % 2 == 0 ? 1 : -1) * ((t + 1) / 4) : bg_of_parity_class(t, cls);
        auto it = c.find(j);
        if (it == c.end()) throw std::logic_error("core_series_by_parity_class: class outside the admissible range");
        ++it->second[static_cast<std::size_t>(norm_form(n))];
    });
    std::map<int, Series> out;
    for (const auto& [j, v] : c) out.emplace(j, detail::from_counts(v));
    return out;
}

}  // namespace coreforge
