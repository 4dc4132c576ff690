#pragma once

// Beta-set (abacus) encoding of partitions, the t-core bijection to
// zero-sum integer vectors, and the Littlewood core/quotient decomposition.
//
// A partition with parts lambda_1 >= lambda_2 >= ... is encoded by the bead set
// {lambda_j - j : j >= 1}; all but finitely many beads are the tail -j.  Bead b
// with b = i (mod t) sits on runner i in region (b - i)/t + 1.  Region r of runner i
// holds a bead exactly when residue i is exposed in region r.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coreforge/partition.hpp"

namespace coreforge {

/// Integer vector of length t with zero coordinate sum.
class NVector {
public:
    NVector() = default;

    NVector(int t, std::vector<std::int64_t> coords) : t_(t), coords_(std::move(coords)) {
        if (t_ < 2) throw std::invalid_argument("NVector: t must be at least 2");
        if (coords_.size() != static_cast<std::size_t>(t_)) throw std::invalid_argument("NVector: length must equal t");
        if (std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0}) != 0) {
            throw std::invalid_argument("NVector: coordinates must sum to zero");
        }
    }

    static NVector zero(int t) { return NVector(t, std::vector<std::int64_t>(static_cast<std::size_t>(t), 0)); }

    int t() const noexcept { return t_; }
    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    friend auto operator<=>(const NVector&, const NVector&) = default;
    friend bool operator==(const NVector&, const NVector&) = default;

private:
    int t_ = 2;
    std::vector<std::int64_t> coords_{0, 0};
};

/// (t/2) n.n + b_t.n with b_t = (0, 1, ..., t-1).
inline std::int64_t norm_form(int t, const std::vector<std::int64_t>& n) {
    std::int64_t sq = 0, lin = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        sq += n[i] * n[i];
        lin += static_cast<std::int64_t>(i) * n[i];
    }
    const std::int64_t twice = t * sq + 2 * lin;
    if (twice % 2 != 0) throw std::logic_error("norm_form: odd doubled value");
    return twice / 2;
}

inline std::int64_t norm_form(const NVector& n) { return norm_form(n.t(), n.coords()); }

inline std::string to_string(const NVector& n) {
    std::string s = std::to_string(n.t()) + ":[";
    for (std::size_t i = 0; i < n.coords().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(n.coords()[i]);
    }
    return s + "]";
}

/// Parses the text form "t:[n0,...,n_{t-1}]".
inline NVector parse_nvector(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("NVector text must look like t:[...]");
    const int t = std::stoi(std::string(text.substr(0, colon)));
    std::size_t i = colon + 1;
    auto coords = detail::parse_int_list(text, i);
    detail::skip_ws(text, i);
    if (i != text.size()) throw std::invalid_argument("trailing characters after NVector");
    return NVector(t, std::move(coords));
}

/// Finite bead set: beads `b[0] > b[1] > ... > b[L-1]`, meaning lambda_j - j for
/// j = 1..L; every integer below -L is also a bead.
struct BetaSet {
    std::vector<std::int64_t> beads;

    std::int64_t tail_start() const noexcept { return -static_cast<std::int64_t>(beads.size()); }

    bool has_bead(std::int64_t b) const {
        if (b < tail_start()) return true;
        return std::binary_search(beads.begin(), beads.end(), b, std::greater<>());
    }

    /// Residue i is exposed in region r.
    bool exposed(int t, int residue, std::int64_t region) const {
        return has_bead(t * (region - 1) + residue);
    }
};

inline BetaSet beta_set(const Partition& p, std::size_t length) {
    if (length < p.length()) throw std::invalid_argument("beta_set: length shorter than partition");
    BetaSet s;
    s.beads.reserve(length);
    for (std::size_t j = 0; j < length; ++j) {
        s.beads.push_back(static_cast<std::int64_t>(p.part(j)) - static_cast<std::int64_t>(j + 1));
    }
    return s;
}

inline BetaSet beta_set(const Partition& p) { return beta_set(p, p.length()); }

inline Partition to_partition(const BetaSet& s) {
    std::vector<int> parts;
    parts.reserve(s.beads.size());
    for (std::size_t j = 0; j < s.beads.size(); ++j) {
        if (j > 0 && s.beads[j] >= s.beads[j - 1]) throw std::invalid_argument("beta set must be strictly decreasing");
        const std::int64_t part = s.beads[j] + static_cast<std::int64_t>(j + 1);
        if (part < 0) throw std::invalid_argument("beta set is not normalized");
        parts.push_back(static_cast<int>(part));
    }
    return Partition::from_padded(std::move(parts));
}

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// One runner above a floor region: all regions <= floor hold beads, the rest are listed.
struct Runner {
    std::vector<std::int64_t> regions;  // bead regions above the floor, increasing
};

// Rebuilds a partition from runners sharing a common floor.  Requires zero total charge.
inline Partition partition_from_runners(int t, std::int64_t floor, const std::vector<Runner>& runners) {
    std::vector<std::int64_t> beads;
    for (int i = 0; i < t; ++i) {
        for (auto r : runners[static_cast<std::size_t>(i)].regions) beads.push_back(t * (r - 1) + i);
    }
    std::sort(beads.begin(), beads.end(), std::greater<>());
    // All beads below t*floor are present, so the explicit list must be exactly lambda_j - j, j = 1..-t*floor.
    if (static_cast<std::int64_t>(beads.size()) != -t * floor) {
        throw std::logic_error("runner charges do not sum to zero");
    }
    return to_partition(BetaSet{std::move(beads)});
}

struct RunnerView {
    std::int64_t floor = 0;
    std::vector<Runner> runners;
};

inline RunnerView runners_of(const Partition& p, int t) {
    const auto nu = static_cast<std::int64_t>(p.length());
    const std::int64_t len = t * ((nu + t - 1) / t);
    RunnerView v;
    v.floor = -len / t;
    v.runners.resize(static_cast<std::size_t>(t));
    const auto s = beta_set(p, static_cast<std::size_t>(len));
    for (auto it = s.beads.rbegin(); it != s.beads.rend(); ++it) {
        const auto b = *it;
        const int i = floor_mod(b, t);
        v.runners[static_cast<std::size_t>(i)].regions.push_back((b - i) / t + 1);
    }
    return v;
}

}  // namespace detail

/// No bead can slide t positions down into a free slot.
inline bool is_t_core(const Partition& p, int t) {
    if (t < 2) throw std::invalid_argument("is_t_core: t must be at least 2");
    const auto s = beta_set(p);
    for (auto b : s.beads) {
        if (!s.has_bead(b - t)) return false;
    }
    return true;
}

enum class StripOrder { highest_first, lowest_first };

/// Repeatedly removes rim hooks of length t (a bead moving to a free slot t below).
inline Partition t_core_of(const Partition& p, int t, StripOrder order = StripOrder::highest_first) {
    if (t < 2) throw std::invalid_argument("t_core_of: t must be at least 2");
    const auto len = static_cast<std::int64_t>(p.length());
    std::set<std::int64_t> beads;
    for (auto b : beta_set(p).beads) beads.insert(b);
    auto occupied = [&](std::int64_t b) { return b < -len || beads.count(b) > 0; };
    for (;;) {
        std::optional<std::int64_t> pick;
        if (order == StripOrder::highest_first) {
            for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
                if (!occupied(*it - t)) {
                    pick = *it;
                    break;
                }
            }
        } else {
            for (auto b : beads) {
                if (!occupied(b - t)) {
                    pick = b;
                    break;
                }
            }
        }
        if (!pick) break;
        beads.erase(*pick);
        beads.insert(*pick - t);
    }
    return to_partition(BetaSet{std::vector<std::int64_t>(beads.rbegin(), beads.rend())});
}

/// Residue-count differences n_i = r_i - r_{i+1} (indices mod t).  Defined for any
/// partition; injective on t-cores only.
inline std::vector<std::int64_t> residue_differences(const Partition& p, int t) {
    const auto r = residue_counts(p, t);
    std::vector<std::int64_t> n(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        n[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>((i + 1) % t)];
    }
    return n;
}

inline NVector phi2(const Partition& core, int t) {
    if (!is_t_core(core, t)) throw std::invalid_argument("phi2: input is not a t-core");
    return NVector(t, residue_differences(core, t));
}

/// The t-core whose runner i is full exactly up to region n_i.
inline Partition phi2_inv(const NVector& n) {
    const int t = n.t();
    const auto lo = *std::min_element(n.coords().begin(), n.coords().end());
    std::vector<detail::Runner> runners(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        for (auto r = lo + 1; r <= n[static_cast<std::size_t>(i)]; ++r) runners[static_cast<std::size_t>(i)].regions.push_back(r);
    }
    return detail::partition_from_runners(t, lo, runners);
}

struct Decomposition {
    Partition core;
    std::vector<Partition> quotient;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Littlewood decomposition.  Quotient entry i is read from the gaps of runner i:
/// with gaps g_1 < g_2 < ... and runner charge n_i, its parts are n_i + j - g_j.
inline Decomposition phi1(const Partition& p, int t) {
    if (t < 2) throw std::invalid_argument("phi1: t must be at least 2");
    const auto view = detail::runners_of(p, t);
    std::vector<std::int64_t> n(static_cast<std::size_t>(t));
    Decomposition d;
    d.quotient.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        const auto& regions = view.runners[static_cast<std::size_t>(i)].regions;
        const auto charge = view.floor + static_cast<std::int64_t>(regions.size());
        n[static_cast<std::size_t>(i)] = charge;
        std::vector<int> parts;
        std::int64_t next = view.floor + 1;
        std::int64_t j = 0;
        for (auto r : regions) {
            for (; next < r; ++next) {
                ++j;
                parts.push_back(static_cast<int>(charge + j - next));
            }
            next = r + 1;
        }
        d.quotient.push_back(Partition::from_padded(std::move(parts)));
    }
    d.core = phi2_inv(NVector(t, std::move(n)));
    return d;
}

inline Partition phi1_inv(const Decomposition& d, int t) {
    if (d.quotient.size() != static_cast<std::size_t>(t)) throw std::invalid_argument("phi1_inv: quotient must have t entries");
    const auto n = phi2(d.core, t);
    std::int64_t floor = 0;
    for (int i = 0; i < t; ++i) {
        const auto& q = d.quotient[static_cast<std::size_t>(i)];
        floor = std::min(floor, n[static_cast<std::size_t>(i)] - q.part(0));
    }
    std::vector<detail::Runner> runners(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        const auto& q = d.quotient[static_cast<std::size_t>(i)];
        const auto ni = n[static_cast<std::size_t>(i)];
        const auto m = static_cast<std::int64_t>(q.length());
        std::set<std::int64_t> gaps;
        for (std::int64_t j = 1; j <= m; ++j) gaps.insert(ni + j - q.parts()[static_cast<std::size_t>(j - 1)]);
        for (auto r = floor + 1; r <= ni + m; ++r) {
            if (!gaps.count(r)) runners[static_cast<std::size_t>(i)].regions.push_back(r);
        }
    }
    return detail::partition_from_runners(t, floor, runners);
}

/// (1 - sum_j (-1)^{j + n_j}) / 4 for odd t.
inline int bg_of_nvector(const NVector& n) {
    if (n.t() % 2 == 0) throw std::invalid_argument("bg_of_nvector: t must be odd");
    int s = 0;
    for (int j = 0; j < n.t(); ++j) s += ((j + n[static_cast<std::size_t>(j)]) % 2 == 0) ? 1 : -1;
    if ((1 - s) % 4 != 0) throw std::logic_error("bg_of_nvector: inexact division");
    return (1 - s) / 4;
}

/// Sum of the even-indexed residue differences, for even t and any partition.
inline int bg_even_t(const Partition& p, int t) {
    if (t % 2 != 0) throw std::invalid_argument("bg_even_t: t must be even");
    const auto n = residue_differences(p, t);
    std::int64_t s = 0;
    for (int i = 0; i < t; i += 2) s += n[static_cast<std::size_t>(i)];
    return static_cast<int>(s);
}

/// BG(pi) = BG(core) + sum_j (-1)^{j + n_j} BG(quotient_j), odd t.
inline bool bg_decompose_check(const Partition& p, int t) {
    if (t % 2 == 0 || t < 3) throw std::invalid_argument("bg_decompose_check: t must be odd and at least 3");
    const auto d = phi1(p, t);
    const auto n = phi2(d.core, t);
    int rhs = bg_rank(d.core);
    for (int j = 0; j < t; ++j) {
        const int sign = ((j + n[static_cast<std::size_t>(j)]) % 2 == 0) ? 1 : -1;
        rhs += sign * bg_rank(d.quotient[static_cast<std::size_t>(j)]);
    }
    return rhs == bg_rank(p);
}

inline int floor_div4(int x) { return static_cast<int>(detail::floor_div(x, 4)); }

/// B_t: sum of e_{2i}, i <= (t-1)/2, when t = 1 (mod 4); sum of e_{1+2i}, i <= (t-3)/2, when t = 3 (mod 4).
inline std::vector<int> parity_base(int t) {
    if (t % 2 == 0 || t < 3) throw std::invalid_argument("parity_base: t must be odd and at least 3");
    std::vector<int> v(static_cast<std::size_t>(t), 0);
    if (t % 4 == 1) {
        for (int i = 0; i <= (t - 1) / 2; ++i) v[static_cast<std::size_t>(2 * i)] = 1;
    } else {
        for (int i = 0; i <= (t - 3) / 2; ++i) v[static_cast<std::size_t>(1 + 2 * i)] = 1;
    }
    return v;
}

/// B_t plus the all-ones vector, reduced mod 2.
inline std::vector<int> parity_base_tilde(int t) {
    auto v = parity_base(t);
    for (auto& x : v) x = 1 - x;
    return v;
}

struct ParityClass {
    int k = 0;           // n = B_t + (2k+1 unit vectors) mod 2
    bool tilde = false;  // n = tilde B_t mod 2, the k = (t-1)/2 class

    friend bool operator==(const ParityClass&, const ParityClass&) = default;
};

inline ParityClass parity_class_of(const NVector& n) {
    const int t = n.t();
    const auto base = parity_base(t);
    int diff = 0;
    for (int i = 0; i < t; ++i) diff += (floor_mod(n[static_cast<std::size_t>(i)], 2) != base[static_cast<std::size_t>(i)]) ? 1 : 0;
    if (diff % 2 == 0) throw std::logic_error("parity_class_of: zero-sum vector at even distance from B_t");
    const int k = (diff - 1) / 2;
    return ParityClass{k, k == (t - 1) / 2};
}

/// BG value attached to a parity class: (-1)^{(t-1)/2} (floor(t/4) - k).
inline int bg_of_parity_class(int t, const ParityClass& c) {
    const int sign = ((t - 1) / 2) % 2 == 0 ? 1 : -1;
    return sign * (t / 4 - c.k);
}

inline int bg_lower_bound(int t) { return -((t - 1) / 4); }
inline int bg_upper_bound(int t) { return (t + 1) / 4; }

/// Visits every n in Z^t with n_0 + ... + n_{t-1} = total and
/// (t/2) n.n + b_t.n < max_norm, in lexicographic order of (n_0, ..., n_{t-2}).
///
/// Completing the square, 2t ((t/2) n.n + b_t.n) = sum_i (t n_i + i)^2 - sum_i i^2, so each
/// coordinate obeys |t n_i + i| < sqrt(2t max_norm + sum i^2).  Partial sums are pruned
/// with Cauchy-Schwarz on the remaining coordinates, whose shifted values t n_i + i must
/// add up to t (total - partial sum) + sum of the remaining i.
template <class Visitor>
void for_each_lattice_point(int t, std::int64_t total, std::int64_t max_norm, Visitor&& visit) {
    if (t < 2) throw std::invalid_argument("for_each_lattice_point: t must be at least 2");
    std::int64_t sum_sq_index = 0;
    for (int i = 0; i < t; ++i) sum_sq_index += static_cast<std::int64_t>(i) * i;
    const std::int64_t limit = 2 * t * max_norm + sum_sq_index;  // sum (t n_i + i)^2 < limit
    if (limit <= 0) return;
    const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    const std::int64_t bound = (root + t) / t + 1;

    std::vector<std::int64_t> n(static_cast<std::size_t>(t), 0);
    std::vector<std::int64_t> suffix_index(static_cast<std::size_t>(t) + 1, 0);
    for (int i = t - 1; i >= 0; --i) suffix_index[static_cast<std::size_t>(i)] = suffix_index[static_cast<std::size_t>(i) + 1] + i;

    auto feasible = [&](int k, std::int64_t partial_sq, std::int64_t partial_sum) {
        // Coordinates k..t-1 remain; their shifted values sum to rem.
        const std::int64_t rem = t * (total - partial_sum) + suffix_index[static_cast<std::size_t>(k)];
        const std::int64_t slots = t - k;
        return partial_sq * slots + rem * rem < limit * slots;
    };

    std::function<void(int, std::int64_t, std::int64_t)> rec = [&](int k, std::int64_t partial_sq, std::int64_t partial_sum) {
        if (k == t - 1) {
            n[static_cast<std::size_t>(k)] = total - partial_sum;
            const std::int64_t v = t * n[static_cast<std::size_t>(k)] + k;
            if (partial_sq + v * v < limit) visit(static_cast<const std::vector<std::int64_t>&>(n));
            return;
        }
        for (std::int64_t x = -bound; x <= bound; ++x) {
            const std::int64_t v = t * x + k;
            const std::int64_t sq = partial_sq + v * v;
            if (sq >= limit) continue;
            if (!feasible(k + 1, sq, partial_sum + x)) continue;
            n[static_cast<std::size_t>(k)] = x;
            rec(k + 1, sq, partial_sum + x);
        }
    };
    if (feasible(0, 0, 0)) rec(0, 0, 0);
}

/// Visits every zero-sum n (a t-core's phi2 image) with norm_form(n) < max_norm.
template <class Visitor>
void for_each_nvector(int t, std::int64_t max_norm, Visitor&& visit) {
    if (max_norm <= 0) return;
    for_each_lattice_point(t, 0, max_norm, [&](const std::vector<std::int64_t>& n) { visit(NVector(t, n)); });
}

/// All t-cores of norm below max_norm, via the lattice.
inline std::vector<Partition> t_cores_below(int t, std::int64_t max_norm) {
    std::vector<Partition> out;
    for_each_nvector(t, max_norm, [&](const NVector& n) { out.push_back(phi2_inv(n)); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace coreforge
