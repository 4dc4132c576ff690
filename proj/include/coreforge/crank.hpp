#pragma once

// The 5-core crank, alpha coordinates on 5-cores, and the orbit operator that
// splits the partitions of 5n+4 with a fixed BG-rank into crank-equidistributed
// orbits of size five.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coreforge/abacus.hpp"
#include "coreforge/partition.hpp"

namespace coreforge {

/// Integer vector (alpha_0, ..., alpha_4) with coordinate sum 1.
class AlphaVector {
public:
    explicit AlphaVector(std::array<std::int64_t, 5> a) : a_(a) {
        if (a_[0] + a_[1] + a_[2] + a_[3] + a_[4] != 1) throw std::invalid_argument("AlphaVector: coordinates must sum to 1");
    }

    const std::array<std::int64_t, 5>& coords() const noexcept { return a_; }
    std::int64_t operator[](std::size_t i) const { return a_[i]; }

    /// (alpha_4, alpha_0, alpha_1, alpha_2, alpha_3).
    AlphaVector rotated() const { return AlphaVector({a_[4], a_[0], a_[1], a_[2], a_[3]}); }

    friend auto operator<=>(const AlphaVector&, const AlphaVector&) = default;
    friend bool operator==(const AlphaVector&, const AlphaVector&) = default;

private:
    std::array<std::int64_t, 5> a_;
};

struct PhiImage {
    AlphaVector alpha;
    std::array<Partition, 5> quotient;
};

/// 2(r_0 - r_4) + (r_1 - r_3) + 1 mod 5, on the 5-residue counts.
inline int crank5(const Partition& p) {
    const auto r = residue_counts(p, 5);
    return floor_mod(2 * (r[0] - r[4]) + (r[1] - r[3]) + 1, 5);
}

/// Requires n_1 + 2n_2 + 3n_3 + 4n_4 = 4 (mod 5), i.e. a 5-core of norm 4 (mod 5).
inline AlphaVector alpha_of(const NVector& n) {
    if (n.t() != 5) throw std::invalid_argument("alpha_of: t must be 5");
    const auto n0 = n[0], n1 = n[1], n2 = n[2], n3 = n[3];
    if (floor_mod(n[1] + 2 * n[2] + 3 * n[3] + 4 * n[4], 5) != 4) {
        throw std::invalid_argument("alpha_of: n1 + 2n2 + 3n3 + 4n4 must be 4 mod 5");
    }
    const std::array<std::int64_t, 5> num{
        n0 - 3 * n1 - 2 * n2 - n3 + 1,
        -3 * n0 - n1 - 4 * n2 - 2 * n3 + 2,
        -3 * n0 - n1 + n2 - 2 * n3 + 2,
        n0 + 2 * n1 + 3 * n2 + 4 * n3 + 1,
        4 * n0 + 3 * n1 + 2 * n2 + n3 - 1,
    };
    std::array<std::int64_t, 5> a{};
    for (std::size_t i = 0; i < 5; ++i) {
        if (num[i] % 5 != 0) throw std::logic_error("alpha_of: inexact division");
        a[i] = num[i] / 5;
    }
    return AlphaVector(a);
}

inline NVector alpha_inv(const AlphaVector& a) {
    return NVector(5, {a[0] + a[4], -a[0] + a[1] + a[4], -a[1] + a[2], -a[2] + a[3] - a[4], -a[3] - a[4]});
}

/// a.a - (a_0 a_1 + a_1 a_2 + a_2 a_3 + a_3 a_4 + a_4 a_0).
inline std::int64_t q_form(const std::array<std::int64_t, 5>& a) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < 5; ++i) s += a[i] * a[i] - a[i] * a[(i + 1) % 5];
    return s;
}

inline std::int64_t q_form(const AlphaVector& a) { return q_form(a.coords()); }

/// sum i * alpha_i mod 5.
inline int crank_from_alpha(const AlphaVector& a) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < 5; ++i) s += static_cast<std::int64_t>(i) * a[i];
    return floor_mod(s, 5);
}

namespace detail {
inline int sign_of_parity(std::int64_t x) { return floor_mod(x, 2) == 0 ? 1 : -1; }
}  // namespace detail

/// BG-rank of the partition with the given image, in alpha coordinates.
inline int bg_from_phi(const PhiImage& p) {
    const auto& a = p.alpha;
    using detail::sign_of_parity;
    int core_sum = 0;
    for (std::size_t i = 0; i < 5; ++i) core_sum += sign_of_parity(a[i] + a[(i + 1) % 5]);
    if ((1 - core_sum) % 4 != 0) throw std::logic_error("bg_from_phi: inexact division");
    return (1 - core_sum) / 4 + sign_of_parity(a[0] + a[4]) * bg_rank(p.quotient[0]) +
           sign_of_parity(a[2] + a[3]) * bg_rank(p.quotient[1]) + sign_of_parity(a[1] + a[2]) * bg_rank(p.quotient[2]) +
           sign_of_parity(a[0] + a[1]) * bg_rank(p.quotient[3]) + sign_of_parity(a[3] + a[4]) * bg_rank(p.quotient[4]);
}

inline bool norm_is_4_mod_5(const Partition& p) { return norm(p) % 5 == 4; }

/// Combined map pi -> (alpha(phi2(core)), quotient); requires |pi| = 4 (mod 5).
inline PhiImage big_phi(const Partition& p) {
    if (!norm_is_4_mod_5(p)) throw std::invalid_argument("big_phi: norm must be 4 mod 5");
    const auto d = phi1(p, 5);
    if (norm(d.core) % 5 != 4) throw std::logic_error("big_phi: 5-core norm is not 4 mod 5");
    return PhiImage{alpha_of(phi2(d.core, 5)), {d.quotient[0], d.quotient[1], d.quotient[2], d.quotient[3], d.quotient[4]}};
}

inline Partition big_phi_inv(const PhiImage& img) {
    Decomposition d;
    d.core = phi2_inv(alpha_inv(img.alpha));
    d.quotient.assign(img.quotient.begin(), img.quotient.end());
    return phi1_inv(d, 5);
}

/// Rotates alpha and permutes the quotient as (q4, q2, q3, q0, q1).
inline Partition orbit_op(const Partition& p) {
    const auto img = big_phi(p);
    const auto& q = img.quotient;
    return big_phi_inv(PhiImage{img.alpha.rotated(), {q[4], q[2], q[3], q[0], q[1]}});
}

/// Partition counts by BG-rank.
inline std::map<int, std::int64_t> count_pj(int n) {
    std::map<int, std::int64_t> out;
    for_each_partition(n, [&](const Partition& p) { ++out[bg_rank(p)]; });
    return out;
}

struct Orbit {
    int bg = 0;
    std::vector<Partition> members;  // starts at the least member, then successive images
};

struct TheoremReport {
    int n = 0;  // the partitions of 5n + 4 were examined
    std::map<int, std::int64_t> counts;                 // p_j(5n+4)
    std::map<int, std::array<std::int64_t, 5>> by_crank;  // j -> counts per crank residue
    std::vector<Orbit> orbits;
    bool ok = true;
    std::string failure;
    std::optional<Partition> witness;
};

/// Splits the partitions of 5n+4 into orbits and checks the five-class theorem.
inline TheoremReport verify_theorem(int n) {
    if (n < 0) throw std::invalid_argument("verify_theorem: n must be nonnegative");
    TheoremReport rep;
    rep.n = n;
    const int m = 5 * n + 4;
    auto parts = partitions_of(m);
    std::sort(parts.begin(), parts.end());
    std::set<Partition> seen;
    auto fail = [&](std::optional<Partition> w, std::string why) {
        if (rep.ok) {
            rep.ok = false;
            rep.failure = std::move(why);
            rep.witness = std::move(w);
        }
    };
    for (const auto& p : parts) {
        const int j = bg_rank(p);
        ++rep.counts[j];
        rep.by_crank[j][static_cast<std::size_t>(crank5(p))] += 1;
        if (seen.count(p)) continue;
        Orbit orbit;
        orbit.bg = j;
        Partition cur = p;
        std::array<bool, 5> residues{};
        for (int step = 0; step < 5; ++step) {
            if (seen.count(cur)) {
                fail(cur, "orbit shorter than five");
                break;
            }
            seen.insert(cur);
            orbit.members.push_back(cur);
            if (norm(cur) != m) fail(cur, "norm not preserved");
            if (bg_rank(cur) != j) fail(cur, "BG-rank not preserved");
            const int c = crank5(cur);
            if (c != floor_mod(crank5(p) + step, 5)) fail(cur, "crank does not advance by one");
            residues[static_cast<std::size_t>(c)] = true;
            cur = orbit_op(cur);
        }
        if (cur != p) fail(p, "fifth iterate does not return");
        for (bool r : residues) {
            if (!r) fail(p, "crank residue missing from orbit");
        }
        rep.orbits.push_back(std::move(orbit));
    }
    for (const auto& [j, classes] : rep.by_crank) {
        for (auto c : classes) {
            if (c != classes[0]) fail(std::nullopt, "crank classes unequal for BG-rank " + std::to_string(j));
        }
        if (rep.counts[j] % 5 != 0) fail(std::nullopt, "p_j not divisible by 5 for BG-rank " + std::to_string(j));
    }
    return rep;
}

/// n -> n~ sending a 5-core of norm k to one of norm 5k+4 with the same BG-rank and crank 4.
inline NVector lift_5core(const NVector& n) {
    if (n.t() != 5) throw std::invalid_argument("lift_5core: t must be 5");
    const auto n1 = n[1], n2 = n[2], n3 = n[3], n4 = n[4];
    return NVector(5, {n1 + 2 * n2 + 2 * n4 + 1, -n1 - n2 + n3 + n4 + 1, 2 * n1 + n2 + 2 * n3, -2 * n2 - 2 * n3 - n4 - 1,
                       -2 * n1 - n3 - 2 * n4 - 1});
}

}  // namespace coreforge
