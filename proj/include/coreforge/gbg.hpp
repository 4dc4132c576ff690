#pragma once

// gbg-rank: residue counts mod s weighted by powers of w_s, its closed form on
// t-cores, the number of values it takes, and the graded core generating functions.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coreforge/abacus.hpp"
#include "coreforge/cyclotomic.hpp"
#include "coreforge/qseries.hpp"
#include "coreforge/report.hpp"

namespace coreforge {

inline CyclotomicInt gbg_rank(const Partition& p, int s) {
    if (s < 2) throw std::invalid_argument("gbg_rank: s must be at least 2");
    const auto r = residue_counts(p, s);
    return CyclotomicInt(s, std::vector<std::int64_t>(r.begin(), r.end()));
}

/// Evaluates sum_i w^{i+1} (w^{t n_i} - 1) / ((1 - w^t)(1 - w)) on phi2 images,
/// memoized on n mod s, which is all the value depends on.
class GbgCoreEvaluator {
public:
    GbgCoreEvaluator(int s, int t) : s_(s), t_(t), divisor_(make_divisor(s, t)) {}

    int s() const noexcept { return s_; }
    int t() const noexcept { return t_; }

    CyclotomicInt operator()(const NVector& n) {
        if (n.t() != t_) throw std::invalid_argument("GbgCoreEvaluator: wrong t");
        std::vector<int> key(static_cast<std::size_t>(t_));
        for (int i = 0; i < t_; ++i) key[static_cast<std::size_t>(i)] = floor_mod(n[static_cast<std::size_t>(i)], s_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        CyclotomicInt num = CyclotomicInt::integer(s_, 0);
        const auto one = CyclotomicInt::integer(s_, 1);
        for (int i = 0; i < t_; ++i) {
            const std::int64_t e = static_cast<std::int64_t>(t_) * key[static_cast<std::size_t>(i)];
            num = num + CyclotomicInt::omega_pow(s_, i + 1) * (CyclotomicInt::omega_pow(s_, e) - one);
        }
        auto v = divisor_.divide(num);
        cache_.emplace(std::move(key), v);
        return v;
    }

private:
    static CyclotomicDivisor make_divisor(int s, int t) {
        if (s < 2 || t < 2) throw std::invalid_argument("gbg: s and t must be at least 2");
        if (std::gcd(s, t) != 1) throw std::invalid_argument("gbg: s and t must be coprime");
        const auto one = CyclotomicInt::integer(s, 1);
        return CyclotomicDivisor((one - CyclotomicInt::omega_pow(s, t)) * (one - CyclotomicInt::omega_pow(s, 1)));
    }

    int s_, t_;
    CyclotomicDivisor divisor_;
    std::map<std::vector<int>, CyclotomicInt> cache_;
};

inline CyclotomicInt gbg_core_formula(const NVector& n, int s) {
    GbgCoreEvaluator ev(s, n.t());
    return ev(n);
}

/// C(t+s, t) / (t+s).
inline std::int64_t nu_bound(int s, int t) {
    std::int64_t c = 1;
    for (int k = 1; k <= t; ++k) c = c * (s + k) / k;
    if (c % (t + s) != 0) throw std::logic_error("nu_bound: inexact division");
    return c / (t + s);
}

/// A zero-sum representative of every class of Z^t/sZ^t with coordinate sum = 0 mod s:
/// n_i in [0, s) for i < t-1 and n_{t-1} = -(n_0 + ... + n_{t-2}).
template <class Visitor>
void for_each_residue_class(int s, int t, Visitor&& visit) {
    std::vector<std::int64_t> n(static_cast<std::size_t>(t), 0);
    for (;;) {
        std::int64_t sum = 0;
        for (int i = 0; i + 1 < t; ++i) sum += n[static_cast<std::size_t>(i)];
        n.back() = -sum;
        visit(NVector(t, n));
        int k = t - 2;
        while (k >= 0 && n[static_cast<std::size_t>(k)] == s - 1) n[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) return;
        ++n[static_cast<std::size_t>(k)];
    }
}

/// Largest norm of a class representative above, i.e. every class is attained by a
/// core whose norm is at most this.
inline std::int64_t residue_class_norm_bound(int s, int t) {
    std::int64_t best = 0;
    for_each_residue_class(s, t, [&](const NVector& n) { best = std::max(best, norm_form(n)); });
    return best;
}

struct NuResult {
    std::int64_t count = 0;
    std::vector<CyclotomicInt> values;  // sorted
};

/// Distinct gbg values on t-cores, over residue classes. With `attain`, each class
/// representative is also turned into an actual core whose gbg-rank is computed
/// from its residue diagram and must agree.
inline NuResult nu_count(int s, int t, bool attain = false) {
    GbgCoreEvaluator ev(s, t);
    std::map<CyclotomicInt, bool> seen;
    for_each_residue_class(s, t, [&](const NVector& n) {
        const auto v = ev(n);
        if (attain && gbg_rank(phi2_inv(n), s) != v) throw std::logic_error("nu_count: class value not attained by its core");
        seen.emplace(v, true);
    });
    NuResult r;
    for (const auto& [v, _] : seen) r.values.push_back(v);
    r.count = static_cast<std::int64_t>(r.values.size());
    if (r.count > nu_bound(s, t)) throw std::logic_error("nu_count: exceeds the binomial bound");
    return r;
}

/// g(0) = 1/((1-w)(1-1/w)) - w^{(t-1)/2} t / ((1-w^t)(1-1/w)), computed exactly; odd t.
inline CyclotomicInt g_zero(int s, int t) {
    if (t % 2 == 0) throw std::invalid_argument("g_zero: t must be odd");
    if (std::gcd(s, t) != 1) throw std::invalid_argument("g_zero: s and t must be coprime");
    const auto one = CyclotomicInt::integer(s, 1);
    const auto w = [&](std::int64_t k) { return CyclotomicInt::omega_pow(s, k); };
    const auto den = (one - w(1)) * (one - w(-1)) * (one - w(t));
    const auto num = (one - w(t)) - static_cast<std::int64_t>(t) * w((t - 1) / 2) * (one - w(1));
    return CyclotomicDivisor(den).divide(num);
}

/// (t^2-1)(s^2-1)/24 - (t-1)(s-i)i/2.
inline std::int64_t gbg_shift(int s, int t, int i) {
    const std::int64_t a = static_cast<std::int64_t>(t * t - 1) * (s * s - 1);
    const std::int64_t b = static_cast<std::int64_t>(t - 1) * (s - i) * i;
    if (a % 24 != 0 || b % 2 != 0) throw std::logic_error("gbg_shift: non-integral exponent");
    return a / 24 - b / 2;
}

/// Core generating functions graded by gbg value, norms below N.
inline std::map<CyclotomicInt, Series> core_series_by_gbg(int s, int t, std::size_t N) {
    GbgCoreEvaluator ev(s, t);
    std::map<CyclotomicInt, std::vector<std::int64_t>> c;
    for_each_nvector(t, static_cast<std::int64_t>(N), [&](const NVector& n) {
        auto& v = c[ev(n)];
        if (v.empty()) v.assign(N, 0);
        ++v[static_cast<std::size_t>(norm_form(n))];
    });
    std::map<CyclotomicInt, Series> out;
    for (const auto& [k, v] : c) out.emplace(k, Series(std::vector<Integer>(v.begin(), v.end())));
    return out;
}

/// q^{a(0)} E(q^{s^2 t})^t / E(q^{s^2}).
inline Series gbg_zero_class_target(int s, int t, std::size_t N) {
    const std::int64_t s2 = static_cast<std::int64_t>(s) * s;
    return eta_quotient({{s2 * t, t}, {s2, -1}}, static_cast<std::size_t>(gbg_shift(s, t, 0)), N);
}

/// q^{a(i)} F_i(q^s), F_i(q) = E(q^s) E(q^{st})^{t-2} [q^{it}; q^{st}] / [q^i; q^s].
inline Series gbg_class_target(int s, int t, int i, std::size_t N) {
    const std::int64_t s2 = static_cast<std::int64_t>(s) * s;
    const auto a = gbg_shift(s, t, i);
    if (a < 0) throw std::logic_error("gbg_class_target: negative shift");
    const auto body = eta_quotient({{s2, 1}, {s2 * t, t - 2}}, 0, N) * bracket(static_cast<std::int64_t>(s) * i * t, s2 * t, N) *
                      inverse(bracket(static_cast<std::int64_t>(s) * i, s2, N));
    return body.shifted(static_cast<std::size_t>(a));
}

struct GbgReport {
    VerificationReport zero_class;  // the g(0) class against its eta quotient
    VerificationReport graded;      // multiset match of the i >= 1 family
    std::map<CyclotomicInt, Series> classes;
    std::optional<CyclotomicInt> g0;
};

inline GbgReport verify_gbg_gf(int s, int t, std::int64_t N) {
    const Params params{{"s", std::to_string(s)}, {"t", std::to_string(t)}};
    GbgReport rep{make_report("7.3", params, N), make_report("7.2", params, N), {}, std::nullopt};
    if (std::gcd(s, t) != 1) throw std::invalid_argument("verify_gbg_gf: s and t must be coprime");
    if (t % 2 == 0) {
        rep.zero_class.status = rep.graded.status = Status::skipped;
        rep.zero_class.note = rep.graded.note = "t even: g(i) involves w^{(t-1)/2}";
        return rep;
    }
    const auto n = static_cast<std::size_t>(N);
    rep.classes = core_series_by_gbg(s, t, n);
    rep.g0 = g_zero(s, t);

    auto it = rep.classes.find(*rep.g0);
    const Series zero_series = it == rep.classes.end() ? Series(n) : it->second;
    compare_into(rep.zero_class, zero_series, gbg_zero_class_target(s, t, n));
    if (it == rep.classes.end()) rep.zero_class.note = "g(0) not attained";

    std::vector<const Series*> pool;
    for (const auto& [v, ser] : rep.classes) {
        if (v != *rep.g0) pool.push_back(&ser);
    }
    for (int i = 1; i < s; ++i) {
        const auto target = gbg_class_target(s, t, i, n);
        auto m = std::find_if(pool.begin(), pool.end(), [&](const Series* c) { return *c == target; });
        if (m == pool.end()) {
            fail_with(rep.graded, "no unused class matches i=" + std::to_string(i));
            break;
        }
        pool.erase(m);
    }
    return rep;
}

}  // namespace coreforge
