#pragma once

// Outcome of a single exact identity check.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coreforge/series.hpp"

namespace coreforge {

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

struct Discrepancy {
    std::int64_t exponent = 0;
    Integer lhs;
    Integer rhs;
};

using Params = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
    std::string id;
    Params params;
    std::int64_t order = 0;
    Status status = Status::pass;
    std::optional<Discrepancy> discrepancy;
    std::string note;

    bool passed() const { return status == Status::pass; }
};

inline VerificationReport make_report(std::string id, Params params, std::int64_t order) {
    VerificationReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.order = order;
    return r;
}

inline void record_mismatch(VerificationReport& r, std::int64_t e, Integer lhs, Integer rhs) {
    if (r.status == Status::fail) return;
    r.status = Status::fail;
    r.discrepancy = Discrepancy{e, std::move(lhs), std::move(rhs)};
}

/// Marks the first exponent below `order` (starting at `from`) where the two sides differ.
inline void compare_into(VerificationReport& r, const LaurentSeries& lhs, const LaurentSeries& rhs, std::int64_t from = 0) {
    if (lhs.order() < r.order || rhs.order() < r.order) throw std::logic_error(r.id + ": operand known to insufficient order");
    for (auto e = std::min({from, lhs.valuation(), rhs.valuation()}); e < r.order; ++e) {
        auto a = lhs.coeff(e);
        auto b = rhs.coeff(e);
        if (a != b) {
            record_mismatch(r, e, std::move(a), std::move(b));
            return;
        }
    }
}

inline void compare_into(VerificationReport& r, const Series& lhs, const Series& rhs) {
    compare_into(r, to_laurent(lhs), to_laurent(rhs));
}

inline VerificationReport compare_series(std::string id, Params params, const Series& lhs, const Series& rhs, std::int64_t order) {
    auto r = make_report(std::move(id), std::move(params), order);
    compare_into(r, lhs, rhs);
    return r;
}

/// Folds a sub-check into an aggregate report, keeping the first failure.
inline void absorb(VerificationReport& into, const VerificationReport& part) {
    if (part.status != Status::fail || into.status == Status::fail) return;
    into.status = Status::fail;
    into.discrepancy = part.discrepancy;
    into.note = part.id;
    for (const auto& [k, v] : part.params) into.note += " " + k + "=" + v;
    if (!part.note.empty()) into.note += ": " + part.note;
}

inline void fail_with(VerificationReport& r, std::string note) {
    if (r.status == Status::fail) return;
    r.status = Status::fail;
    r.note = std::move(note);
}

}  // namespace coreforge
