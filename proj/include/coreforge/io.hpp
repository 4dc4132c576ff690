#pragma once

// JSON encodings of series, decompositions and reports.  Coefficients are decimal
// strings so that width is unbounded.

#include <string>
#include <vector>

#include "json.hpp"

#include "coreforge/abacus.hpp"
#include "coreforge/partition.hpp"
#include "coreforge/report.hpp"
#include "coreforge/series.hpp"

namespace coreforge {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) {
    Json a = Json::array();
    for (auto x : p.parts()) a.push_back(x);
    return a;
}

inline Json to_json(const Series& s) {
    Json c = Json::array();
    for (const auto& x : s.coeffs()) c.push_back(x.str());
    return Json{{"precision", s.precision()}, {"coeffs", std::move(c)}};
}

inline Series series_from_json(const Json& j) {
    const auto n = j.at("precision").get<std::size_t>();
    const auto& c = j.at("coeffs");
    if (c.size() != n) throw std::invalid_argument("series_from_json: coefficient count differs from precision");
    std::vector<Integer> coeffs;
    for (const auto& x : c) coeffs.emplace_back(x.get<std::string>());
    return Series(std::move(coeffs));
}

inline Json to_json(const Decomposition& d) {
    Json q = Json::array();
    for (const auto& p : d.quotient) q.push_back(to_json(p));
    return Json{{"core", to_json(d.core)}, {"quotient", std::move(q)}};
}

inline Decomposition decomposition_from_json(const Json& j) {
    auto part = [](const Json& a) {
        std::vector<int> xs;
        for (const auto& x : a) xs.push_back(x.get<int>());
        return Partition(xs);
    };
    Decomposition d;
    d.core = part(j.at("core"));
    for (const auto& q : j.at("quotient")) d.quotient.push_back(part(q));
    return d;
}

inline Json to_json(const VerificationReport& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    Json out{{"id", r.id}, {"params", std::move(params)}, {"order", r.order}, {"status", to_string(r.status)}};
    if (r.discrepancy) {
        out["discrepancy"] = Json{{"exponent", r.discrepancy->exponent}, {"lhs", r.discrepancy->lhs.str()}, {"rhs", r.discrepancy->rhs.str()}};
    } else {
        out["discrepancy"] = nullptr;
    }
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

/// Single-line rendering with ", " and ": " separators.
inline std::string to_text(const Json& j) {
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + to_text(j[i]);
        return s + "]";
    }
    if (j.is_object()) {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            s += (first ? "" : ", ") + Json(k).dump() + ": " + to_text(v);
            first = false;
        }
        return s + "}";
    }
    return j.dump();
}

}  // namespace coreforge
