#pragma once

// Command-line front end.  `run` is separate from main so tests can drive it in-process.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "coreforge/abacus.hpp"
#include "coreforge/arith.hpp"
#include "coreforge/crank.hpp"
#include "coreforge/expr.hpp"
#include "coreforge/gbg.hpp"
#include "coreforge/identities.hpp"
#include "coreforge/io.hpp"

namespace coreforge::cli {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// --order if given, else COREFORGE_ORDER, else the subcommand default.
inline std::int64_t resolve_order(std::int64_t flag, std::int64_t fallback) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("COREFORGE_ORDER"); env && *env) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != std::string(env).size() || v < 1) throw UsageError("COREFORGE_ORDER must be a positive integer");
        return v;
    }
    return fallback;
}

struct TimedReports {
    std::vector<VerificationReport> reports;
    double seconds = 0;
};

/// Runs the entries on `jobs` workers; results stay in registry order.
inline std::vector<TimedReports> run_entries(const std::vector<const RegistryEntry*>& entries, std::int64_t order, int jobs) {
    std::vector<TimedReports> out(entries.size());
    std::vector<std::exception_ptr> errors(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < entries.size();) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                out[k].reports = run_entry(*entries[k], order);
            } catch (...) {
                errors[k] = std::current_exception();
            }
            out[k].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const auto n = static_cast<std::size_t>(std::max(1, jobs));
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < std::min(n, entries.size()); ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

inline std::string describe(const VerificationReport& r) {
    std::string s = std::string(to_string(r.status)) + " " + r.id;
    for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
    s += " order=" + std::to_string(r.order);
    if (r.discrepancy) {
        s += " first difference at q^" + std::to_string(r.discrepancy->exponent) + ": " + r.discrepancy->lhs.str() + " vs " + r.discrepancy->rhs.str();
    }
    if (!r.note.empty()) s += " (" + r.note + ")";
    return s;
}

inline int cmd_verify(const std::string& id, std::int64_t order_flag, bool json, int jobs, bool timing, std::ostream& out) {
    const auto order = resolve_order(order_flag, 150);
    std::vector<const RegistryEntry*> entries;
    for (const auto& e : registry()) {
        if (id == "all" || e.id == id) entries.push_back(&e);
    }
    if (entries.empty()) throw UsageError("unknown identity id '" + id + "'");
    const auto results = run_entries(entries, order, jobs);

    bool ok = true;
    Json arr = Json::array(), failed = Json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < results.size(); ++k) {
        for (const auto& r : results[k].reports) {
            Json j = to_json(r);
            if (timing) j["seconds"] = results[k].seconds;
            if (r.status == Status::fail) {
                ok = false;
                failed.push_back(j);
            }
            arr.push_back(j);
            text << describe(r);
            if (timing) text << " " << std::fixed << std::setprecision(3) << results[k].seconds << "s";
            text << "\n";
        }
    }
    if (json) {
        out << to_text(arr) << "\n";
    } else {
        out << text.str();
        out << arr.size() << " checks, " << failed.size() << " failed\n";
        if (!ok) out << to_text(failed) << "\n";
    }
    return ok ? exit_ok : exit_fail;
}

inline int cmd_expand(const std::string& src, std::int64_t order_flag, std::ostream& out) {
    const auto order = resolve_order(order_flag, 50);
    Series s;
    try {
        s = expand(src, static_cast<std::size_t>(order));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    out << to_text(to_json(s)) << "\n";
    return exit_ok;
}

inline Partition parse_partition_arg(const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline int cmd_orbit(const std::string& text, std::ostream& out) {
    const Partition p = parse_partition_arg(text);
    if (!norm_is_4_mod_5(p)) throw UsageError("orbit: the norm must be 4 mod 5");
    Json arr = Json::array();
    Partition cur = p;
    for (int step = 0; step < 5; ++step) {
        arr.push_back(Json{{"partition", to_json(cur)}, {"norm", norm(cur)}, {"bg", bg_rank(cur)}, {"crank", crank5(cur)}});
        cur = orbit_op(cur);
    }
    out << to_text(arr) << "\n";
    return cur == p ? exit_ok : exit_fail;
}

inline int cmd_decompose(const std::string& text, int t, std::ostream& out) {
    if (t < 2) throw UsageError("decompose: --t must be at least 2");
    out << to_text(to_json(phi1(parse_partition_arg(text), t))) << "\n";
    return exit_ok;
}

inline int cmd_pj(int n, std::ostream& out) {
    if (n < 0) throw UsageError("pj: --n must be nonnegative");
    Json o = Json::object();
    for (const auto& [j, c] : count_pj(n)) o[std::to_string(j)] = c;
    out << to_text(o) << "\n";
    return exit_ok;
}

inline int cmd_table(std::int64_t max, bool csv, std::ostream& out) {
    if (max < 0) throw UsageError("table: --max must be nonnegative");
    const Series enumerated = core_series(5, static_cast<std::size_t>(max + 1));
    bool ok = true;
    Json arr = Json::array();
    if (csv) out << "n,enumerated,formula\n";
    for (std::int64_t n = 0; n <= max; ++n) {
        const auto& e = enumerated[static_cast<std::size_t>(n)];
        const auto f = a5_explicit(n);
        ok = ok && e == f;
        if (csv) out << n << "," << e.str() << "," << f.str() << "\n";
        else arr.push_back(Json{{"n", n}, {"enumerated", e.str()}, {"formula", f.str()}});
    }
    if (!csv) out << to_text(arr) << "\n";
    return ok ? exit_ok : exit_fail;
}

inline int cmd_gbg(int s, int t, std::int64_t order_flag, std::ostream& out) {
    if (s < 2 || t < 2) throw UsageError("gbg: --s and --t must be at least 2");
    if (std::gcd(s, t) != 1) throw UsageError("gbg: --s and --t must be coprime");
    const auto order = resolve_order(order_flag, 150);
    const auto nu = nu_count(s, t, true);
    Json values = Json::array();
    for (const auto& v : nu.values) values.push_back(to_string(v));
    const auto rep = verify_gbg_gf(s, t, order);
    Json o{{"s", s}, {"t", t}, {"nu", nu.count}, {"bound", nu_bound(s, t)}, {"values", std::move(values)}};
    o["g0"] = rep.g0 ? Json(to_string(*rep.g0)) : Json(nullptr);
    o["checks"] = Json::array({to_json(rep.zero_class), to_json(rep.graded)});
    out << to_text(o) << "\n";
    return rep.zero_class.status == Status::fail || rep.graded.status == Status::fail ? exit_fail : exit_ok;
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact BG-rank, t-core and q-series toolkit", "coreforge"};
    app.require_subcommand(1, 1);

    std::int64_t order = 0;
    std::string text;
    int t = 0, s = 0, n = -1, jobs = 1, j = 0;
    std::int64_t max = -1, coeff_n = -1;
    bool json = false, csv = false, timing = false;

    auto* expand_cmd = app.add_subcommand("expand", "expand a series expression");
    expand_cmd->add_option("expr", text, "expression")->required();
    expand_cmd->add_option("--order", order, "number of coefficients")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "check an identity by id, or all of them");
    verify_cmd->add_option("id", text, "identity id or 'all'")->required();
    verify_cmd->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", json, "JSON report array");
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--timing", timing, "include wall-clock seconds");

    auto* orbit_cmd = app.add_subcommand("orbit", "the orbit of a partition of 5n+4");
    orbit_cmd->add_option("partition", text, "e.g. [4]")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "t-core and t-quotient");
    decompose_cmd->add_option("partition", text, "e.g. [7,5,4,3,2]")->required();
    decompose_cmd->add_option("--t", t, "t")->required();

    auto* coeff_cmd = app.add_subcommand("coeff", "closed-form 5-core counts");
    coeff_cmd->require_subcommand(1, 1);
    auto* coeff_a5 = coeff_cmd->add_subcommand("a5", "a_5(n)");
    coeff_a5->add_option("n", coeff_n, "n")->required();
    auto* coeff_a5j = coeff_cmd->add_subcommand("a5j", "a_{5,j}(n)");
    coeff_a5j->add_option("j", j, "BG-rank in {-1,0,1}")->required();
    coeff_a5j->add_option("n", coeff_n, "n")->required();

    auto* table_cmd = app.add_subcommand("table", "coefficient tables");
    table_cmd->require_subcommand(1, 1);
    auto* table_a5 = table_cmd->add_subcommand("a5", "a_5(n), enumerated and by formula, 0 <= n <= max");
    table_a5->add_option("--max", max, "largest n")->required();
    table_a5->add_flag("--csv", csv, "CSV instead of JSON");

    auto* gbg_cmd = app.add_subcommand("gbg", "gbg values on t-cores and their generating functions");
    gbg_cmd->add_option("--s", s, "s")->required();
    gbg_cmd->add_option("--t", t, "t")->required();
    gbg_cmd->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);

    auto* pj_cmd = app.add_subcommand("pj", "partition counts by BG-rank");
    pj_cmd->add_option("--n", n, "n")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "coreforge: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*expand_cmd) return cmd_expand(text, order, out);
        if (*verify_cmd) return cmd_verify(text, order, json, jobs, timing, out);
        if (*orbit_cmd) return cmd_orbit(text, out);
        if (*decompose_cmd) return cmd_decompose(text, t, out);
        if (*coeff_a5) {
            if (coeff_n < 0) throw UsageError("coeff: n must be nonnegative");
            out << a5_explicit(coeff_n).str() << "\n";
            return exit_ok;
        }
        if (*coeff_a5j) {
            if (coeff_n < 0 || j < -1 || j > 1) throw UsageError("coeff: need j in {-1,0,1} and n >= 0");
            out << a5j_explicit(j, coeff_n).str() << "\n";
            return exit_ok;
        }
        if (*table_a5) return cmd_table(max, csv, out);
        if (*gbg_cmd) return cmd_gbg(s, t, order, out);
        if (*pj_cmd) return cmd_pj(n, out);
    } catch (const UsageError& e) {
        err << "coreforge: " << e.what() << "\n";
        return exit_usage;
    }
    err << "coreforge: no subcommand\n";
    return exit_usage;
}

}  // namespace coreforge::cli
