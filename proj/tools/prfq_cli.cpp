/*
   Copyright 2026 The prfq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prfq/prfq.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
    uint64_t q = 0;
    uint32_t p = 0, n = 0;
    std::string modulus;
    std::string f, g;
    unsigned s = 1;
    uint64_t seed = 1;
    bool json = false;
    uint64_t budget = 0;
    uint64_t samples = 0;
    unsigned jobs = 1;
    std::string data_dir;
};

// Raised on bad input; main turns it into exit code 2.
struct UsageError {
    std::string message;
};

// Raised when the library rejects a mathematically invalid request.
struct LibraryError {
    prfq_status status;
    std::string message;
};

void check(prfq_status st) {
    if (st == PRFQ_OK) return;
    if (st == PRFQ_ERR_PARSE || st == PRFQ_ERR_INVALID_ARGUMENT) throw UsageError{prfq_last_error()};
    throw LibraryError{st, prfq_last_error()};
}

struct CString {
    char* p = nullptr;
    ~CString() { prfq_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct Ratfun {
    prfq_ratfun* p = nullptr;
    Ratfun() = default;
    Ratfun(const Ratfun&) = delete;
    ~Ratfun() { prfq_ratfun_free(p); }
};

unsigned default_jobs() {
    if (const char* env = std::getenv("PRFQ_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

const prfq_field* resolve_field(const Flags& fl) {
    const prfq_field* F = nullptr;
    if (!fl.modulus.empty()) {
        std::vector<uint32_t> coeffs;
        std::stringstream ss(fl.modulus);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                coeffs.push_back(static_cast<uint32_t>(std::stoul(item)));
            } catch (const std::exception&) {
                throw UsageError{"--modulus expects comma-separated coefficients, constant term first"};
            }
        }
        uint32_t p = fl.p;
        if (!p && fl.q) {
            for (uint32_t d = 2; d <= fl.q; ++d)
                if (fl.q % d == 0) {
                    p = d;
                    break;
                }
        }
        if (!p) throw UsageError{"--modulus needs --p or --q"};
        check(prfq_field_with_modulus(p, coeffs.data(), coeffs.size(), &F));
        if (fl.q && prfq_field_order(F) != fl.q) throw UsageError{"--modulus does not match --q"};
        return F;
    }
    if (fl.q) {
        check(prfq_field_of_order(fl.q, &F));
        return F;
    }
    if (fl.p) {
        check(prfq_field_get(fl.p, fl.n ? fl.n : 1, &F));
        return F;
    }
    throw UsageError{"select a field with --q, --p/--n or --modulus"};
}

void parse_function(const prfq_field* F, const std::string& text, const char* flag, Ratfun& out) {
    if (text.empty()) throw UsageError{std::string(flag) + " is required"};
    check(prfq_ratfun_parse(F, text.c_str(), &out.p));
}

std::string to_string(const Ratfun& f) {
    CString s;
    check(prfq_ratfun_to_string(f.p, &s.p));
    return s.str();
}

std::string element(const prfq_field* F, uint32_t a) {
    CString s;
    check(prfq_elem_format(F, a, &s.p));
    return s.str();
}

prfq_options options(const Flags& fl) {
    prfq_options o;
    prfq_options_init(&o);
    o.budget = fl.budget;
    o.samples = fl.samples;
    o.seed = fl.seed;
    o.jobs = fl.jobs;
    o.data_dir = fl.data_dir.empty() ? nullptr : fl.data_dir.c_str();
    return o;
}

void emit(const Flags& fl, const json& j, const std::string& text) {
    if (fl.json) {
        json out;
        out["schema"] = PRFQ_SCHEMA_VERSION;
        for (const auto& [k, v] : j.items())
            if (k != "schema") out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int cmd_field(const Flags& fl) {
    const prfq_field* F = resolve_field(fl);
    CString d;
    check(prfq_field_describe(F, &d.p));
    const json j = json::parse(d.str());
    std::ostringstream t;
    t << "F_" << j["q"] << " = F_" << j["p"] << "[u]/(";
    const auto& m = j["modulus"];
    bool first = true;
    for (size_t i = m.size(); i-- > 0;) {
        const uint32_t c = m[i];
        if (!c) continue;
        if (!first) t << "+";
        first = false;
        if (c != 1 || i == 0) t << c;
        if (i > 0) t << (c != 1 ? "*" : "") << "u" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    t << ")\nprimitive element: " << j["primitive"].get<std::string>() << "\n";
    emit(fl, j, t.str());
    return kExitPass;
}

int cmd_carlitz(const Flags& fl, unsigned k_max) {
    const prfq_field* F = resolve_field(fl);
    const unsigned q = prfq_field_order(F);
    if (k_max == 0) k_max = q;
    json rows = json::array();
    std::ostringstream t;
    bool ok = true;
    for (unsigned k = 1; k <= k_max; ++k) {
        int holds = 0;
        check(prfq_carlitz_check(F, k, &holds));
        ok = ok && holds;
        rows.push_back({{"k", k}, {"holds", holds != 0}});
        t << "k=" << k << " " << (holds ? "ok" : "FAIL") << "\n";
    }
    t << (ok ? "pass" : "fail") << "\n";
    emit(fl, {{"q", q}, {"k_max", k_max}, {"results", rows}, {"passed", ok}}, t.str());
    return ok ? kExitPass : kExitFail;
}

int cmd_powersum(const Flags& fl, const std::string& method) {
    const prfq_field* F = resolve_field(fl);
    Ratfun f;
    parse_function(F, fl.f, "--f", f);
    json j = {{"q", prfq_field_order(F)}, {"f", to_string(f)}, {"s", fl.s}};
    std::ostringstream t;
    std::optional<uint32_t> closed, brute;
    if (method == "closed" || method == "both") {
        uint32_t v = 0;
        check(prfq_power_sum(f.p, fl.s, PRFQ_SUM_CLOSED, &v));
        closed = v;
        j["closed"] = element(F, v);
        t << "closed: " << element(F, v) << "\n";
    }
    if (method == "brute" || method == "both") {
        uint32_t v = 0;
        check(prfq_power_sum(f.p, fl.s, PRFQ_SUM_BRUTE, &v));
        brute = v;
        j["brute"] = element(F, v);
        t << "brute: " << element(F, v) << "\n";
    }
    bool ok = true;
    if (closed && brute) {
        ok = *closed == *brute;
        j["agree"] = ok;
        t << (ok ? "agree" : "MISMATCH") << "\n";
    }
    emit(fl, j, t.str());
    return ok ? kExitPass : kExitFail;
}

int cmd_is_pr(const Flags& fl, const std::string& method) {
    const prfq_field* F = resolve_field(fl);
    Ratfun f;
    parse_function(F, fl.f, "--f", f);
    json j = {{"q", prfq_field_order(F)}, {"f", to_string(f)}, {"degree", prfq_ratfun_degree(f.p)}};
    std::ostringstream t;
    std::optional<int> brute, hermite;
    if (method == "brute" || method == "both") {
        int v = 0;
        check(prfq_is_pr(f.p, PRFQ_PR_BRUTE, &v));
        brute = v;
        j["brute"] = v != 0;
    }
    if (method == "hermite" || method == "both") {
        int v = 0;
        check(prfq_is_pr(f.p, PRFQ_PR_HERMITE, &v));
        hermite = v;
        j["hermite"] = v != 0;
    }
    if (brute && hermite && *brute != *hermite) {
        j["is_pr"] = nullptr;
        emit(fl, j, "methods disagree\n");
        return kExitFail;
    }
    const bool pr = brute ? *brute : *hermite;
    j["is_pr"] = pr;
    t << to_string(f) << (pr ? " permutes" : " does not permute") << " P^1(F_" << prfq_field_order(F) << ")\n";
    emit(fl, j, t.str());
    return pr ? kExitPass : kExitFail;
}

int cmd_equiv(const Flags& fl) {
    const prfq_field* F = resolve_field(fl);
    Ratfun f, g;
    parse_function(F, fl.f, "--f", f);
    parse_function(F, fl.g, "--g", g);
    int eq = 0;
    CString w;
    check(prfq_equivalent(f.p, g.p, &eq, &w.p));
    json j = {{"q", prfq_field_order(F)}, {"f", to_string(f)}, {"g", to_string(g)}, {"equivalent", eq != 0}};
    std::ostringstream t;
    if (eq) {
        const json wj = json::parse(w.str());
        j["outer"] = wj["outer"];
        j["inner"] = wj["inner"];
        t << "equivalent: f = phi o g o psi\n  phi = " << wj["outer"].get<std::string>()
          << "\n  psi = " << wj["inner"].get<std::string>() << "\n";
    } else {
        t << "not equivalent\n";
    }
    emit(fl, j, t.str());
    return eq ? kExitPass : kExitFail;
}

int cmd_classify(const Flags& fl, int degree, const std::string& form, bool golden) {
    if (!fl.q) throw UsageError{"classify needs --q"};
    const prfq_options o = options(fl);
    CString out;
    check(prfq_classify(static_cast<uint32_t>(fl.q), degree, form.c_str(), &o, golden ? 1 : 0, &out.p));
    const json j = json::parse(out.str());
    std::ostringstream t;
    t << "q=" << j["q"] << " degree " << j["degree"] << " form " << j["form"].get<std::string>() << "\n";
    t << "search space " << j["search_space_size"] << ", PRs " << j["pr_count"] << ", polynomial-equivalent "
      << j["polynomial_equivalent"] << "\n";
    t << j["class_count"] << " classes\n";
    for (const auto& c : j["classes"])
        t << "  " << c["representative"].get<std::string>() << "  (" << c["members"] << " members)\n";
    bool ok = true;
    if (golden) {
        if (j["golden"].is_null()) {
            t << "no stored list\n";
        } else {
            ok = j["golden"]["passed"].get<bool>();
            t << "stored list " << j["golden"]["path"].get<std::string>() << ": " << (ok ? "match" : "MISMATCH")
              << "\n";
            for (const auto& e : j["golden"]["entries"]) {
                t << "  " << e["text"].get<std::string>() << " -> ";
                if (e["class"].is_null())
                    t << "no class";
                else
                    t << "class " << e["class"] << " via " << e["outer"].get<std::string>() << ", "
                      << e["inner"].get<std::string>();
                t << "\n";
            }
        }
    }
    emit(fl, j, t.str());
    return ok ? kExitPass : kExitFail;
}

std::string witness_line(const json& w) {
    std::ostringstream t;
    for (const auto& [k, v] : w["params"].items()) t << k << "=" << v.get<std::string>() << " ";
    t << "expected " << w["expected"].get<std::string>() << ", got " << w["observed"].get<std::string>();
    return t.str();
}

int cmd_verify(const Flags& fl, const std::string& theorem) {
    if (!fl.q) throw UsageError{"verify needs --q"};
    const prfq_options o = options(fl);
    CString out;
    int passed = 0;
    check(prfq_verify_theorem(theorem.c_str(), static_cast<uint32_t>(fl.q), &o, &out.p, &passed));
    const json j = json::parse(out.str());
    std::ostringstream t;
    t << j["theorem"].get<std::string>() << " q=" << j["q"] << ": " << (j["exhaustive"].get<bool>() ? "exhaustive" : "sampled")
      << ", " << j["cases"] << " of " << j["space"] << " cases, " << j["prs"] << " PRs, " << j["failures"]
      << " failures\n";
    for (const auto& w : j["witnesses"]) t << "  " << witness_line(w) << "\n";
    for (const auto& c : j["checks"]) {
        t << "  [" << (c["passed"].get<bool>() ? "ok" : "FAIL") << "] " << c["name"].get<std::string>() << " ("
          << c["cases"] << " cases)\n";
        for (const auto& w : c["witnesses"]) t << "      " << witness_line(w) << "\n";
    }
    t << (passed ? "pass" : "fail") << "\n";
    emit(fl, j, t.str());
    return passed ? kExitPass : kExitFail;
}

int cmd_resultants(const Flags& fl) {
    CString out;
    int passed = 0;
    check(prfq_resultants(fl.data_dir.empty() ? nullptr : fl.data_dir.c_str(), &out.p, &passed));
    const json j = json::parse(out.str());
    std::ostringstream t;
    for (const auto& r : j["results"]) {
        t << r["name"].get<std::string>() << " = " << r["computed"].get<std::string>() << "\n  expected "
          << r["expected"].get<std::string>() << ": "
          << (r["exact"].get<bool>() ? "exact" : r["up_to_sign"].get<bool>() ? "up to sign" : "MISMATCH") << "\n";
    }
    emit(fl, j, t.str());
    return passed ? kExitPass : kExitFail;
}

void print_criterion(const char* text, void*) {
    const json c = json::parse(text);
    std::fprintf(stderr, "%d %s %s (%.2fs)\n", c["id"].get<int>(), c["passed"].get<bool>() ? "PASS" : "FAIL",
                 c["title"].get<std::string>().c_str(), c["seconds"].get<double>());
    for (const auto& i : c["items"])
        if (!i["passed"].get<bool>())
            std::fprintf(stderr, "    FAIL %s: %s\n", i["label"].get<std::string>().c_str(),
                         i["detail"].get<std::string>().c_str());
}

int cmd_paper_check(const Flags& fl, const std::vector<int>& ids, bool fail_fast, bool quiet) {
    const prfq_options o = options(fl);
    CString out;
    int passed = 0;
    check(prfq_paper_check(&o, ids.data(), ids.size(), fail_fast ? 1 : 0, quiet ? nullptr : print_criterion, nullptr,
                           &out.p, &passed));
    const json j = json::parse(out.str());
    std::ostringstream t;
    for (const auto& c : j["criteria"]) {
        t << c["id"] << " " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << " " << c["title"].get<std::string>()
          << "\n";
        for (const auto& i : c["items"])
            t << "    [" << (i["passed"].get<bool>() ? "ok" : "FAIL") << "] " << i["label"].get<std::string>()
              << (i["detail"].get<std::string>().empty() ? "" : ": " + i["detail"].get<std::string>()) << "\n";
    }
    t << (passed ? "paper-check: pass" : "paper-check: fail") << "\n";
    emit(fl, j, t.str());
    return passed ? kExitPass : kExitFail;
}

void field_flags(CLI::App* sub, Flags& fl) {
    sub->add_option("--q", fl.q, "field order");
    sub->add_option("--p", fl.p, "characteristic");
    sub->add_option("--n", fl.n, "extension degree");
    sub->add_option("--modulus", fl.modulus, "monic modulus coefficients, constant term first");
}

void run_flags(CLI::App* sub, Flags& fl) {
    sub->add_option("--seed", fl.seed, "random seed");
    sub->add_option("--budget", fl.budget, "search budget (0 keeps the default)");
    sub->add_option("--samples", fl.samples, "sample count for large spaces");
    sub->add_option("--jobs", fl.jobs, "worker threads (default $PRFQ_JOBS or 1)")->check(CLI::PositiveNumber);
    sub->add_option("--data-dir", fl.data_dir, "data directory with fixtures/ and golden/");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation rational functions over finite fields"};
    app.require_subcommand(1);
    Flags fl;
    fl.jobs = default_jobs();
    app.add_flag("--json", fl.json, "print JSON");

    unsigned k_max = 0;
    std::string sum_method = "both", pr_method = "brute", form, theorem, criteria;
    int degree = 0;
    bool golden = false, fail_fast = false, quiet = false;

    auto* field = app.add_subcommand("field", "describe a finite field");
    field_flags(field, fl);

    auto* carlitz = app.add_subcommand("carlitz-verify", "check sum 1/(x-X)^k = 1/(X^q-X)^k for k <= k-max");
    field_flags(carlitz, fl);
    carlitz->add_option("--k-max", k_max, "largest k (default q)");

    auto* powersum = app.add_subcommand("powersum", "sum of f(x)^s over F_q");
    field_flags(powersum, fl);
    powersum->add_option("--f", fl.f, "rational function in x")->required();
    powersum->add_option("--s", fl.s, "exponent")->check(CLI::PositiveNumber);
    powersum->add_option("--method", sum_method, "closed, brute or both")
        ->check(CLI::IsMember({"closed", "brute", "both"}));

    auto* is_pr = app.add_subcommand("is-pr", "test whether f permutes P^1(F_q)");
    field_flags(is_pr, fl);
    is_pr->add_option("--f", fl.f, "rational function in x")->required();
    is_pr->add_option("--method", pr_method, "brute, hermite or both")
        ->check(CLI::IsMember({"brute", "hermite", "both"}));

    auto* equiv = app.add_subcommand("equiv", "find phi, psi with f = phi o g o psi");
    field_flags(equiv, fl);
    equiv->add_option("--f", fl.f, "first function")->required();
    equiv->add_option("--g", fl.g, "second function")->required();

    auto* classify = app.add_subcommand("classify", "classify PRs of a normal form");
    classify->add_option("--q", fl.q, "field order")->required();
    classify->add_option("--degree", degree, "3 or 4 (default from the form)");
    classify->add_option("--form", form, "deg3-nonpoly, 3.6, 3.12, or all (q <= 4)")->required();
    classify->add_flag("--golden", golden, "compare with the stored list");
    run_flags(classify, fl);

    auto* verify = app.add_subcommand("verify", "verify a theorem at one q");
    verify->add_option("--theorem", theorem, "L3.2, T3.3 .. T3.9, R3.3, R3.5, R4.6")->required();
    verify->add_option("--q", fl.q, "field order")->required();
    run_flags(verify, fl);

    auto* resultants = app.add_subcommand("resultants", "resultants of the fixture polynomials");
    resultants->add_option("--data-dir", fl.data_dir, "data directory");

    auto* batch = app.add_subcommand("paper-check", "run every acceptance criterion");
    batch->add_option("--criteria", criteria, "comma-separated subset of 1..9");
    batch->add_flag("--fail-fast", fail_fast, "stop after the first failing criterion");
    batch->add_flag("--quiet", quiet, "no progress on stderr");
    run_flags(batch, fl);

    for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", fl.json, "print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (field->parsed()) return cmd_field(fl);
        if (carlitz->parsed()) return cmd_carlitz(fl, k_max);
        if (powersum->parsed()) return cmd_powersum(fl, sum_method);
        if (is_pr->parsed()) return cmd_is_pr(fl, pr_method);
        if (equiv->parsed()) return cmd_equiv(fl);
        if (classify->parsed()) return cmd_classify(fl, degree, form, golden);
        if (verify->parsed()) return cmd_verify(fl, theorem);
        if (resultants->parsed()) return cmd_resultants(fl);
        if (batch->parsed()) {
            std::vector<int> ids;
            std::stringstream ss(criteria);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    ids.push_back(std::stoi(item));
                } catch (const std::exception&) {
                    throw UsageError{"--criteria expects integers"};
                }
            }
            return cmd_paper_check(fl, ids, fail_fast, quiet);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const LibraryError& e) {
        const json diag = {{"schema", PRFQ_SCHEMA_VERSION},
                           {"error", prfq_status_string(e.status)},
                           {"message", e.message}};
        std::cerr << diag.dump() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
