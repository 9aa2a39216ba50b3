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

#include "prfq/prfq.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prfq/carlitz.hpp"
#include "prfq/classify.hpp"
#include "prfq/errors.hpp"
#include "prfq/expr.hpp"
#include "prfq/gf.hpp"
#include "prfq/perm.hpp"
#include "prfq/ratfun.hpp"
#include "prfq/reproduce.hpp"

using json = nlohmann::ordered_json;

struct prfq_ratfun {
    prfq::RationalFunction f;
};

namespace {

thread_local std::string last_error;

const prfq::FiniteField& field_of(const prfq_field* f) { return *reinterpret_cast<const prfq::FiniteField*>(f); }

const prfq_field* handle(const prfq::FiniteField& f) { return reinterpret_cast<const prfq_field*>(&f); }

prfq_status fail(prfq_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class Fn>
prfq_status guarded(Fn&& fn) {
    try {
        fn();
        last_error.clear();
        return PRFQ_OK;
    } catch (const prfq::FormulaOutOfRange& e) {
        return fail(PRFQ_ERR_OUT_OF_RANGE, e.what());
    } catch (const prfq::DomainError& e) {
        return fail(PRFQ_ERR_DOMAIN, e.what());
    } catch (const prfq::FieldMismatch& e) {
        return fail(PRFQ_ERR_FIELD_MISMATCH, e.what());
    } catch (const prfq::ParseError& e) {
        return fail(PRFQ_ERR_PARSE, e.what());
    } catch (const prfq::BudgetExceeded& e) {
        return fail(PRFQ_ERR_BUDGET, e.what());
    } catch (const prfq::IoError& e) {
        return fail(PRFQ_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PRFQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const json::exception& e) {
        return fail(PRFQ_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PRFQ_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PRFQ_ERR_INTERNAL, e.what());
    }
}

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

char* dump(json j) {
    json out;
    out["schema"] = PRFQ_SCHEMA_VERSION;
    for (auto& [k, v] : j.items()) out[k] = std::move(v);
    return copy_string(out.dump(2));
}

void check_element(const prfq::FiniteField& F, uint32_t a) {
    if (a >= F.order()) throw std::invalid_argument("element representation out of range");
}

prfq::VerifyOptions verify_options(const prfq_options* o) {
    prfq::VerifyOptions v;
    if (!o) return v;
    if (o->budget) v.budget = o->budget;
    if (o->samples) v.samples = o->samples;
    v.seed = o->seed;
    if (o->jobs) v.jobs = o->jobs;
    if (o->data_dir) v.data_dir = o->data_dir;
    return v;
}

json witness_json(const prfq::Witness& w) {
    json params = json::object();
    for (const auto& [k, v] : w.params) params[k] = v;
    return {{"params", params}, {"expected", w.expected}, {"observed", w.observed}};
}

json witnesses_json(const std::vector<prfq::Witness>& ws) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(witness_json(w));
    return out;
}

json report_json(const prfq::TheoremReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"cases", c.cases},
                          {"failures", c.failures},
                          {"passed", c.passed()},
                          {"witnesses", witnesses_json(c.witnesses)}});
    return {{"theorem", r.theorem}, {"q", r.q},           {"seed", r.seed},
            {"exhaustive", r.exhaustive}, {"space", r.space}, {"cases", r.cases},
            {"prs", r.prs},         {"failures", r.failures}, {"witnesses", witnesses_json(r.witnesses)},
            {"checks", checks},     {"passed", r.passed()}};
}

json classification_json(const prfq::ClassificationReport& r, bool all) {
    json classes = json::array();
    for (const auto& c : r.classes) classes.push_back({{"representative", c.representative}, {"members", c.members}});
    return {{"q", r.q},
            {"degree", r.degree},
            {"form", all ? std::string("all") : prfq::form_name(r.form)},
            {"search_space_size", r.search_space_size},
            {"pr_count", r.pr_count},
            {"polynomial_equivalent", r.polynomial_equivalent},
            {"class_count", r.class_count()},
            {"classes", classes}};
}

json golden_json(const prfq::GoldenComparison& g) {
    json entries = json::array();
    for (const auto& e : g.entries) {
        json j = {{"text", e.text}, {"canonical", e.canonical}, {"is_pr", e.is_pr}};
        if (e.class_index) {
            j["class"] = *e.class_index;
            j["outer"] = e.outer;
            j["inner"] = e.inner;
        } else {
            j["class"] = nullptr;
        }
        entries.push_back(std::move(j));
    }
    return {{"path", g.path}, {"passed", g.passed()}, {"class_hits", g.class_hits}, {"entries", entries}};
}

json criterion_json(const prfq::CriterionResult& c) {
    json items = json::array();
    for (const auto& i : c.items) items.push_back({{"label", i.label}, {"passed", i.passed}, {"detail", i.detail}});
    return {{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"seconds", c.seconds}, {"items", items}};
}

const prfq::FiniteField& param_field(prfq::Family family, const std::string& name, const prfq::FiniteField& F) {
    using prfq::Family;
    unsigned k = 1;
    if (name == "r") k = (family == Family::T39 || family == Family::Form312) ? 3 : 2;
    if (name == "c") k = 2;
    if (name == "b" && family == Family::Form32) k = 2;
    return prfq::FiniteField::get(F.characteristic(), F.degree() * k);
}

}  // namespace

extern "C" {

const char* prfq_version(void) { return "0.1.0"; }

const char* prfq_status_string(prfq_status status) {
    switch (status) {
        case PRFQ_OK: return "ok";
        case PRFQ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case PRFQ_ERR_PARSE: return "parse error";
        case PRFQ_ERR_DOMAIN: return "domain error";
        case PRFQ_ERR_FIELD_MISMATCH: return "field mismatch";
        case PRFQ_ERR_OUT_OF_RANGE: return "formula out of range";
        case PRFQ_ERR_BUDGET: return "budget exceeded";
        case PRFQ_ERR_IO: return "i/o error";
        case PRFQ_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* prfq_last_error(void) { return last_error.c_str(); }

void prfq_string_free(char* s) { std::free(s); }

void prfq_options_init(prfq_options* o) {
    if (!o) return;
    o->budget = 0;
    o->samples = 0;
    o->seed = 1;
    o->jobs = 1;
    o->data_dir = nullptr;
}

prfq_status prfq_field_get(uint32_t p, uint32_t n, const prfq_field** out) {
    return guarded([&] {
        require(out, "null output");
        *out = handle(prfq::FiniteField::get(p, n));
    });
}

prfq_status prfq_field_of_order(uint64_t q, const prfq_field** out) {
    return guarded([&] {
        require(out, "null output");
        *out = handle(prfq::FiniteField::of_order(q));
    });
}

prfq_status prfq_field_with_modulus(uint32_t p, const uint32_t* modulus, size_t length, const prfq_field** out) {
    return guarded([&] {
        require(out && modulus && length >= 2, "modulus needs at least two coefficients");
        *out = handle(prfq::FiniteField::with_modulus(p, std::vector<uint32_t>(modulus, modulus + length)));
    });
}

uint32_t prfq_field_order(const prfq_field* field) { return field ? field_of(field).order() : 0; }

uint32_t prfq_field_characteristic(const prfq_field* field) { return field ? field_of(field).characteristic() : 0; }

uint32_t prfq_field_degree(const prfq_field* field) { return field ? field_of(field).degree() : 0; }

prfq_status prfq_field_describe(const prfq_field* field, char** out) {
    return guarded([&] {
        require(field && out, "null argument");
        const auto& F = field_of(field);
        *out = dump({{"p", F.characteristic()},
                     {"n", F.degree()},
                     {"q", F.order()},
                     {"modulus", F.modulus()},
                     {"canonical", F.is_canonical()},
                     {"primitive", F.format(F.primitive())}});
    });
}

prfq_status prfq_elem_parse(const prfq_field* field, const char* text, uint32_t* out) {
    return guarded([&] {
        require(field && text && out, "null argument");
        *out = prfq::parse_field_element(text, field_of(field)).rep();
    });
}

prfq_status prfq_elem_format(const prfq_field* field, uint32_t a, char** out) {
    return guarded([&] {
        require(field && out, "null argument");
        check_element(field_of(field), a);
        *out = copy_string(field_of(field).format(a));
    });
}

#define PRFQ_BINARY_OP(name, op)                                                                   \
    prfq_status name(const prfq_field* field, uint32_t a, uint32_t b, uint32_t* out) {             \
        return guarded([&] {                                                                       \
            require(field && out, "null argument");                                                \
            const auto& F = field_of(field);                                                       \
            check_element(F, a);                                                                   \
            check_element(F, b);                                                                   \
            *out = F.op(a, b);                                                                     \
        });                                                                                        \
    }

PRFQ_BINARY_OP(prfq_elem_add, add)
PRFQ_BINARY_OP(prfq_elem_sub, sub)
PRFQ_BINARY_OP(prfq_elem_mul, mul)

#undef PRFQ_BINARY_OP

prfq_status prfq_elem_inv(const prfq_field* field, uint32_t a, uint32_t* out) {
    return guarded([&] {
        require(field && out, "null argument");
        check_element(field_of(field), a);
        *out = field_of(field).inv(a);
    });
}

prfq_status prfq_elem_pow(const prfq_field* field, uint32_t a, uint64_t e, uint32_t* out) {
    return guarded([&] {
        require(field && out, "null argument");
        check_element(field_of(field), a);
        *out = field_of(field).pow(a, e);
    });
}

prfq_status prfq_ratfun_parse(const prfq_field* field, const char* text, prfq_ratfun** out) {
    return guarded([&] {
        require(field && text && out, "null argument");
        *out = new prfq_ratfun{prfq::parse_rational_function(text, field_of(field))};
    });
}

void prfq_ratfun_free(prfq_ratfun* f) { delete f; }

const prfq_field* prfq_ratfun_field(const prfq_ratfun* f) { return f ? handle(f->f.field()) : nullptr; }

int prfq_ratfun_degree(const prfq_ratfun* f) { return f ? f->f.degree() : -1; }

prfq_status prfq_ratfun_to_string(const prfq_ratfun* f, char** out) {
    return guarded([&] {
        require(f && out, "null argument");
        *out = copy_string(f->f.to_string());
    });
}

prfq_status prfq_ratfun_eval(const prfq_ratfun* f, uint32_t point, uint32_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        require(point <= f->f.field().order(), "point index out of range");
        *out = f->f.eval_index(point);
    });
}

prfq_status prfq_ratfun_compose(const prfq_ratfun* f, const prfq_ratfun* g, prfq_ratfun** out) {
    return guarded([&] {
        require(f && g && out, "null argument");
        if (&f->f.field() != &g->f.field()) throw prfq::FieldMismatch();
        *out = new prfq_ratfun{prfq::compose(f->f, g->f)};
    });
}

prfq_status prfq_family_build(const char* family, uint32_t q, const char* params, prfq_ratfun** out) {
    return guarded([&] {
        require(family && out, "null argument");
        const auto fam = prfq::family_from_name(family);
        if (!fam) throw std::invalid_argument(std::string("unknown family ") + family);
        const auto& F = prfq::FiniteField::of_order(q);
        prfq::PRFamilySpec spec{*fam, q, {}, {}, {}, {}, {}, -1};
        const json p = params && *params ? json::parse(params) : json::object();
        require(p.is_object(), "params must be a JSON object");
        for (const auto& [key, value] : p.items()) {
            if (key == "epsilon") {
                spec.epsilon = value.get<int>();
                continue;
            }
            std::optional<prfq::FieldElement>* slot = key == "r"       ? &spec.r
                                                      : key == "a"     ? &spec.a
                                                      : key == "b"     ? &spec.b
                                                      : key == "c"     ? &spec.c
                                                      : key == "delta" ? &spec.delta
                                                                       : nullptr;
            if (!slot) throw std::invalid_argument("unknown parameter " + key);
            const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
            *slot = prfq::parse_field_element(text, param_field(*fam, key, F));
        }
        *out = new prfq_ratfun{prfq::build_family(spec)};
    });
}

prfq_status prfq_carlitz_check(const prfq_field* field, unsigned k, int* holds) {
    return guarded([&] {
        require(field && holds, "null argument");
        *holds = prfq::carlitz_identity_check(field_of(field), k) ? 1 : 0;
    });
}

prfq_status prfq_power_sum(const prfq_ratfun* f, unsigned s, prfq_sum_method method, uint32_t* out) {
    return guarded([&] {
        require(f && out, "null argument");
        switch (method) {
            case PRFQ_SUM_CLOSED: *out = prfq::power_sum_closed(f->f, s).rep(); break;
            case PRFQ_SUM_BRUTE: *out = prfq::power_sum_brute(f->f, s).rep(); break;
            case PRFQ_SUM_AUTO: *out = prfq::power_sum(f->f, s).rep(); break;
            default: throw std::invalid_argument("unknown power-sum method");
        }
    });
}

prfq_status prfq_is_pr(const prfq_ratfun* f, prfq_pr_method method, int* out) {
    return guarded([&] {
        require(f && out, "null argument");
        switch (method) {
            case PRFQ_PR_BRUTE: *out = prfq::is_pr_brute(f->f) ? 1 : 0; break;
            case PRFQ_PR_HERMITE: *out = prfq::hermite_test(f->f) ? 1 : 0; break;
            default: throw std::invalid_argument("unknown PR method");
        }
    });
}

prfq_status prfq_equivalent(const prfq_ratfun* f, const prfq_ratfun* g, int* out, char** witness) {
    return guarded([&] {
        require(f && g && out, "null argument");
        if (&f->f.field() != &g->f.field()) throw prfq::FieldMismatch();
        const auto w = prfq::are_equivalent(f->f, g->f);
        *out = w ? 1 : 0;
        if (witness)
            *witness = w ? dump({{"outer", w->outer.to_string()}, {"inner", w->inner.to_string()}}) : nullptr;
    });
}

prfq_status prfq_theorem_ids(char** out) {
    return guarded([&] {
        require(out, "null output");
        *out = dump({{"theorems", prfq::theorem_ids()}});
    });
}

prfq_status prfq_verify_theorem(const char* id, uint32_t q, const prfq_options* options, char** out, int* passed) {
    return guarded([&] {
        require(id && out, "null argument");
        const auto report = prfq::verify_theorem(id, q, verify_options(options));
        *out = dump(report_json(report));
        if (passed) *passed = report.passed() ? 1 : 0;
    });
}

prfq_status prfq_classify(uint32_t q, int degree, const char* form, const prfq_options* options, int with_golden,
                          char** out) {
    return guarded([&] {
        require(form && out, "null argument");
        prfq::ClassifyOptions co;
        std::string data_dir;
        if (options) {
            if (options->budget) co.budget = options->budget;
            if (options->jobs) co.jobs = options->jobs;
            if (options->data_dir) data_dir = options->data_dir;
        }
        if (std::string(form) == "all") {
            require(degree > 0, "form all needs a degree");
            *out = dump(classification_json(prfq::classify_all(q, degree, co), true));
            return;
        }
        const auto f = prfq::form_from_name(form);
        if (!f) throw std::invalid_argument(std::string("unknown form ") + form);
        if (degree == 0) degree = prfq::form_degree(*f);
        if (degree != prfq::form_degree(*f))
            throw prfq::DomainError("form " + prfq::form_name(*f) + " has degree " +
                                    std::to_string(prfq::form_degree(*f)));
        const auto report = prfq::classify(q, degree, *f, co);
        json j = classification_json(report, false);
        if (with_golden) {
            try {
                j["golden"] = golden_json(prfq::compare_golden(report, data_dir));
            } catch (const prfq::IoError&) {
                j["golden"] = nullptr;
            }
        }
        *out = dump(std::move(j));
    });
}

prfq_status prfq_resultants(const char* data_dir, char** out, int* passed) {
    return guarded([&] {
        require(out, "null output");
        const auto checks = prfq::check_resultants(data_dir ? data_dir : "");
        json results = json::array();
        bool ok = true;
        for (const auto& c : checks) {
            results.push_back({{"name", c.name},
                               {"computed", c.computed},
                               {"expected", c.expected},
                               {"exact", c.exact},
                               {"up_to_sign", c.up_to_sign}});
            ok = ok && c.exact;
        }
        *out = dump({{"passed", ok}, {"results", results}});
        if (passed) *passed = ok ? 1 : 0;
    });
}

prfq_status prfq_paper_check(const prfq_options* options, const int* ids, size_t count, int fail_fast,
                             prfq_progress_fn progress, void* user, char** out, int* passed) {
    return guarded([&] {
        require(out, "null output");
        require(count == 0 || ids, "null id list");
        prfq::PaperCheckOptions po;
        if (options) {
            if (options->jobs) po.jobs = options->jobs;
            po.seed = options->seed;
            if (options->data_dir) po.data_dir = options->data_dir;
        }
        std::vector<int> list(ids, ids + count);
        for (int id : list) require(id >= 1 && id <= prfq::kCriteria, "criterion id out of range");
        std::function<void(const prfq::CriterionResult&)> cb;
        if (progress)
            cb = [&](const prfq::CriterionResult& c) {
                const std::string text = criterion_json(c).dump();
                progress(text.c_str(), user);
            };
        const auto result = prfq::paper_check(po, list, fail_fast != 0, cb);
        json criteria = json::array();
        for (const auto& c : result.criteria) criteria.push_back(criterion_json(c));
        *out = dump({{"passed", result.passed}, {"seconds", result.seconds}, {"criteria", criteria}});
        if (passed) *passed = result.passed ? 1 : 0;
    });
}

}  // extern "C"
