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

#include "prfq/reproduce.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <tuple>
#include <random>
#include <sstream>

#include "prfq/carlitz.hpp"
#include "prfq/classify.hpp"
#include "prfq/errors.hpp"
#include "prfq/symident.hpp"
#include "prfq/sweep.hpp"

namespace prfq {

namespace {

std::string data_dir_of(const PaperCheckOptions& opt) {
    return opt.data_dir.empty() ? default_data_dir() : opt.data_dir;
}

VerifyOptions verify_options(const PaperCheckOptions& opt, uint64_t budget = uint64_t{1} << 22) {
    VerifyOptions v;
    v.budget = budget;
    v.seed = opt.seed;
    v.jobs = opt.jobs;
    v.data_dir = data_dir_of(opt);
    return v;
}

std::string witness_text(const Witness& w) {
    std::string s;
    for (const auto& [k, v] : w.params) s += k + "=" + v + " ";
    return s + "expected " + w.expected + ", observed " + w.observed;
}

// Theorem reports shared between criteria within one process.
const TheoremReport& report(const std::string& id, uint32_t q, const PaperCheckOptions& opt,
                            uint64_t budget = uint64_t{1} << 22) {
    static std::mutex mu;
    static std::map<std::tuple<std::string, uint32_t, uint64_t, uint64_t, std::string>, TheoremReport> cache;
    const auto key = std::make_tuple(id, q, opt.seed, budget, data_dir_of(opt));
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    TheoremReport r = verify_theorem(id, q, verify_options(opt, budget));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(r)).first->second;
}

// Sweep verdict, optionally requiring exhaustiveness.
CheckItem sweep_item(const TheoremReport& r, bool need_exhaustive) {
    CheckItem it;
    it.label = r.theorem + " q=" + std::to_string(r.q);
    it.passed = r.failures == 0 && r.cases > 0 && (!need_exhaustive || r.exhaustive);
    std::ostringstream d;
    d << (r.exhaustive ? "exhaustive" : "sampled") << ", " << r.cases << " of " << r.space << " cases, " << r.prs
      << " PRs, " << r.failures << " mismatches";
    if (!r.witnesses.empty()) d << "; first: " << witness_text(r.witnesses.front());
    it.detail = d.str();
    return it;
}

CheckItem check_item(const TheoremReport& r, const std::string& prefix) {
    for (const auto& c : r.checks) {
        if (c.name.rfind(prefix, 0) != 0) continue;
        CheckItem it;
        it.label = r.theorem + " q=" + std::to_string(r.q) + ": " + c.name;
        it.passed = c.passed();
        it.detail = std::to_string(c.cases) + " cases, " + std::to_string(c.failures) + " failures";
        if (!c.witnesses.empty()) it.detail += "; first: " + witness_text(c.witnesses.front());
        return it;
    }
    return {r.theorem + ": " + prefix, false, "check not found"};
}

// ---- 1 ----------------------------------------------------------------------

void criterion1(CriterionResult& res, const PaperCheckOptions&) {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const FiniteField& F = FiniteField::of_order(q);
        std::string bad;
        for (unsigned k = 1; k <= q; ++k)
            if (!carlitz_identity_check(F, k)) bad += (bad.empty() ? "" : ",") + std::to_string(k);
        res.items.push_back({"q=" + std::to_string(q) + ", k=1.." + std::to_string(q), bad.empty(),
                             bad.empty() ? "identity holds" : "fails at k=" + bad});
    }
}

// ---- 2 ----------------------------------------------------------------------

std::vector<uint32_t> digits(uint64_t v, unsigned n, uint32_t q) {
    std::vector<uint32_t> c(n);
    for (auto& x : c) {
        x = static_cast<uint32_t>(v % q);
        v /= q;
    }
    return c;
}

bool rootless(const Polynomial& Q) {
    const uint32_t q = Q.field().order();
    for (uint32_t x = 0; x < q; ++x)
        if (Q.eval(x) == 0) return false;
    return true;
}

std::vector<Polynomial> rootless_denominators(const FiniteField& F) {
    const uint32_t q = F.order();
    std::vector<Polynomial> out;
    uint64_t count = 1;
    for (unsigned e = 0; e <= 4; ++e, count *= q)
        for (uint64_t j = 0; j < count; ++j) {
            auto c = digits(j, e, q);
            c.push_back(1);
            Polynomial Q(F, c);
            if (rootless(Q)) out.push_back(std::move(Q));
        }
    return out;
}

struct OracleTally {
    uint64_t compared = 0, skipped = 0, mismatches = 0;
    std::string first;
    void run(const RationalFunction& f, unsigned s) {
        FieldElement closed = f.field().zero();
        try {
            closed = power_sum_closed(f, s);
        } catch (const FormulaOutOfRange&) {
            ++skipped;
            return;
        }
        ++compared;
        const FieldElement brute = power_sum_brute(f, s);
        if (closed != brute && mismatches++ == 0)
            first = "f=" + f.to_string() + " s=" + std::to_string(s) + ": closed " + closed.to_string() +
                    ", brute " + brute.to_string();
    }
    CheckItem item(const std::string& label) const {
        std::string d = std::to_string(compared) + " compared, " + std::to_string(skipped) +
                        " outside the formula's range, " + std::to_string(mismatches) + " mismatches";
        if (!first.empty()) d += "; first: " + first;
        return {label, mismatches == 0 && compared > 0, d};
    }
};

void criterion2(CriterionResult& res, const PaperCheckOptions& opt) {
    // All numerators of degree <= 4 over every rootless monic denominator.
    for (uint32_t q : {2u, 3u, 4u, 5u}) {
        const FiniteField& F = FiniteField::of_order(q);
        OracleTally t;
        uint64_t nums = 1;
        for (int i = 0; i < 5; ++i) nums *= q;
        for (const Polynomial& Q : rootless_denominators(F))
            for (uint64_t i = 0; i < nums; ++i) {
                const RationalFunction f(Polynomial(F, digits(i, 5, q)), Q);
                if (!(f.den() == Q)) continue;
                for (unsigned s = 1; s < q; ++s) t.run(f, s);
            }
        res.items.push_back(t.item("q=" + std::to_string(q) + " exhaustive"));
    }
    // Every rootless denominator and s, seeded numerators.
    std::mt19937_64 rng(opt.seed);
    for (uint32_t q : {7u, 8u, 9u}) {
        const FiniteField& F = FiniteField::of_order(q);
        OracleTally t;
        for (const Polynomial& Q : rootless_denominators(F))
            for (int j = 0; j < 4; ++j) {
                std::vector<uint32_t> c(5);
                for (auto& x : c) x = static_cast<uint32_t>(detail::bounded(rng, q));
                const RationalFunction f(Polynomial(F, c), Q);
                for (unsigned s = 1; s < q; ++s) t.run(f, s);
            }
        res.items.push_back(t.item("q=" + std::to_string(q) + " all denominators, sampled numerators"));
    }
    for (uint32_t q : {16u, 25u, 27u, 32u, 49u, 64u}) {
        const FiniteField& F = FiniteField::of_order(q);
        OracleTally t;
        while (t.compared < 1000) {
            std::vector<uint32_t> pc(5), qc(1 + detail::bounded(rng, 5));
            for (auto& x : pc) x = static_cast<uint32_t>(detail::bounded(rng, q));
            for (auto& x : qc) x = static_cast<uint32_t>(detail::bounded(rng, q));
            qc.back() = 1;
            const Polynomial Q(F, qc);
            if (!rootless(Q)) continue;
            t.run(RationalFunction(Polynomial(F, pc), Q), static_cast<unsigned>(1 + detail::bounded(rng, q - 1)));
        }
        res.items.push_back(t.item("q=" + std::to_string(q) + " seeded random"));
    }
}

// ---- 3 to 6, 8 ----------------------------------------------------------------

void criterion3(CriterionResult& res, const PaperCheckOptions& opt) {
    for (uint32_t q : {2u, 4u, 8u, 16u, 32u}) res.items.push_back(sweep_item(report("T3.3", q, opt), true));
    for (uint32_t q : {5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u}) res.items.push_back(sweep_item(report("T3.4", q, opt), true));
}

void criterion4(CriterionResult& res, const PaperCheckOptions& opt) {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) res.items.push_back(sweep_item(report("L3.2", q, opt), true));
}

constexpr uint64_t kLargeBudget = uint64_t{1} << 24;

void criterion5(CriterionResult& res, const PaperCheckOptions& opt) {
    auto none = [&](const std::string& id, uint32_t q) {
        const TheoremReport& r = report(id, q, opt);
        CheckItem it = sweep_item(r, true);
        it.passed = it.passed && r.prs == 0;
        res.items.push_back(it);
    };
    none("T3.5", 32);
    none("T3.6", 11);
    none("T3.6", 13);
    none("T3.7", 27);
    for (uint32_t q : {5u, 7u, 8u, 11u}) none("T3.8", q);
    for (uint32_t q : {27u, 81u}) res.items.push_back(sweep_item(report("T3.9", q, opt, kLargeBudget), true));
}

void criterion6(CriterionResult& res, const PaperCheckOptions& opt) {
    for (uint32_t q : {32u, 64u}) res.items.push_back(check_item(report("T3.5", q, opt), "X^2+1/(X^2+X+c)"));
    res.items.push_back(check_item(report("T3.5", 32, opt), "b=0: sum f^3"));
    for (uint32_t q : {11u, 13u}) res.items.push_back(check_item(report("T3.6", q, opt), "sum f^2"));
}

void criterion8(CriterionResult& res, const PaperCheckOptions& opt) {
    uint64_t total = 0;
    for (uint32_t q : {7u, 11u, 13u, 25u}) {
        const TheoremReport& r = report("T3.8", q, opt);
        CheckItem it = check_item(r, "on r1+r2+r3=0");
        for (const auto& c : r.checks)
            if (c.name.rfind("on r1+r2+r3=0", 0) == 0) total += c.cases;
        res.items.push_back(it);
    }
    res.items.push_back({"at least 200 instantiations", total >= 200, std::to_string(total) + " instantiations"});
}

// ---- 7 ----------------------------------------------------------------------

void criterion7(CriterionResult& res, const PaperCheckOptions& opt) {
    for (const auto& r : check_resultants(data_dir_of(opt))) {
        std::string d = "computed " + r.computed + ", expected " + r.expected;
        if (!r.exact) {
            d += r.up_to_sign ? " (equal up to sign)" : " (differ)";
            const MultiPoly c = MultiPoly::parse(r.computed), e = MultiPoly::parse(r.expected);
            try {
                d += "; computed/expected = " + (c / e).to_string();
            } catch (const DomainError&) {
            }
        }
        res.items.push_back({r.name, r.exact, d});
    }
}

// ---- 9 ----------------------------------------------------------------------

RationalFunction degree3_member(uint32_t q) {
    const FiniteField& F = FiniteField::of_order(q);
    const FiniteField& E = FiniteField::get(F.characteristic(), 2 * F.degree());
    PRFamilySpec s;
    s.q = q;
    if (F.characteristic() == 2) {
        s.family = Family::T33;
        for (uint32_t c = 0; c < q; ++c)
            if (!trace(F.element(c), 2).is_zero()) {
                s.r = roots_over(Polynomial(F, {c, 1, 1}), E).front().value;
                break;
            }
    } else {
        s.family = Family::T34;
        for (uint32_t c = 1; c < q; ++c)
            if (!is_square(F.element(c))) {
                s.r = roots_over(Polynomial(F, {F.neg(c), 0, 1}), E).front().value;
                s.a = F.element(F.neg(F.inv(F.mul(F.from_int(4), c))));
                break;
            }
    }
    return build_family(s);
}

void criterion9(CriterionResult& res, const PaperCheckOptions& opt) {
    ClassifyOptions co;
    co.jobs = opt.jobs;
    const std::string dir = data_dir_of(opt);
    const std::vector<std::pair<Form, std::vector<std::pair<uint32_t, size_t>>>> lists = {
        {Form::Form36, {{2, 2}, {4, 5}, {8, 3}, {16, 0}, {3, 3}, {9, 0}, {5, 2}, {7, 1}}},
        {Form::Form312, {{2, 0}, {4, 0}, {3, 2}, {9, 1}}}};
    for (const auto& [form, cases] : lists)
        for (const auto& [q, count] : cases) {
            const ClassificationReport r = classify(q, 4, form, co);
            const GoldenComparison g = compare_golden(r, dir);
            std::string d = std::to_string(r.class_count()) + " classes (expected " + std::to_string(count) + ")";
            for (const auto& e : g.entries) {
                d += "; " + e.text;
                if (!e.is_pr) d += " is not PR";
                if (e.class_index)
                    d += " ~ " + r.classes[*e.class_index].representative + " via outer " + e.outer + ", inner " +
                         e.inner;
                else
                    d += " matches no class";
            }
            res.items.push_back({form_name(form) + " q=" + std::to_string(q),
                                 r.class_count() == count && g.passed(), d});
        }
    for (const auto& [q, count] : std::vector<std::pair<uint32_t, size_t>>{
             {2, 1}, {4, 1}, {8, 1}, {16, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 0}, {9, 0}}) {
        const ClassificationReport r = classify(q, 3, Form::Deg3NonPoly, co);
        std::string d = std::to_string(r.class_count()) + " non-polynomial classes (expected " +
                        std::to_string(count) + "), " + std::to_string(r.pr_count) + " PRs, " +
                        std::to_string(r.polynomial_equivalent) + " equivalent to a polynomial";
        for (const auto& c : r.classes) d += "; " + c.representative;
        if (r.class_count() < count)
            if (auto w = polynomial_witness(degree3_member(q)))
                d += "; e.g. " + degree3_member(q).to_string() + " becomes " + w->g.to_string() + " via outer " +
                     w->outer.to_string() + ", inner " + w->inner.to_string();
        res.items.push_back({"deg3-nonpoly q=" + std::to_string(q), r.class_count() == count, d});
    }
}

}  // namespace

std::string criterion_title(int id) {
    switch (id) {
        case 1: return "Carlitz identity";
        case 2: return "closed-form power sums agree with brute force";
        case 3: return "degree-3 families: PR exactly at the stated parameters";
        case 4: return "form X + b/(X-r) + b^q/(X-r^q): PRs have b in F_q*";
        case 5: return "degree-4 sweeps: non-existence and the characteristic-3 family";
        case 6: return "power-sum fingerprints";
        case 7: return "resultants of h1 with h2 and h3";
        case 8: return "closed forms for sums of f, f^2, f^3 on r1+r2+r3=0";
        case 9: return "classification lists";
    }
    throw DomainError("criteria are numbered 1.." + std::to_string(kCriteria));
}

CriterionResult run_criterion(int id, const PaperCheckOptions& opt) {
    CriterionResult res;
    res.id = id;
    res.title = criterion_title(id);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (id) {
            case 1: criterion1(res, opt); break;
            case 2: criterion2(res, opt); break;
            case 3: criterion3(res, opt); break;
            case 4: criterion4(res, opt); break;
            case 5: criterion5(res, opt); break;
            case 6: criterion6(res, opt); break;
            case 7: criterion7(res, opt); break;
            case 8: criterion8(res, opt); break;
            case 9: criterion9(res, opt); break;
        }
    } catch (const std::exception& e) {
        res.items.push_back({"error", false, e.what()});
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.passed = !res.items.empty();
    for (const auto& it : res.items) res.passed = res.passed && it.passed;
    return res;
}

PaperCheckResult paper_check(const PaperCheckOptions& opt, const std::vector<int>& ids, bool fail_fast,
                             const std::function<void(const CriterionResult&)>& progress) {
    PaperCheckResult out;
    std::vector<int> todo = ids;
    if (todo.empty())
        for (int i = 1; i <= kCriteria; ++i) todo.push_back(i);
    for (int id : todo) criterion_title(id);
    const auto t0 = std::chrono::steady_clock::now();
    out.passed = true;
    for (int id : todo) {
        out.criteria.push_back(run_criterion(id, opt));
        if (progress) progress(out.criteria.back());
        out.passed = out.passed && out.criteria.back().passed;
        if (fail_fast && !out.passed) break;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::vector<ResultantCheck> check_resultants(const std::string& data_dir) {
    const MultiPoly h1 = load_fixture("h1", data_dir);
    std::vector<ResultantCheck> out;
    for (const auto& [name, expected] :
         std::vector<std::pair<std::string, std::string>>{{"h2", "972*r2^12"}, {"h3", "5103*r2^12"}}) {
        const MultiPoly res = resultant_wrt(h1, load_fixture(name, data_dir), "r1");
        const MultiPoly e = MultiPoly::parse(expected);
        ResultantCheck c;
        c.name = "Res(h1," + name + ";r1)";
        c.computed = res.to_string();
        c.expected = e.to_string();
        c.exact = res == e;
        c.up_to_sign = c.exact || res == -e;
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<PolynomialWitness> polynomial_witness(const RationalFunction& f) {
    const FiniteField& F = f.field();
    const uint32_t inf = F.order();
    const MobiusTransform id = MobiusTransform::identity(F);
    for (uint32_t k = 0; k <= inf; ++k) {
        const uint32_t eta = k == 0 ? inf : k - 1;
        const uint32_t xi = f.eval_index(eta);
        const MobiusTransform inner = eta == inf ? id : MobiusTransform(F, eta, 1, 1, 0);
        const MobiusTransform outer = xi == inf ? id : MobiusTransform(F, 0, 1, 1, F.neg(xi));
        RationalFunction g = compose(outer, compose(f, inner));
        if (g.is_polynomial()) return PolynomialWitness{std::move(g), outer, inner};
    }
    return std::nullopt;
}

}  // namespace prfq
