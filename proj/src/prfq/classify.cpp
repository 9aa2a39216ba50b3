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

#include "prfq/classify.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "prfq/errors.hpp"
#include "prfq/expr.hpp"
#include "prfq/perm.hpp"
#include "prfq/sweep.hpp"
#include "prfq/symident.hpp"

namespace prfq {

using detail::TableField;

std::optional<Form> form_from_name(const std::string& name) {
    if (name == "deg3-nonpoly" || name == "deg3" || name == "3.3") return Form::Deg3NonPoly;
    if (name == "form3.6" || name == "3.6") return Form::Form36;
    if (name == "form3.12" || name == "3.12") return Form::Form312;
    return std::nullopt;
}

std::string form_name(Form form) {
    switch (form) {
        case Form::Deg3NonPoly: return "deg3-nonpoly";
        case Form::Form36: return "form3.6";
        case Form::Form312: return "form3.12";
    }
    return "?";
}

int form_degree(Form form) { return form == Form::Deg3NonPoly ? 3 : 4; }

namespace {

bool shortlex_less(const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

// Indices k < space with test(k) true, ascending.
template <class Make>
std::vector<uint64_t> sweep_hits(uint64_t space, unsigned jobs, Make&& make) {
    jobs = std::max(1u, jobs);
    std::vector<std::vector<uint64_t>> hits(jobs);
    detail::parallel_chunks(space, jobs, [&](uint64_t begin, uint64_t end, unsigned w) {
        auto test = make();
        for (uint64_t k = begin; k < end; ++k)
            if (test(k)) hits[w].push_back(k);
    });
    std::vector<uint64_t> all;
    for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
    return all;
}

template <class Eval>
bool injective(detail::SeenSet& seen, uint32_t q, Eval&& eval) {
    seen.clear();
    for (uint32_t x = 0; x < q; ++x)
        if (!seen.insert(eval(x))) return false;
    return true;
}

void check_budget(uint64_t space, const ClassifyOptions& opt) {
    if (space > opt.budget)
        throw BudgetExceeded("search space of " + std::to_string(space) + " exceeds the budget of " +
                             std::to_string(opt.budget));
}

void reduce(ClassificationReport& rep, std::vector<RationalFunction> prs, bool drop_polynomial) {
    rep.pr_count = prs.size();
    std::vector<RationalFunction> kept;
    for (auto& f : prs) {
        const bool pe = is_polynomial_equivalent(f);
        rep.polynomial_equivalent += pe;
        if (!pe || !drop_polynomial) kept.push_back(std::move(f));
    }
    for (const auto& members : equivalence_classes(kept)) {
        ClassInfo info;
        info.members = members.size();
        for (size_t i : members) {
            std::string text = kept[i].to_string();
            if (info.representative.empty() || shortlex_less(text, info.representative))
                info.representative = std::move(text);
        }
        rep.classes.push_back(std::move(info));
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const ClassInfo& a, const ClassInfo& b) { return shortlex_less(a.representative, b.representative); });
}

// (c, d) != (0, 0) indexed 0 .. q^2 - 2.
std::pair<uint32_t, uint32_t> linear_pair(uint64_t i, uint32_t q) {
    return {static_cast<uint32_t>((i + 1) / q), static_cast<uint32_t>((i + 1) % q)};
}

// (cX + d)/N(X) over F_q.
std::vector<uint32_t> fraction_values(const TableField& T, const detail::Quadratic& n, uint32_t c, uint32_t d) {
    std::vector<uint32_t> v(T.q());
    for (uint32_t x = 0; x < T.q(); ++x)
        v[x] = T.div(T.add(T.mul(c, x), d), T.add(T.mul(T.add(x, n.c1), x), n.c0));
    return v;
}

ClassificationReport sweep_quadratic(const FiniteField& F, Form form, const ClassifyOptions& opt) {
    const TableField T(F);
    const uint32_t q = F.order();
    const auto ns = detail::irreducible_quadratics(T);
    const uint64_t pairs = uint64_t{q} * q - 1;
    const uint64_t inner = form == Form::Form36 ? uint64_t{q - 1} * q : 1;  // (a, b)
    ClassificationReport rep;
    rep.search_space_size = ns.size() * pairs * inner;
    check_budget(rep.search_space_size, opt);
    auto make = [&] {
        return [&, seen = detail::SeenSet(q), last = uint64_t(-1), frac = std::vector<uint32_t>()](uint64_t k) mutable {
            const uint64_t outer = k / inner;
            if (outer != last) {
                const auto [c, d] = linear_pair(outer % pairs, q);
                frac = fraction_values(T, ns[outer / pairs], c, d);
                last = outer;
            }
            if (form == Form::Deg3NonPoly) return injective(seen, q, [&](uint32_t x) { return T.add(x, frac[x]); });
            const uint32_t a = static_cast<uint32_t>(1 + k % inner / q), b = static_cast<uint32_t>(k % q);
            return injective(seen, q, [&](uint32_t x) { return T.add(T.mul(T.add(T.mul(a, x), b), x), frac[x]); });
        };
    };
    std::vector<RationalFunction> prs;
    for (uint64_t k : sweep_hits(rep.search_space_size, opt.jobs, make)) {
        const uint64_t outer = k / inner;
        const auto& n = ns[outer / pairs];
        const auto [c, d] = linear_pair(outer % pairs, q);
        Polynomial poly = Polynomial::x(F);
        if (form == Form::Form36)
            poly = Polynomial(F, {0, static_cast<uint32_t>(k % q), static_cast<uint32_t>(1 + k % inner / q)});
        prs.push_back(RationalFunction(poly) + RationalFunction(Polynomial(F, {d, c}), Polynomial(F, {n.c0, n.c1, 1})));
    }
    reduce(rep, std::move(prs), form == Form::Deg3NonPoly);
    return rep;
}

ClassificationReport sweep_cubic(const FiniteField& F, const ClassifyOptions& opt) {
    const TableField T(F);
    const uint32_t q = F.order();
    const auto ns = detail::irreducible_cubics(T);
    const uint64_t na = q - 1;
    ClassificationReport rep;
    rep.search_space_size = ns.size() * na;
    check_budget(rep.search_space_size, opt);
    const uint32_t two = F.from_int(2), three = F.from_int(3);
    auto make = [&] {
        return [&, seen = detail::SeenSet(q), last = uint64_t(-1), ld = std::vector<uint32_t>(q)](uint64_t k) mutable {
            const uint64_t i = k / na;
            if (i != last) {
                const auto& n = ns[i];
                for (uint32_t x = 0; x < q; ++x) {
                    const uint32_t N = T.add(T.mul(T.add(T.mul(T.add(x, n.c2), x), n.c1), x), n.c0);
                    const uint32_t D = T.add(T.mul(T.add(T.mul(three, x), T.mul(two, n.c2)), x), n.c1);
                    ld[x] = T.div(D, N);
                }
                last = i;
            }
            const uint32_t a = static_cast<uint32_t>(1 + k % na);
            return injective(seen, q, [&](uint32_t x) { return T.add(T.mul(a, x), ld[x]); });
        };
    };
    std::vector<RationalFunction> prs;
    for (uint64_t k : sweep_hits(rep.search_space_size, opt.jobs, make)) {
        const auto& n = ns[k / na];
        const Polynomial N(F, {n.c0, n.c1, n.c2, 1});
        prs.push_back(RationalFunction(Polynomial(F, {0, static_cast<uint32_t>(1 + k % na)})) +
                      RationalFunction(N.derivative(), N));
    }
    reduce(rep, std::move(prs), false);
    return rep;
}

}  // namespace

ClassificationReport classify(uint32_t q, int degree, Form form, const ClassifyOptions& opt) {
    if (degree != form_degree(form))
        throw DomainError(form_name(form) + " has degree " + std::to_string(form_degree(form)));
    const FiniteField& F = FiniteField::of_order(q);
    if (q > 1024) throw BudgetExceeded("classification supports q <= 1024");
    ClassificationReport rep = form == Form::Form312 ? sweep_cubic(F, opt) : sweep_quadratic(F, form, opt);
    rep.q = q;
    rep.degree = degree;
    rep.form = form;
    return rep;
}

ClassificationReport classify_all(uint32_t q, int degree, const ClassifyOptions& opt) {
    if (q > 4) throw BudgetExceeded("the unrestricted sweep supports q <= 4");
    if (degree < 1 || degree > 4) throw DomainError("degree must be 1..4");
    const FiniteField& F = FiniteField::of_order(q);
    const unsigned d = static_cast<unsigned>(degree);
    uint64_t nums = 1;
    for (unsigned i = 0; i <= d; ++i) nums *= q;
    ClassificationReport rep;
    rep.q = q;
    rep.degree = degree;
    rep.form = Form::Deg3NonPoly;
    std::vector<RationalFunction> prs;
    auto digits = [&](uint64_t v, unsigned n) {
        std::vector<uint32_t> c(n);
        for (auto& x : c) {
            x = static_cast<uint32_t>(v % q);
            v /= q;
        }
        return c;
    };
    // Q monic of degree 1..d, P of degree <= d.
    for (unsigned e = 1; e <= d; ++e) {
        uint64_t dens = 1;
        for (unsigned i = 0; i < e; ++i) dens *= q;
        for (uint64_t j = 0; j < dens; ++j) {
            auto qc = digits(j, e);
            qc.push_back(1);
            const Polynomial Q(F, qc);
            for (uint64_t i = 0; i < nums; ++i) {
                const Polynomial P(F, digits(i, d + 1));
                if (std::max(P.degree(), Q.degree()) != degree) continue;
                ++rep.search_space_size;
                check_budget(rep.search_space_size, opt);
                const RationalFunction f(P, Q);
                if (f.degree() == degree && f.den() == Q && is_pr_brute(f)) prs.push_back(f);
            }
        }
    }
    reduce(rep, std::move(prs), degree == 3);
    return rep;
}

// ---------------------------------------------------------------------------

std::string golden_path(uint32_t q, Form form, const std::string& data_dir) {
    return (data_dir.empty() ? default_data_dir() : data_dir) + "/golden/v1/" + form_name(form) + "_q" + std::to_string(q) + ".txt";
}

std::vector<std::string> load_golden(uint32_t q, Form form, const std::string& data_dir) {
    const std::string path = golden_path(q, form, data_dir);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open golden list " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        out.push_back(line.substr(b, line.find_last_not_of(" \t\r") + 1 - b));
    }
    return out;
}

bool GoldenComparison::passed() const {
    if (entries.size() != class_hits.size()) return false;
    for (const auto& e : entries)
        if (!e.is_pr || !e.class_index) return false;
    for (int h : class_hits)
        if (h != 1) return false;
    return true;
}

GoldenComparison compare_golden(const ClassificationReport& rep, const std::string& data_dir) {
    GoldenComparison cmp;
    cmp.path = golden_path(rep.q, rep.form, data_dir);
    const FiniteField& F = FiniteField::of_order(rep.q);
    std::vector<RationalFunction> reps;
    for (const auto& c : rep.classes) reps.push_back(parse_rational_function(c.representative, F));
    cmp.class_hits.assign(reps.size(), 0);
    for (const std::string& text : load_golden(rep.q, rep.form, data_dir)) {
        GoldenEntry e;
        e.text = text;
        const RationalFunction g = parse_rational_function(text, F);
        e.canonical = g.to_string();
        e.is_pr = is_pr_brute(g);
        for (size_t i = 0; i < reps.size(); ++i) {
            if (auto w = are_equivalent(reps[i], g)) {
                e.class_index = i;
                e.outer = w->outer.to_string();
                e.inner = w->inner.to_string();
                ++cmp.class_hits[i];
                break;
            }
        }
        cmp.entries.push_back(std::move(e));
    }
    return cmp;
}

}  // namespace prfq
