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

#include <doctest.h>

#include "oracle.hpp"
#include "prfq/classify.hpp"
#include "prfq/errors.hpp"
#include "prfq/expr.hpp"
#include "prfq/perm.hpp"

using namespace prfq;

namespace {

std::vector<Polynomial> rootless_quadratics(const FiniteField& F) {
    std::vector<Polynomial> out;
    const uint32_t q = F.order();
    for (uint32_t c1 = 0; c1 < q; ++c1)
        for (uint32_t c0 = 0; c0 < q; ++c0) {
            const Polynomial N(F, {c0, c1, 1});
            bool root = false;
            for (uint32_t x = 0; x < q && !root; ++x) root = N.eval(x) == 0;
            if (!root) out.push_back(N);
        }
    return out;
}

struct Count {
    uint64_t space = 0, prs = 0;
    std::vector<RationalFunction> list;
};

// aX^2 + bX + (cX + d)/N with a != 0, or X + (cX + d)/N when quadratic is false.
Count enumerate_form(uint32_t q, bool quadratic) {
    const auto& F = FiniteField::of_order(q);
    Count out;
    const RationalFunction X = RationalFunction::x(F);
    for (const Polynomial& N : rootless_quadratics(F))
        for (uint32_t a = quadratic ? 1 : 0; a < (quadratic ? q : 1u); ++a)
            for (uint32_t b = 0; b < (quadratic ? q : 1u); ++b)
                for (uint32_t c = 0; c < q; ++c)
                    for (uint32_t d = 0; d < q; ++d) {
                        if (c == 0 && d == 0) continue;
                        ++out.space;
                        RationalFunction f = RationalFunction(Polynomial(F, {d, c}), N);
                        f = quadratic ? f + RationalFunction(Polynomial(F, {0, b, a})) : f + X;
                        if (oracle::bijective(oracle::values(f))) {
                            ++out.prs;
                            out.list.push_back(f);
                        }
                    }
    return out;
}

void check_classes(const ClassificationReport& rep) {
    const auto& F = FiniteField::of_order(rep.q);
    std::vector<RationalFunction> reps;
    uint64_t members = 0;
    for (const auto& c : rep.classes) {
        reps.push_back(parse_rational_function(c.representative, F));
        members += c.members;
        CHECK(oracle::bijective(oracle::values(reps.back())));
        CHECK(reps.back().degree() == rep.degree);
    }
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(are_equivalent(reps[i], reps[j]).has_value());
    CHECK(members + (rep.degree == 3 ? rep.polynomial_equivalent : 0) == rep.pr_count);
}

}  // namespace

TEST_CASE("form names") {
    CHECK(form_from_name("3.6") == Form::Form36);
    CHECK(form_from_name("form3.12") == Form::Form312);
    CHECK(form_from_name("deg3-nonpoly") == Form::Deg3NonPoly);
    CHECK_FALSE(form_from_name("3.7").has_value());
    CHECK(form_degree(Form::Form36) == 4);
    CHECK(form_degree(Form::Deg3NonPoly) == 3);
}

TEST_CASE("quartic sweep counts match independent enumeration") {
    for (uint32_t q : {2u, 3u, 4u, 5u}) {
        const Count want = enumerate_form(q, true);
        const auto rep = classify(q, 4, Form::Form36);
        CHECK(rep.search_space_size == want.space);
        CHECK(rep.pr_count == want.prs);
        check_classes(rep);
        for (const auto& f : want.list) {
            bool hit = false;
            for (const auto& c : rep.classes)
                hit = hit || are_equivalent(parse_rational_function(c.representative, f.field()), f).has_value();
            CHECK(hit);
        }
    }
}

TEST_CASE("cubic sweep counts match independent enumeration") {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        const Count want = enumerate_form(q, false);
        const auto rep = classify(q, 3, Form::Deg3NonPoly);
        CHECK(rep.search_space_size == want.space);
        CHECK(rep.pr_count == want.prs);
        uint64_t poly = 0;
        for (const auto& f : want.list) poly += is_polynomial_equivalent(f);
        CHECK(rep.polynomial_equivalent == poly);
        check_classes(rep);
    }
}

TEST_CASE("cubic-denominator sweep") {
    for (uint32_t q : {2u, 3u, 4u}) check_classes(classify(q, 4, Form::Form312));
}

TEST_CASE("all degree-3 functions over F_2 and F_3") {
    for (uint32_t q : {2u, 3u}) {
        const auto rep = classify_all(q, 3);
        check_classes(rep);
        const auto& F = FiniteField::of_order(q);
        uint64_t prs = 0, total = 1;
        for (int i = 0; i < 4; ++i) total *= q;
        for (uint64_t pi = 0; pi < total; ++pi)
            for (int dq = 1; dq <= 3; ++dq) {
                uint64_t qtotal = 1;
                for (int i = 0; i < dq; ++i) qtotal *= q;
                for (uint64_t qi = 0; qi < qtotal; ++qi) {
                    std::vector<uint32_t> pc(4), qc(dq + 1, 1);
                    uint64_t x = pi;
                    for (auto& c : pc) c = static_cast<uint32_t>(x % q), x /= q;
                    x = qi;
                    for (int i = 0; i < dq; ++i) qc[i] = static_cast<uint32_t>(x % q), x /= q;
                    const Polynomial P(F, pc), Q(F, qc);
                    if (!gcd(P, Q).is_one() || std::max(P.degree(), Q.degree()) != 3) continue;
                    prs += oracle::bijective(oracle::values(RationalFunction(P, Q)));
                }
            }
        CHECK(rep.pr_count == prs);
    }
}

TEST_CASE("budget") {
    ClassifyOptions o;
    o.budget = 1000;
    CHECK_THROWS_AS(classify(8, 4, Form::Form36, o), BudgetExceeded);
    CHECK_THROWS_AS(classify(8, 3, Form::Form36), DomainError);
}

TEST_CASE("stored lists") {
    const auto rep = classify(3, 4, Form::Form36);
    const auto cmp = compare_golden(rep, "");
    CHECK(cmp.passed());
    for (const auto& e : cmp.entries) {
        REQUIRE(e.class_index.has_value());
        CHECK(e.is_pr);
    }
    CHECK_THROWS_AS(load_golden(3, Form::Form36, "/nonexistent"), IoError);
}
