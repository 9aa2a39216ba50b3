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
#include "prfq/expr.hpp"
#include "prfq/reproduce.hpp"

using namespace prfq;

TEST_CASE("polynomial witnesses compose to polynomials") {
    const std::vector<std::pair<uint32_t, const char*>> cases = {
        {8, "x+1/(x^2+x+1)"}, {5, "3*x+2*x/(x^2+3)"}, {7, "x^3"}};
    for (const auto& [q, text] : cases) {
        const auto& F = FiniteField::of_order(q);
        const RationalFunction f = parse_rational_function(text, F);
        const auto w = polynomial_witness(f);
        REQUIRE(w.has_value());
        CHECK(w->g.is_polynomial());
        CHECK(w->g.degree() == f.degree());
        const auto vf = oracle::values(f), vg = oracle::values(w->g);
        const auto mo = oracle::values(w->outer.as_rational_function());
        const auto mi = oracle::values(w->inner.as_rational_function());
        for (uint32_t x = 0; x <= q; ++x) CHECK(vg[x] == mo[vf[mi[x]]]);
    }
}

TEST_CASE("polynomial witnesses exist exactly for polynomial-equivalent functions") {
    const auto& F = FiniteField::of_order(3);
    for (const char* text : {"x+1/(x^2+1)", "x^2+x/(x^2+1)", "x^3+x", "(x^3+1)/(x^2+1)", "x+(x+1)/(x^2+x+2)"}) {
        const RationalFunction f = parse_rational_function(text, F);
        CHECK(polynomial_witness(f).has_value() == is_polynomial_equivalent(f));
    }
}

TEST_CASE("criterion titles") {
    for (int id = 1; id <= kCriteria; ++id) CHECK_FALSE(criterion_title(id).empty());
}

TEST_CASE("single criteria run and report items") {
    const auto c = run_criterion(6);
    CHECK(c.id == 6);
    CHECK_FALSE(c.items.empty());
    CHECK(c.passed);
}
