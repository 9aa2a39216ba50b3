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

#include "prfq/errors.hpp"
#include "prfq/expr.hpp"

using namespace prfq;

TEST_CASE("rational function grammar") {
    const auto& F = FiniteField::of_order(5);
    const RationalFunction x = RationalFunction::x(F);
    const RationalFunction one = RationalFunction::constant(F.one());
    CHECK(parse_rational_function("x^2+2*x/(x^2-2)", F) ==
          x * x + RationalFunction::constant(F.from_integer(2)) * x / (x * x - RationalFunction::constant(F.from_integer(2))));
    CHECK(parse_rational_function("2x", F) == RationalFunction::constant(F.from_integer(2)) * x);
    CHECK(parse_rational_function("-(X+1)^3", F) == -((x + one) * (x + one) * (x + one)));
    CHECK(parse_rational_function("1/(x-1)-1/(x+1)", F) == one / (x - one) - one / (x + one));
    CHECK(parse_rational_function("7", F) == RationalFunction::constant(F.from_integer(2)));
    CHECK(parse_rational_function("(x^2-1)/(x-1)", F) == x + one);
}

TEST_CASE("generator in extension fields") {
    const auto& F = FiniteField::of_order(4);
    const FieldElement u = F.gen();
    CHECK(parse_field_element("u", F) == u);
    CHECK(parse_field_element("u^2", F) == u + F.one());
    const RationalFunction f = parse_rational_function("x^2+x+(1+u)/(x^2+(1+u)*x+1)", F);
    CHECK(f.degree() == 4);
    CHECK(parse_rational_function(f.to_string(), F) == f);
}

TEST_CASE("text round trip") {
    const auto& F = FiniteField::of_order(9);
    for (const char* s : {"x", "x^3", "x+1/(x^2+1)", "u*x^2+(u+1)*x+x/(x^2-u)", "(x^3+u)/(x^2+x+u)"}) {
        const RationalFunction f = parse_rational_function(s, F);
        CHECK(parse_rational_function(f.to_string(), F) == f);
        CHECK(parse_rational_function(f.to_fraction_string(), F) == f);
    }
}

TEST_CASE("parse errors") {
    const auto& F = FiniteField::of_order(7);
    for (const char* s : {"", "x+", "(x", "x^", "x^-1", "x**2"}) CHECK_THROWS_AS(parse_rational_function(s, F), ParseError);
    CHECK_THROWS(parse_rational_function("y", F));
    CHECK_THROWS_AS(parse_rational_function("u*x", F), Error);
    CHECK_THROWS_AS(parse_rational_function("1/(x-x)", F), DomainError);
}
