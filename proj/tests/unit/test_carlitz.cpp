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

#include <random>

#include "common.hpp"
#include "oracle.hpp"
#include "prfq/carlitz.hpp"
#include "prfq/errors.hpp"

using namespace prfq;
using testing_util::random_poly;
using testing_util::rootless;

namespace {

uint32_t direct_sum(const RationalFunction& f, unsigned s) {
    const auto& F = f.field();
    const auto v = oracle::values(f);
    uint32_t acc = 0;
    for (uint32_t x = 0; x < F.order(); ++x) acc = F.add(acc, F.pow(v[x], s));
    return acc;
}

}  // namespace

TEST_CASE("sum of 1/(x-X)^k equals 1/(X^q-X)^k by term-wise addition") {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
        const auto& F = FiniteField::of_order(q);
        const RationalFunction X = RationalFunction::x(F);
        const RationalFunction one = RationalFunction::constant(F.one());
        const RationalFunction rhs_base = one / (RationalFunction(Polynomial::monomial(F, 1, q)) - X);
        for (unsigned k = 1; k <= q; ++k) {
            RationalFunction lhs = RationalFunction::constant(F.zero());
            for (uint32_t x = 0; x < q; ++x)
                lhs = lhs + (one / (RationalFunction::constant(F.element(x)) - X)).pow(k);
            CHECK(lhs == rhs_base.pow(k));
            CHECK(carlitz_identity_check(F, k));
        }
        CHECK_THROWS_AS(carlitz_identity_check(F, q + 1), DomainError);
        CHECK_THROWS_AS(carlitz_identity_check(F, 0), DomainError);
    }
}

TEST_CASE("closed-form power sums equal direct sums") {
    std::mt19937_64 rng(12);
    for (uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u}) {
        const auto& F = FiniteField::of_order(q);
        int compared = 0;
        for (int i = 0; i < 30; ++i) {
            const Polynomial P = random_poly(F, rng() % 5, rng);
            const Polynomial Q = rootless(F, 2 + rng() % 2, rng);
            const RationalFunction f(P, Q);
            for (unsigned s = 1; s < q; ++s) {
                const uint32_t want = direct_sum(f, s);
                CHECK(power_sum_brute(f, s).rep() == want);
                try {
                    CHECK(power_sum_closed(f, s).rep() == want);
                    ++compared;
                } catch (const FormulaOutOfRange&) {
                }
                CHECK(power_sum(f, s).rep() == want);
            }
        }
        CHECK(compared > 0);
    }
}

TEST_CASE("partial fractions recombine to f^s") {
    std::mt19937_64 rng(13);
    for (uint32_t q : {5u, 8u, 9u}) {
        const auto& F = FiniteField::of_order(q);
        for (int i = 0; i < 10; ++i) {
            const RationalFunction f(random_poly(F, rng() % 4, rng), rootless(F, 2 + rng() % 2, rng));
            for (unsigned s : {1u, 2u, 3u}) {
                const auto pfd = partial_fractions(f, s);
                CHECK(pfd.recombine() == f.pow(s).embed(*pfd.ext));
                for (const auto& t : pfd.poles) CHECK(f.den().embed(*pfd.ext)(t.root).is_zero());
            }
        }
    }
}

TEST_CASE("poles in F_q are rejected") {
    const auto& F = FiniteField::of_order(5);
    const RationalFunction f(Polynomial::from_ints(F, {1}), Polynomial::from_ints(F, {-2, 1}));
    CHECK_THROWS_AS(power_sum_closed(f, 1), DomainError);
    CHECK_THROWS_AS(power_sum_brute(f, 1), DomainError);
    CHECK_THROWS_AS(partial_fractions(f, 1), DomainError);
}

TEST_CASE("pole order above q is out of range") {
    const auto& F = FiniteField::of_order(2);
    const RationalFunction f(Polynomial::from_ints(F, {1}), Polynomial::from_ints(F, {1, 1, 1}));
    CHECK(power_sum_closed(f, 1).rep() == direct_sum(f, 1));
    CHECK_THROWS_AS(power_sum_closed(f, 3), FormulaOutOfRange);
    CHECK(power_sum(f, 3).rep() == direct_sum(f, 3));
}
