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

#include <numeric>
#include <optional>
#include <random>

#include "common.hpp"
#include "oracle.hpp"
#include "prfq/errors.hpp"
#include "prfq/expr.hpp"
#include "prfq/perm.hpp"

using namespace prfq;
using testing_util::random_ratfun;

TEST_CASE("brute PR test is bijectivity on P^1") {
    std::mt19937_64 rng(21);
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto& F = FiniteField::of_order(q);
        for (int i = 0; i < 200; ++i) {
            const RationalFunction f = random_ratfun(F, 4, rng);
            CHECK(is_pr_brute(f) == oracle::bijective(oracle::values(f)));
        }
    }
}

TEST_CASE("Hermite criterion agrees with bijectivity") {
    std::mt19937_64 rng(22);
    for (uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
        const auto& F = FiniteField::of_order(q);
        int prs = 0;
        for (int i = 0; i < 300; ++i) {
            const RationalFunction f = random_ratfun(F, 3, rng);
            const bool pr = oracle::bijective(oracle::values(f));
            prs += pr;
            std::optional<bool> verdict;
            try {
                verdict = hermite_test(f);
            } catch (const DomainError&) {
            }
            CHECK(verdict.value_or(false) == pr);
        }
        CHECK(prs > 0);
    }
}

TEST_CASE("Hermite normal form") {
    std::mt19937_64 rng(23);
    const auto& F = FiniteField::of_order(7);
    for (int i = 0; i < 50; ++i) {
        const RationalFunction f = random_ratfun(F, 3, rng);
        std::optional<HermiteForm> h;
        try {
            h = hermite_form(f);
        } catch (const DomainError&) {
            CHECK_FALSE(oracle::bijective(oracle::values(f)));
            continue;
        }
        CHECK(compose(h->outer, compose(f, h->inner)) == h->g);
        const auto v = oracle::values(h->g);
        CHECK(v[7] == 7);
        for (uint32_t x = 0; x < 7; ++x) CHECK(v[x] != 7);
    }
}

TEST_CASE("X^3 permutes F_q exactly when gcd(3, q-1) = 1") {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        const auto& F = FiniteField::of_order(q);
        const RationalFunction f(Polynomial::monomial(F, 1, 3));
        CHECK(is_pr_brute(f) == (std::gcd(3u, q - 1) == 1));
        CHECK(hermite_test(f) == (std::gcd(3u, q - 1) == 1));
    }
}

TEST_CASE("family builder") {
    const auto& F = FiniteField::of_order(8);
    const auto& E = FiniteField::of_order(64);
    int prs = 0, roots = 0;
    for (uint32_t r = 0; r < 64; ++r) {
        if (Embedding::between(F, E).contains(r)) continue;
        PRFamilySpec s{Family::T33, 8, E.element(r), std::nullopt, std::nullopt, std::nullopt, std::nullopt, -1};
        const RationalFunction f = build_family(s);
        CHECK(f.degree() == 3);
        prs += oracle::bijective(oracle::values(f));
        roots += E.add(r, E.pow(r, 8)) == 1;
    }
    CHECK(prs > 0);
    CHECK(prs == roots);

    PRFamilySpec bad{Family::T33, 9, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, -1};
    CHECK_THROWS_AS(build_family(bad), DomainError);
    PRFamilySpec inside{Family::T33, 8, E.one(), std::nullopt, std::nullopt, std::nullopt, std::nullopt, -1};
    CHECK_THROWS_AS(build_family(inside), DomainError);
    CHECK(family_from_name("FORM3.6") == Family::Form36);
    CHECK_FALSE(family_from_name("nope").has_value());
}

TEST_CASE("x + 1/(x^p - x + delta) permutes when delta has nonzero trace") {
    for (uint32_t q : {4u, 8u, 9u, 16u, 27u}) {
        const auto& F = FiniteField::of_order(q);
        for (uint32_t d = 0; d < q; ++d) {
            PRFamilySpec s{Family::Yuan, q, std::nullopt, std::nullopt, std::nullopt, std::nullopt, F.element(d), -1};
            if (trace(F.element(d), F.characteristic()).is_zero()) {
                CHECK_THROWS_AS(build_family(s), DomainError);
                continue;
            }
            CHECK(oracle::bijective(oracle::values(build_family(s))));
        }
    }
}

TEST_CASE("theorem verifier counts match independent enumeration") {
    VerifyOptions o;
    const auto rep = verify_theorem("T3.3", 8, o);
    CHECK(rep.passed());
    CHECK(rep.exhaustive);
    const auto& F = FiniteField::of_order(8);
    const auto& E = FiniteField::of_order(64);
    uint64_t prs = 0;
    for (uint32_t r = 0; r < 64; ++r) {
        if (Embedding::between(F, E).contains(r)) continue;
        PRFamilySpec s{Family::T33, 8, E.element(r), std::nullopt, std::nullopt, std::nullopt, std::nullopt, -1};
        prs += oracle::bijective(oracle::values(build_family(s)));
    }
    CHECK(rep.prs == prs);
}

TEST_CASE("every verifier passes at a small admissible q") {
    const std::vector<std::pair<std::string, uint32_t>> runs = {
        {"L3.2", 5}, {"T3.3", 4}, {"T3.4", 7}, {"T3.5", 32}, {"T3.6", 11}, {"T3.7", 27},
        {"T3.8", 5}, {"T3.9", 27}, {"R3.3", 4}, {"R3.5", 9}, {"R4.6", 8}};
    for (const auto& [id, q] : runs) {
        const auto rep = verify_theorem(id, q);
        CHECK_MESSAGE(rep.passed(), id << " q=" << q);
        CHECK(rep.theorem == id);
        CHECK(rep.q == q);
    }
    CHECK(theorem_ids().size() == runs.size());
}

TEST_CASE("verifier hypotheses") {
    CHECK_THROWS_AS(verify_theorem("T3.3", 9), DomainError);
    CHECK_THROWS_AS(verify_theorem("T3.9", 25), DomainError);
    CHECK_THROWS_AS(verify_theorem("T9.9", 5), DomainError);
}
