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
#include <set>

#include "oracle.hpp"
#include "prfq/errors.hpp"
#include "prfq/gf.hpp"

using namespace prfq;

namespace {

const std::vector<uint32_t> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 243, 256, 1024, 2187, 4096};

std::vector<std::pair<uint32_t, uint32_t>> pairs(uint32_t q, size_t cap, uint64_t seed) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    if (uint64_t{q} * q <= cap) {
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) out.emplace_back(a, b);
        return out;
    }
    std::mt19937_64 rng(seed);
    for (size_t i = 0; i < cap; ++i) out.emplace_back(rng() % q, rng() % q);
    return out;
}

}  // namespace

TEST_CASE("canonical fields are fields") {
    for (uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        const auto& F = FiniteField::of_order(q);
        oracle::NaiveField N(F);
        CHECK(F.is_canonical());
        CHECK(F.modulus().size() == F.degree() + 1);
        CHECK(F.modulus().back() == 1);
        for (uint32_t a = 1; a < q; ++a) CHECK_MESSAGE(N.inv(a).has_value(), "zero divisor in F_" << q);
    }
}

TEST_CASE("arithmetic agrees with schoolbook reduction") {
    for (uint32_t q : kOrders) {
        const auto& F = FiniteField::of_order(q);
        oracle::NaiveField N(F);
        for (auto [a, b] : pairs(q, 4096, q)) {
            REQUIRE(F.add(a, b) == N.add(a, b));
            REQUIRE(F.mul(a, b) == N.mul(a, b));
            REQUIRE(F.sub(a, b) == N.add(a, N.neg(b)));
        }
    }
}

TEST_CASE("inverse, powers and Frobenius") {
    for (uint32_t q : kOrders) {
        const auto& F = FiniteField::of_order(q);
        oracle::NaiveField N(F);
        std::mt19937_64 rng(q);
        for (int i = 0; i < 200; ++i) {
            const uint32_t a = 1 + rng() % (q - 1);
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, q) == a);
            CHECK(F.pow(a, q - 1) == 1);
            const uint64_t e = rng() % 100000;
            CHECK(F.pow(a, e) == N.pow(a, e));
            CHECK(F.frobenius_power(a, 1) == N.pow(a, F.characteristic()));
        }
        CHECK_THROWS_AS(F.inv(0), DomainError);
    }
}

TEST_CASE("primitive element generates the multiplicative group") {
    for (uint32_t q : kOrders) {
        const auto& F = FiniteField::of_order(q);
        oracle::NaiveField N(F);
        const uint32_t g = F.primitive();
        for (uint32_t l : oracle::prime_factors(q - 1)) CHECK(N.pow(g, (q - 1) / l) != 1);
        for (uint32_t a = 1; a < g; ++a) {
            bool full = true;
            for (uint32_t l : oracle::prime_factors(q - 1)) full = full && N.pow(a, (q - 1) / l) != 1;
            CHECK_FALSE(full);
        }
    }
}

TEST_CASE("explicit modulus and descriptors") {
    const auto& F = FiniteField::with_modulus(2, {1, 0, 1, 1});  // u^3 + u^2 + 1
    oracle::NaiveField N(F);
    CHECK(F.order() == 8);
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b) CHECK(F.mul(a, b) == N.mul(a, b));
    CHECK(&FiniteField::from_descriptor("3^4") == &FiniteField::of_order(81));
    CHECK(&FiniteField::from_descriptor("49") == &FiniteField::get(7, 2));
    CHECK_THROWS(FiniteField::with_modulus(2, {1, 0, 1}));  // u^2 + 1 = (u + 1)^2
    CHECK_THROWS(FiniteField::of_order(12));
    CHECK_THROWS(FiniteField::get(4, 1));
}

TEST_CASE("element text") {
    const auto& F = FiniteField::of_order(9);
    CHECK(F.format(0) == "0");
    CHECK(F.format(1) == "1");
    CHECK(F.format(3) == "u");
    CHECK(F.format(3 * 2 + 1) == "2u+1");
}

TEST_CASE("trace lies in the subfield and is additive") {
    for (uint32_t q : {4u, 8u, 9u, 16u, 27u, 64u, 81u}) {
        const auto& F = FiniteField::of_order(q);
        const uint32_t p = F.characteristic();
        for (uint32_t a = 0; a < q; ++a) {
            const FieldElement t = trace(F.element(a), p);
            CHECK(t.pow(p) == t);
            uint32_t sum = 0, x = a;
            for (uint32_t i = 0; i < F.degree(); ++i, x = F.pow(x, p)) sum = F.add(sum, x);
            CHECK(embed(t, F).rep() == sum);
        }
    }
}

TEST_CASE("X^2 + X + c is irreducible over F_2^n exactly when Tr(c) = 1") {
    for (uint32_t n = 1; n <= 8; ++n) {
        const auto& F = FiniteField::get(2, n);
        for (uint32_t c = 0; c < F.order(); ++c) {
            bool root = false;
            for (uint32_t x = 0; x < F.order() && !root; ++x) root = F.add(F.add(F.mul(x, x), x), c) == 0;
            CHECK(root == trace(F.element(c), 2).is_zero());
        }
    }
}

TEST_CASE("y^3 - a^2 y + b has no root when Tr(b/a^3) != 0 in characteristic 3") {
    for (uint32_t q : {27u, 81u}) {
        const auto& F = FiniteField::of_order(q);
        std::vector<uint32_t> cube(q);
        for (uint32_t y = 0; y < q; ++y) cube[y] = F.mul(F.mul(y, y), y);
        uint64_t checked = 0;
        for (uint32_t a = 1; a < q; ++a) {
            const uint32_t a2 = F.mul(a, a), a3 = F.mul(a2, a);
            for (uint32_t b = 1; b < q; ++b) {
                if (trace(F.element(F.div(b, a3)), 3).is_zero()) continue;
                ++checked;
                for (uint32_t y = 0; y < q; ++y) REQUIRE(F.add(F.sub(cube[y], F.mul(a2, y)), b) != 0);
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("squares") {
    for (uint32_t q : {5u, 7u, 9u, 13u, 25u, 27u, 8u}) {
        const auto& F = FiniteField::of_order(q);
        std::set<uint32_t> sq;
        for (uint32_t y = 0; y < q; ++y) sq.insert(F.mul(y, y));
        for (uint32_t a = 0; a < q; ++a) CHECK(is_square(F.element(a)) == (sq.count(a) == 1));
    }
}

TEST_CASE("embeddings are ring homomorphisms") {
    const std::vector<std::pair<uint32_t, uint32_t>> towers = {{4, 16}, {8, 64}, {9, 729}, {5, 125}, {4, 64}, {3, 27}, {16, 256}};
    for (auto [qs, qt] : towers) {
        const auto& S = FiniteField::of_order(qs);
        const auto& T = FiniteField::of_order(qt);
        const auto& e = Embedding::between(S, T);
        std::set<uint32_t> image;
        for (uint32_t a = 0; a < qs; ++a) {
            image.insert(e.apply(a));
            CHECK(e.project(e.apply(a)) == a);
            for (uint32_t b = 0; b < qs; ++b) {
                CHECK(e.apply(S.add(a, b)) == T.add(e.apply(a), e.apply(b)));
                CHECK(e.apply(S.mul(a, b)) == T.mul(e.apply(a), e.apply(b)));
            }
        }
        CHECK(image.size() == qs);
        for (uint32_t b : image) CHECK(T.pow(b, qs) == b);
        uint32_t outside = 0;
        while (image.count(outside)) ++outside;
        CHECK_FALSE(e.contains(outside));
        CHECK_THROWS_AS(e.project(outside), DomainError);
    }
}

TEST_CASE("elements of different fields do not mix") {
    const auto& A = FiniteField::of_order(4);
    const auto& B = FiniteField::of_order(8);
    CHECK_THROWS_AS(A.one() + B.one(), FieldMismatch);
}
