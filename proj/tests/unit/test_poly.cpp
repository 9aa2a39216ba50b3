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

#include "prfq/errors.hpp"
#include "prfq/poly.hpp"

using namespace prfq;

namespace {

Polynomial random_poly(const FiniteField& F, int deg, std::mt19937_64& rng) {
    std::vector<uint32_t> c(deg + 1);
    for (auto& x : c) x = rng() % F.order();
    if (deg >= 0 && c.back() == 0) c.back() = 1;
    return Polynomial(F, c);
}

int mobius(unsigned n) {
    int m = 1;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
    return n > 1 ? -m : m;
}

// Number of monic irreducibles of degree d over F_q.
uint64_t gauss_count(uint64_t q, unsigned d) {
    int64_t sum = 0;
    for (unsigned e = 1; e <= d; ++e)
        if (d % e == 0) {
            int64_t qe = 1;
            for (unsigned i = 0; i < e; ++i) qe *= static_cast<int64_t>(q);
            sum += mobius(d / e) * qe;
        }
    return static_cast<uint64_t>(sum / d);
}

}  // namespace

TEST_CASE("division identity") {
    std::mt19937_64 rng(7);
    for (uint32_t q : {2u, 5u, 9u, 16u, 49u}) {
        const auto& F = FiniteField::of_order(q);
        for (int i = 0; i < 100; ++i) {
            const Polynomial f = random_poly(F, rng() % 9, rng), g = random_poly(F, rng() % 5, rng);
            const DivRem dr = divrem(f, g);
            CHECK(dr.quotient * g + dr.remainder == f);
            CHECK(dr.remainder.degree() < g.degree());
            CHECK(exact_div(f * g, g) == f);
        }
        CHECK_THROWS_AS(divrem(Polynomial::x(F), Polynomial(F)), DomainError);
    }
}

TEST_CASE("gcd divides both and absorbs common factors") {
    std::mt19937_64 rng(11);
    for (uint32_t q : {3u, 4u, 7u, 25u}) {
        const auto& F = FiniteField::of_order(q);
        for (int i = 0; i < 100; ++i) {
            const Polynomial c = random_poly(F, 1 + rng() % 3, rng);
            const Polynomial a = random_poly(F, rng() % 5, rng) * c, b = random_poly(F, rng() % 5, rng) * c;
            const Polynomial g = gcd(a, b);
            CHECK(g.is_monic());
            CHECK(divrem(a, g).remainder.is_zero());
            CHECK(divrem(b, g).remainder.is_zero());
            CHECK(divrem(g, c.monic()).remainder.is_zero());
        }
    }
}

TEST_CASE("irreducible counts follow Gauss's formula") {
    for (auto [q, dmax] : std::vector<std::pair<uint32_t, unsigned>>{{2, 8}, {3, 5}, {4, 4}, {5, 4}, {7, 3}, {9, 3}}) {
        const auto& F = FiniteField::of_order(q);
        for (unsigned d = 1; d <= dmax; ++d) {
            uint64_t count = 0, total = 1;
            for (unsigned i = 0; i < d; ++i) total *= q;
            for (uint64_t idx = 0; idx < total; ++idx) {
                std::vector<uint32_t> c(d + 1, 1);
                uint64_t x = idx;
                for (unsigned i = 0; i < d; ++i, x /= q) c[i] = static_cast<uint32_t>(x % q);
                count += is_irreducible(Polynomial(F, c));
            }
            CHECK_MESSAGE(count == gauss_count(q, d), "q=" << q << " d=" << d);
        }
    }
}

TEST_CASE("roots match enumeration") {
    std::mt19937_64 rng(3);
    for (uint32_t q : {5u, 8u, 9u, 27u}) {
        const auto& F = FiniteField::of_order(q);
        for (int i = 0; i < 50; ++i) {
            const Polynomial f = random_poly(F, 1 + rng() % 6, rng);
            const auto roots = roots_over(f, F);
            size_t k = 0;
            for (uint32_t x = 0; x < q; ++x) {
                if (f.eval(x) != 0) continue;
                REQUIRE(k < roots.size());
                CHECK(roots[k].value.rep() == x);
                Polynomial lin = Polynomial::linear(F.element(x));
                CHECK(divrem(f, lin.pow(roots[k].multiplicity)).remainder.is_zero());
                CHECK_FALSE(divrem(f, lin.pow(roots[k].multiplicity + 1)).remainder.is_zero());
                ++k;
            }
            CHECK(k == roots.size());
        }
    }
}

TEST_CASE("splitting degree of a product of irreducibles is the lcm") {
    const auto& F = FiniteField::of_order(2);
    const Polynomial quad = Polynomial::from_ints(F, {1, 1, 1});     // x^2+x+1
    const Polynomial cubic = Polynomial::from_ints(F, {1, 1, 0, 1}); // x^3+x+1
    CHECK(splitting_degree(quad) == 2);
    CHECK(splitting_degree(cubic) == 3);
    CHECK(splitting_degree(quad * cubic) == 6);
    CHECK(factor_degrees(quad * cubic * Polynomial::x(F)) == std::vector<unsigned>{1, 2, 3});
    CHECK(roots_over(quad * cubic, splitting_field(quad * cubic)).size() == 5);
}

TEST_CASE("powmod agrees with repeated multiplication") {
    const auto& F = FiniteField::of_order(7);
    const Polynomial m = Polynomial::from_ints(F, {3, 0, 1, 1});
    const Polynomial b = Polynomial::from_ints(F, {1, 2});
    Polynomial acc = Polynomial::from_ints(F, {1});
    for (unsigned e = 0; e < 40; ++e) {
        CHECK(powmod(b, e, m) == divrem(acc, m).remainder);
        acc = divrem(acc * b, m).remainder;
    }
}

TEST_CASE("taylor coefficients rebuild the polynomial") {
    std::mt19937_64 rng(5);
    const auto& F = FiniteField::of_order(25);
    for (int i = 0; i < 50; ++i) {
        const Polynomial f = random_poly(F, rng() % 7, rng);
        const uint32_t r = rng() % 25;
        const auto c = taylor_coefficients(f, r, f.degree() + 1);
        Polynomial g(F);
        const Polynomial lin = Polynomial::linear(F.element(r));
        for (size_t k = 0; k < c.size(); ++k) g += lin.pow(static_cast<unsigned>(k)).scaled(c[k]);
        CHECK(g == f);
    }
}

TEST_CASE("derivative and text") {
    const auto& F = FiniteField::of_order(3);
    const Polynomial f = Polynomial::from_ints(F, {1, 0, 2, 1});
    CHECK(f.to_string() == "x^3+2*x^2+1");
    CHECK(f.derivative() == Polynomial::from_ints(F, {0, 1}));
    CHECK(Polynomial(F).to_string() == "0");
}
