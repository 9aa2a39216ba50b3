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

#include <filesystem>
#include <fstream>
#include <random>

#include "prfq/errors.hpp"
#include "prfq/symident.hpp"

using namespace prfq;

namespace {

MultiPoly random_mp(std::mt19937_64& rng, unsigned deg_x, unsigned deg_y) {
    MultiPoly out = MultiPoly::constant(0);
    const MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    for (unsigned i = 0; i <= deg_x; ++i)
        for (unsigned j = 0; j <= deg_y; ++j) {
            const int c = static_cast<int>(rng() % 11) - 5;
            if (c) out = out + MultiPoly::constant(c) * x.pow(i) * y.pow(j);
        }
    return out + MultiPoly::constant(100) * x.pow(deg_x);
}

// x + y w in Z[w], w^2 = -1 - w.
struct Eisenstein {
    BigInt x, y;
    Eisenstein operator+(const Eisenstein& o) const { return {x + o.x, y + o.y}; }
    Eisenstein operator*(const Eisenstein& o) const {
        return {x * o.x - y * o.y, x * o.y + y * o.x - y * o.y};
    }
    BigInt norm() const { return x * x - x * y + y * y; }
};

// Evaluates f at r1 = w, r2 = 1, a = a.
Eisenstein at_omega(const MultiPoly& f, const BigInt& a) {
    Eisenstein sum{0, 0};
    const auto& vars = f.vars();
    for (const auto& [mono, coeff] : f.terms()) {
        Eisenstein t{coeff, 0};
        for (size_t i = 0; i < vars.size(); ++i) {
            for (unsigned e = 0; e < mono[i]; ++e) {
                if (vars[i] == "r1") t = t * Eisenstein{0, 1};
                else if (vars[i] == "a") t = t * Eisenstein{a, 0};
                else REQUIRE(vars[i] == "r2");
            }
        }
        sum = sum + t;
    }
    return sum;
}

BigInt eval_int(const MultiPoly& f, const std::map<std::string, BigInt>& at) {
    BigInt sum = 0;
    for (const auto& [mono, coeff] : f.terms()) {
        BigInt t = coeff;
        for (size_t i = 0; i < f.vars().size(); ++i)
            for (unsigned e = 0; e < mono[i]; ++e) t *= at.at(f.vars()[i]);
        sum += t;
    }
    return sum;
}

}  // namespace

TEST_CASE("parse and print in graded-lex order") {
    const MultiPoly f = MultiPoly::parse("r2^2 + r1*r2 + r1^2", {"r1", "r2"});
    CHECK(f.to_string() == "r1^2+r1*r2+r2^2");
    CHECK(MultiPoly::parse("3*a*r1 - 2 + r1^3", {"a", "r1"}).to_string() == "r1^3+3*a*r1-2");
    CHECK(MultiPoly::parse(f.to_string(), f.vars()) == f);
    CHECK_THROWS_AS(MultiPoly::parse("r1 +", {}), ParseError);
}

TEST_CASE("ring identities") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        const MultiPoly a = random_mp(rng, 3, 2), b = random_mp(rng, 2, 2), c = random_mp(rng, 1, 3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) / b == a);
        CHECK(a - a == MultiPoly::constant(0));
        CHECK(a.pow(3) == a * a * a);
        CHECK(a.degree_in("x") == 3);
    }
    CHECK_THROWS_AS(MultiPoly::parse("x^2+1") / MultiPoly::parse("x+1"), DomainError);
}

TEST_CASE("Bareiss resultant agrees with cofactor expansion") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 25; ++i) {
        const MultiPoly f = random_mp(rng, 1 + rng() % 3, 2), g = random_mp(rng, 1 + rng() % 3, 2);
        CHECK(resultant_wrt(f, g, "x") == resultant_cofactor(f, g, "x"));
    }
}

TEST_CASE("resultant of linear factors is the product of differences") {
    const MultiPoly f = MultiPoly::parse("(x-a)*(x-b)", {"x", "a", "b", "c"});
    const MultiPoly g = MultiPoly::parse("x-c", {"x", "a", "b", "c"});
    const MultiPoly r = resultant_wrt(f, g, "x");
    std::mt19937_64 rng(33);
    for (int i = 0; i < 20; ++i) {
        const BigInt a = static_cast<int>(rng() % 21) - 10, b = static_cast<int>(rng() % 21) - 10,
                     c = static_cast<int>(rng() % 21) - 10;
        CHECK(eval_int(r, {{"x", 0}, {"a", a}, {"b", b}, {"c", c}}) == (a - c) * (b - c));
    }
}

TEST_CASE("fixtures load and verify their checksums") {
    const std::string dir = default_data_dir();
    for (const char* name : {"h1", "h2", "h3", "h"}) {
        const MultiPoly f = load_fixture(name, dir);
        CHECK_FALSE(f.is_zero());
        CHECK(fixture_checksum(f).size() == 8);
    }
    CHECK(load_fixture("h1", dir).to_string() == "r1^2+r1*r2+r2^2");

    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "prfq_fixture_test";
    fs::create_directories(tmp / "fixtures" / "v1");
    fs::copy_file(fs::path(dir) / "fixtures" / "v1" / "CHECKSUMS", tmp / "fixtures" / "v1" / "CHECKSUMS",
                  fs::copy_options::overwrite_existing);
    std::ofstream(tmp / "fixtures" / "v1" / "h1.txt") << "# vars: a r1 r2\nr1^2+r1*r2+2*r2^2\n";
    CHECK_THROWS_AS(load_fixture("h1", tmp.string()), IoError);
    CHECK_THROWS_AS(load_fixture("h9", tmp.string()), IoError);
    fs::remove_all(tmp);
}

TEST_CASE("resultants against norms from the Eisenstein integers") {
    // h1 = (r1 - w r2)(r1 - w^2 r2), so Res(h1, g; r1) = N(g(w r2)).
    const std::string dir = default_data_dir();
    const MultiPoly h1 = load_fixture("h1", dir);
    for (const char* name : {"h2", "h3"}) {
        const MultiPoly g = load_fixture(name, dir);
        const MultiPoly res = resultant_wrt(h1, g, "r1");
        CHECK(res.degree_in("r1") == 0);
        for (int a = -4; a <= 4; ++a) {
            std::map<std::string, BigInt> at = {{"a", a}, {"r1", 0}, {"r2", 1}};
            CHECK(eval_int(res, at) == at_omega(g, a).norm());
        }
    }
}

TEST_CASE("instantiation reduces coefficients") {
    const auto& F = FiniteField::of_order(7);
    const MultiPoly f = MultiPoly::parse("10*a^2 - 3*b", {"a", "b"});
    CHECK(f.instantiate({{"a", F.from_integer(2)}, {"b", F.from_integer(1)}}, F) == F.from_integer(37));
}
