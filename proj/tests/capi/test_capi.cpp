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

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "prfq/prfq.h"

using json = nlohmann::json;

namespace {

struct Owned {
    char* p = nullptr;
    ~Owned() { prfq_string_free(p); }
    json parse() const { return json::parse(p); }
};

const prfq_field* field(uint64_t q) {
    const prfq_field* F = nullptr;
    REQUIRE(prfq_field_of_order(q, &F) == PRFQ_OK);
    return F;
}

prfq_ratfun* parse(const prfq_field* F, const char* text) {
    prfq_ratfun* f = nullptr;
    REQUIRE(prfq_ratfun_parse(F, text, &f) == PRFQ_OK);
    return f;
}

}  // namespace

TEST_CASE("fields and elements") {
    const prfq_field* F = field(9);
    CHECK(prfq_field_order(F) == 9);
    CHECK(prfq_field_characteristic(F) == 3);
    CHECK(prfq_field_degree(F) == 2);
    const prfq_field* G = nullptr;
    REQUIRE(prfq_field_get(3, 2, &G) == PRFQ_OK);
    CHECK(G == F);

    uint32_t u = 0, v = 0, w = 0;
    REQUIRE(prfq_elem_parse(F, "u", &u) == PRFQ_OK);
    REQUIRE(prfq_elem_mul(F, u, u, &v) == PRFQ_OK);
    REQUIRE(prfq_elem_add(F, v, 1, &w) == PRFQ_OK);
    CHECK(w == 0);  // u^2 + 1 = 0 for the modulus u^2 + 1
    REQUIRE(prfq_elem_inv(F, u, &v) == PRFQ_OK);
    REQUIRE(prfq_elem_mul(F, u, v, &w) == PRFQ_OK);
    CHECK(w == 1);
    REQUIRE(prfq_elem_pow(F, u, 8, &w) == PRFQ_OK);
    CHECK(w == 1);
    REQUIRE(prfq_elem_sub(F, u, u, &w) == PRFQ_OK);
    CHECK(w == 0);

    Owned text;
    REQUIRE(prfq_elem_format(F, 7, &text.p) == PRFQ_OK);
    CHECK(std::string(text.p) == "2u+1");

    Owned d;
    REQUIRE(prfq_field_describe(F, &d.p) == PRFQ_OK);
    const json j = d.parse();
    CHECK(j["schema"] == PRFQ_SCHEMA_VERSION);
    CHECK(j["modulus"] == json::array({1, 0, 1}));
}

TEST_CASE("explicit modulus") {
    const uint32_t m[] = {1, 0, 1, 1};
    const prfq_field* F = nullptr;
    REQUIRE(prfq_field_with_modulus(2, m, 4, &F) == PRFQ_OK);
    uint32_t x = 0;
    REQUIRE(prfq_elem_pow(F, 2, 3, &x) == PRFQ_OK);  // u^3 = u^2 + 1
    CHECK(x == 5);
    const uint32_t reducible[] = {1, 0, 1};
    CHECK(prfq_field_with_modulus(2, reducible, 3, &F) != PRFQ_OK);
}

TEST_CASE("error reporting") {
    const prfq_field* F = nullptr;
    CHECK(prfq_field_of_order(12, &F) != PRFQ_OK);
    CHECK(std::strlen(prfq_last_error()) > 0);

    F = field(7);
    uint32_t x = 0;
    CHECK(prfq_elem_inv(F, 0, &x) == PRFQ_ERR_DOMAIN);
    CHECK(prfq_elem_add(F, 7, 1, &x) == PRFQ_ERR_INVALID_ARGUMENT);
    CHECK(prfq_elem_add(F, 1, 1, nullptr) == PRFQ_ERR_INVALID_ARGUMENT);

    prfq_ratfun* f = nullptr;
    CHECK(prfq_ratfun_parse(F, "x+(", &f) == PRFQ_ERR_PARSE);
    CHECK(f == nullptr);
    CHECK(std::string(prfq_status_string(PRFQ_ERR_PARSE)) == "parse error");

    int holds = 0;
    CHECK(prfq_carlitz_check(F, 8, &holds) == PRFQ_ERR_DOMAIN);
    REQUIRE(prfq_carlitz_check(F, 7, &holds) == PRFQ_OK);
    CHECK(holds == 1);
    CHECK(std::strlen(prfq_last_error()) == 0);

    prfq_ratfun* pole = parse(F, "1/(x-2)");
    CHECK(prfq_power_sum(pole, 1, PRFQ_SUM_CLOSED, &x) == PRFQ_ERR_DOMAIN);
    prfq_ratfun_free(pole);

    const prfq_field* F2 = field(2);
    prfq_ratfun* g = parse(F2, "1/(x^2+x+1)");
    CHECK(prfq_power_sum(g, 3, PRFQ_SUM_CLOSED, &x) == PRFQ_ERR_OUT_OF_RANGE);
    CHECK(prfq_power_sum(g, 3, PRFQ_SUM_AUTO, &x) == PRFQ_OK);
    prfq_ratfun_free(g);
}

TEST_CASE("rational functions") {
    const prfq_field* F = field(8);
    prfq_ratfun* f = parse(F, "x+1/(x^2+x+1)");
    CHECK(prfq_ratfun_field(f) == F);
    CHECK(prfq_ratfun_degree(f) == 3);
    Owned s;
    REQUIRE(prfq_ratfun_to_string(f, &s.p) == PRFQ_OK);
    CHECK(std::string(s.p) == "x+1/(x^2+x+1)");

    std::vector<bool> seen(9, false);
    for (uint32_t pt = 0; pt <= 8; ++pt) {
        uint32_t y = 0;
        REQUIRE(prfq_ratfun_eval(f, pt, &y) == PRFQ_OK);
        REQUIRE(y <= 8);
        seen[y] = true;
    }
    int pr = 0;
    REQUIRE(prfq_is_pr(f, PRFQ_PR_BRUTE, &pr) == PRFQ_OK);
    CHECK(pr == (std::count(seen.begin(), seen.end(), true) == 9));
    int hermite = 0;
    REQUIRE(prfq_is_pr(f, PRFQ_PR_HERMITE, &hermite) == PRFQ_OK);
    CHECK(hermite == pr);

    prfq_ratfun* x3 = parse(F, "x^3");
    int eq = 0;
    Owned w;
    REQUIRE(prfq_equivalent(f, x3, &eq, &w.p) == PRFQ_OK);
    CHECK(eq == 1);
    const json wj = w.parse();
    CHECK(wj.contains("outer"));
    CHECK(wj.contains("inner"));

    prfq_ratfun* c = nullptr;
    REQUIRE(prfq_ratfun_compose(x3, f, &c) == PRFQ_OK);
    CHECK(prfq_ratfun_degree(c) == 9);
    prfq_ratfun_free(c);

    uint32_t closed = 0, brute = 0;
    for (unsigned s2 = 1; s2 < 8; ++s2) {
        REQUIRE(prfq_power_sum(f, s2, PRFQ_SUM_BRUTE, &brute) == PRFQ_OK);
        if (prfq_power_sum(f, s2, PRFQ_SUM_CLOSED, &closed) == PRFQ_OK) CHECK(closed == brute);
    }

    const prfq_field* G = field(4);
    prfq_ratfun* other = parse(G, "x");
    CHECK(prfq_equivalent(f, other, &eq, nullptr) == PRFQ_ERR_FIELD_MISMATCH);
    prfq_ratfun_free(other);
    prfq_ratfun_free(x3);
    prfq_ratfun_free(f);
}

TEST_CASE("family builder") {
    prfq_ratfun* f = nullptr;
    REQUIRE(prfq_family_build("YUAN", 8, R"({"delta":"1"})", &f) == PRFQ_OK);
    int pr = 0;
    REQUIRE(prfq_is_pr(f, PRFQ_PR_BRUTE, &pr) == PRFQ_OK);
    CHECK(pr == 1);
    prfq_ratfun_free(f);
    CHECK(prfq_family_build("NOPE", 8, nullptr, &f) == PRFQ_ERR_INVALID_ARGUMENT);
    CHECK(prfq_family_build("T3.3", 8, R"({"r":"1"})", &f) == PRFQ_ERR_DOMAIN);
    CHECK(prfq_family_build("T3.3", 8, R"({"zeta":"1"})", &f) == PRFQ_ERR_INVALID_ARGUMENT);
    CHECK(prfq_family_build("T3.3", 8, "{", &f) == PRFQ_ERR_PARSE);
}

TEST_CASE("reports") {
    prfq_options o;
    prfq_options_init(&o);
    Owned ids;
    REQUIRE(prfq_theorem_ids(&ids.p) == PRFQ_OK);
    CHECK(ids.parse()["theorems"].size() == 11);

    Owned rep;
    int passed = 0;
    REQUIRE(prfq_verify_theorem("T3.3", 16, &o, &rep.p, &passed) == PRFQ_OK);
    CHECK(passed == 1);
    const json r = rep.parse();
    CHECK(r["schema"] == 1);
    CHECK(r["passed"] == true);
    CHECK(r["exhaustive"] == true);
    CHECK(prfq_verify_theorem("T3.3", 9, &o, &rep.p, &passed) == PRFQ_ERR_DOMAIN);

    Owned cls;
    REQUIRE(prfq_classify(5, 4, "3.6", &o, 1, &cls.p) == PRFQ_OK);
    const json c = cls.parse();
    CHECK(c["classes"].size() == c["class_count"]);
    CHECK(c["golden"]["passed"] == true);
    CHECK(prfq_classify(5, 3, "3.6", &o, 0, &cls.p) == PRFQ_ERR_DOMAIN);
    CHECK(prfq_classify(5, 0, "3.7", &o, 0, &cls.p) == PRFQ_ERR_INVALID_ARGUMENT);
    o.budget = 10;
    CHECK(prfq_classify(5, 0, "3.6", &o, 0, &cls.p) == PRFQ_ERR_BUDGET);
}

TEST_CASE("acceptance batch subset with progress") {
    prfq_options o;
    prfq_options_init(&o);
    std::vector<int> seen;
    auto cb = [](const char* text, void* user) {
        static_cast<std::vector<int>*>(user)->push_back(json::parse(text)["id"].get<int>());
    };
    const int ids[] = {6, 4};
    Owned out;
    int passed = 0;
    REQUIRE(prfq_paper_check(&o, ids, 2, 0, cb, &seen, &out.p, &passed) == PRFQ_OK);
    CHECK(seen == std::vector<int>{6, 4});
    const json j = out.parse();
    CHECK(j["criteria"].size() == 2);
    CHECK(passed == (j["passed"] == true));
    const int bad[] = {11};
    CHECK(prfq_paper_check(&o, bad, 1, 0, nullptr, nullptr, &out.p, &passed) == PRFQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bad data directory") {
    Owned out;
    int passed = 0;
    CHECK(prfq_resultants("/nonexistent", &out.p, &passed) == PRFQ_ERR_IO);
}
