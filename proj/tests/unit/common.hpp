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

#ifndef PRFQ_TESTS_COMMON_HPP
#define PRFQ_TESTS_COMMON_HPP

#include <random>
#include <vector>

#include "prfq/poly.hpp"
#include "prfq/ratfun.hpp"

namespace testing_util {

inline prfq::Polynomial random_poly(const prfq::FiniteField& F, int deg, std::mt19937_64& rng, bool monic = false) {
    std::vector<uint32_t> c(deg + 1);
    for (auto& x : c) x = rng() % F.order();
    if (monic) c.back() = 1;
    else if (c.back() == 0) c.back() = 1 + rng() % (F.order() - 1);
    return prfq::Polynomial(F, c);
}

// Monic polynomial of the given degree without roots in F_q.
inline prfq::Polynomial rootless(const prfq::FiniteField& F, int deg, std::mt19937_64& rng) {
    for (;;) {
        const prfq::Polynomial Q = random_poly(F, deg, rng, true);
        bool root = false;
        for (uint32_t x = 0; x < F.order() && !root; ++x) root = Q.eval(x) == 0;
        if (!root) return Q;
    }
}

inline prfq::RationalFunction random_ratfun(const prfq::FiniteField& F, int maxdeg, std::mt19937_64& rng) {
    for (;;) {
        const prfq::Polynomial P = random_poly(F, rng() % (maxdeg + 1), rng);
        const prfq::Polynomial Q = random_poly(F, rng() % (maxdeg + 1), rng, true);
        const prfq::RationalFunction f(P, Q);
        if (f.degree() >= 1) return f;
    }
}

}  // namespace testing_util

#endif
