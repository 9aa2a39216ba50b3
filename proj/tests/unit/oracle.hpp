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

#ifndef PRFQ_TESTS_ORACLE_HPP
#define PRFQ_TESTS_ORACLE_HPP

// Reference arithmetic written independently of the library: schoolbook
// polynomial products reduced by the field modulus, digit-wise addition,
// brute-force evaluation on P^1.

#include <cstdint>
#include <optional>
#include <vector>

#include "prfq/gf.hpp"
#include "prfq/ratfun.hpp"

namespace oracle {

struct NaiveField {
    uint32_t p, n, q;
    std::vector<uint32_t> modulus;  // monic, constant term first

    explicit NaiveField(const prfq::FiniteField& F)
        : p(F.characteristic()), n(F.degree()), q(F.order()), modulus(F.modulus()) {}

    std::vector<uint32_t> digits(uint32_t a) const {
        std::vector<uint32_t> d(n);
        for (uint32_t i = 0; i < n; ++i, a /= p) d[i] = a % p;
        return d;
    }
    uint32_t pack(const std::vector<uint32_t>& d) const {
        uint32_t a = 0;
        for (uint32_t i = n; i-- > 0;) a = a * p + d[i];
        return a;
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        auto x = digits(a), y = digits(b);
        for (uint32_t i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % p;
        return pack(x);
    }
    uint32_t neg(uint32_t a) const {
        auto x = digits(a);
        for (auto& c : x) c = (p - c) % p;
        return pack(x);
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        const auto x = digits(a), y = digits(b);
        std::vector<uint64_t> prod(2 * n, 0);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + uint64_t{x[i]} * y[j]) % p;
        for (uint32_t k = 2 * n - 1; k >= n; --k) {
            const uint64_t c = prod[k];
            if (!c) continue;
            prod[k] = 0;
            for (uint32_t i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - modulus[i]) * c) % p;
        }
        std::vector<uint32_t> out(n);
        for (uint32_t i = 0; i < n; ++i) out[i] = static_cast<uint32_t>(prod[i]);
        return pack(out);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    std::optional<uint32_t> inv(uint32_t a) const {
        for (uint32_t b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        return std::nullopt;
    }
};

// Values of f on P^1 by direct substitution; q stands for infinity.
inline std::vector<uint32_t> values(const prfq::RationalFunction& f) {
    const auto& F = f.field();
    const uint32_t q = F.order();
    std::vector<uint32_t> out(q + 1);
    auto horner = [&](const prfq::Polynomial& P, uint32_t x) {
        uint32_t acc = 0;
        for (size_t i = P.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), P.coeffs()[i]);
        return acc;
    };
    for (uint32_t x = 0; x < q; ++x) {
        const uint32_t num = horner(f.num(), x), den = horner(f.den(), x);
        out[x] = den == 0 ? q : F.div(num, den);
    }
    const int dn = f.num().degree(), dd = f.den().degree();
    out[q] = dn > dd ? q : dn < dd ? 0 : F.div(f.num().leading(), f.den().leading());
    return out;
}

inline bool bijective(const std::vector<uint32_t>& v) {
    std::vector<bool> seen(v.size(), false);
    for (uint32_t y : v) {
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

inline std::vector<uint32_t> prime_factors(uint64_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; uint64_t{d} * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(static_cast<uint32_t>(n));
    return out;
}

}  // namespace oracle

#endif
