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

#include "prfq/carlitz.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "prfq/errors.hpp"

namespace prfq {

bool carlitz_identity_check(const FiniteField& F, unsigned k) {
    if (k < 1 || k > F.order()) throw DomainError("k must satisfy 1 <= k <= q");
    const Polynomial x = Polynomial::x(F);
    RationalFunction lhs = RationalFunction::constant(F.zero());
    for (uint32_t a = 0; a < F.order(); ++a) {
        const Polynomial term = (Polynomial(F, {a}) - x).pow(k);
        lhs = lhs + RationalFunction(Polynomial(F, {1}), term);
    }
    const Polynomial xq = Polynomial::monomial(F, 1, F.order()) - x;
    return lhs == RationalFunction(Polynomial(F, {1}), xq.pow(k));
}

namespace {

struct PoleData {
    const FiniteField* ext;
    const Embedding* emb;
    struct Pole {
        uint32_t root;
        unsigned multiplicity;
        Polynomial cofactor;  // den / (X - root)^multiplicity over ext
    };
    std::vector<Pole> poles;
};

std::shared_ptr<const PoleData> pole_data(const Polynomial& den) {
    static std::mutex mu;
    static std::map<std::pair<const FiniteField*, std::vector<uint32_t>>, std::shared_ptr<const PoleData>> cache;
    const FiniteField& F = den.field();
    auto key = std::make_pair(&F, std::vector<uint32_t>(den.coeffs().begin(), den.coeffs().end()));
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto data = std::make_shared<PoleData>();
    const FiniteField& E = den.degree() >= 1 ? splitting_field(den) : F;
    data->ext = &E;
    data->emb = &Embedding::between(F, E);
    if (den.degree() >= 1) {
        const Polynomial D = den.embed(E);
        for (const Root& r : roots_over(den, E)) {
            if (data->emb->contains(r.value.rep())) throw DomainError("denominator has a root in F_" + F.descriptor());
            Polynomial cof = exact_div(D, Polynomial::linear(r.value).pow(r.multiplicity));
            data->poles.push_back({r.value.rep(), r.multiplicity, std::move(cof)});
        }
    }
    std::lock_guard lock(mu);
    if (cache.size() > 8192) cache.clear();
    cache.emplace(std::move(key), data);
    return data;
}

using Series = std::vector<uint32_t>;

Series series_mul(const FiniteField& E, const Series& a, const Series& b, size_t n) {
    Series r(n, 0);
    for (size_t i = 0; i < n && i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] = E.add(r[i + j], E.mul(a[i], b[j]));
    }
    return r;
}

Series series_pow(const FiniteField& E, Series base, unsigned e, size_t n) {
    Series r(n, 0);
    if (n) r[0] = 1;
    while (e) {
        if (e & 1) r = series_mul(E, r, base, n);
        e >>= 1;
        if (e) base = series_mul(E, base, base, n);
    }
    return r;
}

}  // namespace

PartialFractionDecomposition partial_fractions(const RationalFunction& f, unsigned s) {
    if (s == 0) throw DomainError("power must be positive");
    const FiniteField& F = f.field();
    const auto data = pole_data(f.den());
    const FiniteField& E = *data->ext;

    PartialFractionDecomposition out{&F, &E, s, divrem(f.num().pow(s), f.den().pow(s)).quotient, {}};
    const Polynomial P = f.num().embed(E);
    for (const auto& pole : data->poles) {
        const size_t n = size_t{s} * pole.multiplicity;
        // f^s (X - r)^n = (P / cofactor)^s as a series in X - r.
        const Series p = taylor_coefficients(P, pole.root, n);
        const Series c = taylor_coefficients(pole.cofactor, pole.root, n);
        const uint32_t c0inv = E.inv(c[0]);
        Series g(n, 0);
        for (size_t j = 0; j < n; ++j) {
            uint32_t acc = p[j];
            for (size_t i = 1; i <= j; ++i) acc = E.sub(acc, E.mul(c[i], g[j - i]));
            g[j] = E.mul(acc, c0inv);
        }
        const Series h = series_pow(E, g, s, n);
        for (size_t j = n; j-- > 0;) {
            if (h[j] == 0) continue;
            out.poles.push_back({FieldElement(E, pole.root), static_cast<unsigned>(n - j), FieldElement(E, h[j])});
        }
    }
    return out;
}

RationalFunction PartialFractionDecomposition::recombine() const {
    RationalFunction sum(poly_part.embed(*ext));
    for (const auto& t : poles)
        sum = sum + RationalFunction(Polynomial::constant(t.coefficient), Polynomial::linear(t.root).pow(t.order));
    return sum;
}

FieldElement power_sum_closed(const RationalFunction& f, unsigned s) {
    const FiniteField& F = f.field();
    const uint32_t q = F.order();
    const auto pfd = partial_fractions(f, s);
    const FiniteField& E = *pfd.ext;
    const Embedding& emb = Embedding::between(F, E);
    uint32_t total = 0;
    for (int i = q - 1; i <= pfd.poly_part.degree(); i += static_cast<int>(q - 1))
        total = E.sub(total, emb.apply(pfd.poly_part[static_cast<size_t>(i)]));
    for (const auto& t : pfd.poles) {
        if (t.order > q) throw FormulaOutOfRange("pole order exceeds q");
        const uint32_t r = t.root.rep();
        const uint32_t d = E.pow(E.sub(E.pow(r, q), r), t.order);
        total = E.add(total, E.div(t.coefficient.rep(), d));
    }
    if (!emb.contains(total)) throw Error("power sum is not fixed by Frobenius");
    return FieldElement(F, emb.project(total));
}

FieldElement power_sum_brute(const RationalFunction& f, unsigned s) {
    const FiniteField& F = f.field();
    uint32_t total = 0;
    for (uint32_t x = 0; x < F.order(); ++x) {
        const uint32_t d = f.den().eval(x);
        if (d == 0) throw DomainError("pole at " + F.format(x));
        total = F.add(total, F.pow(F.div(f.num().eval(x), d), s));
    }
    return FieldElement(F, total);
}

FieldElement power_sum(const RationalFunction& f, unsigned s) {
    try {
        return power_sum_closed(f, s);
    } catch (const FormulaOutOfRange&) {
        return power_sum_brute(f, s);
    }
}

}  // namespace prfq
