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

#include "prfq/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "prfq/errors.hpp"

namespace prfq {

Polynomial::Polynomial(const FiniteField& field, std::vector<uint32_t> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= field.order()) throw DomainError("coefficient out of range");
    trim();
}

Polynomial Polynomial::from_ints(const FiniteField& field, std::initializer_list<int64_t> coeffs) {
    std::vector<uint32_t> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field.from_int(v));
    return Polynomial(field, std::move(c));
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c.rep()}); }

Polynomial Polynomial::monomial(const FiniteField& field, uint32_t c, unsigned k) {
    std::vector<uint32_t> v(k + 1, 0);
    v[k] = c;
    return Polynomial(field, std::move(v));
}

Polynomial Polynomial::linear(const FieldElement& r) {
    const FiniteField& f = r.field();
    return Polynomial(f, {f.neg(r.rep()), 1});
}

void Polynomial::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Polynomial::check_same(const Polynomial& o) const {
    if (field_ != o.field_) throw FieldMismatch();
}

uint32_t Polynomial::eval(uint32_t x) const noexcept {
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
    if (x.field_ptr() != field_) throw FieldMismatch();
    return FieldElement(*field_, eval(x.rep()));
}

Polynomial Polynomial::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(field_->inv(c_.back()));
}

Polynomial Polynomial::scaled(uint32_t c) const {
    Polynomial r(*field_);
    if (c == 0) return r;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(*field_, {1});
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::derivative() const {
    Polynomial r(*field_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<int64_t>(i)));
    r.trim();
    return r;
}

Polynomial Polynomial::embed(const FiniteField& ext) const {
    if (&ext == field_) return *this;
    const Embedding& e = Embedding::between(*field_, ext);
    Polynomial r(ext);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = e.apply(c_[i]);
    return r;
}

Polynomial Polynomial::restrict_to(const FiniteField& subfield) const {
    if (&subfield == field_) return *this;
    const Embedding& e = Embedding::between(subfield, *field_);
    Polynomial r(subfield);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = e.project(c_[i]);
    return r;
}

std::string Polynomial::to_string(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += '+';
        std::string coef = field_->format(c_[i]);
        const bool composite = coef.find('+') != std::string::npos;
        if (i == 0) {
            out += composite && c_.size() > 1 ? "(" + coef + ")" : coef;
            continue;
        }
        if (coef != "1") out += (composite ? "(" + coef + ")" : coef) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = field_->neg(c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(*a.field_);
    if (a.c_.empty() || b.c_.empty()) return r;
    const FiniteField& f = *a.field_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

DivRem divrem(const Polynomial& f, const Polynomial& g) {
    if (&f.field() != &g.field()) throw FieldMismatch();
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    const FiniteField& F = f.field();
    const int dg = g.degree();
    if (f.degree() < dg) return {Polynomial(F), f};
    std::vector<uint32_t> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<uint32_t> quo(static_cast<size_t>(f.degree() - dg + 1), 0);
    const uint32_t lead_inv = F.inv(g.leading());
    const auto gc = g.coeffs();
    for (int k = f.degree() - dg; k >= 0; --k) {
        const uint32_t c = F.mul(rem[static_cast<size_t>(k + dg)], lead_inv);
        quo[static_cast<size_t>(k)] = c;
        if (!c) continue;
        for (int i = 0; i <= dg; ++i) {
            auto& slot = rem[static_cast<size_t>(k + i)];
            slot = F.sub(slot, F.mul(c, gc[static_cast<size_t>(i)]));
        }
    }
    rem.resize(static_cast<size_t>(dg));
    return {Polynomial(F, std::move(quo)), Polynomial(F, std::move(rem))};
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = divrem(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial powmod(const Polynomial& base, uint64_t e, const Polynomial& m) {
    Polynomial r = divrem(Polynomial(m.field(), {1}), m).remainder;
    Polynomial b = divrem(base, m).remainder;
    while (e) {
        if (e & 1) r = divrem(r * b, m).remainder;
        e >>= 1;
        if (e) b = divrem(b * b, m).remainder;
    }
    return r;
}

namespace {

std::vector<unsigned> small_prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// X^(q^k) mod m, where q is the order of m's field.
Polynomial frobenius_x(unsigned k, const Polynomial& m) {
    const uint64_t q = m.field().order();
    Polynomial h = divrem(Polynomial::x(m.field()), m).remainder;
    for (unsigned i = 0; i < k; ++i) h = powmod(h, q, m);
    return h;
}

}  // namespace

bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) throw DomainError("irreducibility is undefined for constants");
    const auto n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    const Polynomial m = f.monic();
    const Polynomial x = Polynomial::x(f.field());
    if (frobenius_x(n, m) != divrem(x, m).remainder) return false;
    for (unsigned l : small_prime_factors(n)) {
        if (gcd(frobenius_x(n / l, m) - x, m).degree() != 0) return false;
    }
    return true;
}

std::vector<unsigned> factor_degrees(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("zero polynomial has no factorisation");
    std::vector<unsigned> out;
    Polynomial rem = f.monic();
    const Polynomial x = Polynomial::x(f.field());
    const uint64_t q = f.field().order();
    Polynomial h = rem.degree() > 0 ? divrem(x, rem).remainder : Polynomial(f.field());
    for (unsigned d = 1; rem.degree() > 0; ++d) {
        h = powmod(h, q, rem);
        Polynomial g = gcd(rem, h - x);
        if (g.degree() > 0) {
            out.push_back(d);
            for (Polynomial c = gcd(rem, g); c.degree() > 0; c = gcd(rem, g)) rem = exact_div(rem, c);
            if (rem.degree() > 0) h = divrem(h, rem).remainder;
        }
    }
    return out;
}

unsigned splitting_degree(const Polynomial& f) {
    unsigned m = 1;
    for (unsigned d : factor_degrees(f)) m = std::lcm(m, d);
    return m;
}

const FiniteField& splitting_field(const Polynomial& f) {
    const FiniteField& F = f.field();
    return FiniteField::get(F.characteristic(), F.degree() * splitting_degree(f));
}

namespace {

// Splits g, a product of distinct monic linear factors over its field, by
// random equal-degree splitting.
void split_linear(const Polynomial& g, std::mt19937_64& rng, std::vector<uint32_t>& out) {
    const FiniteField& F = g.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(F.neg(F.div(g[0], g[1])));
        return;
    }
    const uint64_t Q = F.order();
    for (;;) {
        const auto delta = static_cast<uint32_t>(rng() % Q);
        Polynomial h(F);
        if (F.characteristic() == 2) {
            // Absolute trace of delta*X modulo g.
            Polynomial t = divrem(Polynomial::monomial(F, delta == 0 ? 1 : delta, 1), g).remainder;
            h = t;
            const unsigned bits = F.degree();
            for (unsigned i = 1; i < bits; ++i) {
                t = divrem(t * t, g).remainder;
                h += t;
            }
        } else {
            h = powmod(Polynomial(F, {delta, 1}), (Q - 1) / 2, g) - Polynomial(F, {1});
        }
        Polynomial d = gcd(g, h);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, rng, out);
            split_linear(exact_div(g, d), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Root> roots_over(const Polynomial& f, const FiniteField& ext) {
    if (f.is_zero()) throw DomainError("the zero polynomial has every element as a root");
    const Polynomial F = f.embed(ext);
    std::vector<uint32_t> distinct;
    if (F.degree() >= 1) {
        if (ext.order() <= (1u << 16)) {
            for (uint32_t x = 0; x < ext.order(); ++x)
                if (F.eval(x) == 0) distinct.push_back(x);
        } else {
            const Polynomial m = F.monic();
            Polynomial xq = powmod(Polynomial::x(ext), ext.order(), m);
            Polynomial g = gcd(m, xq - Polynomial::x(ext));
            std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
            split_linear(g, rng, distinct);
            std::sort(distinct.begin(), distinct.end());
        }
    }
    std::vector<Root> out;
    for (uint32_t r : distinct) {
        const Polynomial lin = Polynomial::linear(FieldElement(ext, r));
        Polynomial cur = F;
        unsigned mult = 0;
        for (;;) {
            auto [q, rem] = divrem(cur, lin);
            if (!rem.is_zero()) break;
            ++mult;
            cur = std::move(q);
        }
        out.push_back({FieldElement(ext, r), mult});
    }
    return out;
}

std::vector<uint32_t> taylor_coefficients(const Polynomial& f, uint32_t r, size_t count) {
    const FiniteField& F = f.field();
    std::vector<uint32_t> cur(f.coeffs().begin(), f.coeffs().end());
    std::vector<uint32_t> out;
    out.reserve(count);
    while (out.size() < count) {
        if (cur.empty()) {
            out.push_back(0);
            continue;
        }
        // Synthetic division by (X - r) in place: cur becomes the quotient.
        uint32_t carry = 0;
        for (size_t i = cur.size(); i-- > 0;) {
            const uint32_t v = F.add(cur[i], F.mul(carry, r));
            cur[i] = carry;
            carry = v;
        }
        out.push_back(carry);
        cur.pop_back();
    }
    return out;
}

}  // namespace prfq
