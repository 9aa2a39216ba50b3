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

#include "prfq/gf.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "prfq/errors.hpp"

namespace prfq {

bool is_prime(uint64_t n) noexcept {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<uint64_t>(r);
}

// Dense polynomials over the prime field F_p, constant term first. Only used
// to pick and validate moduli, before any FiniteField exists.
using PfPoly = std::vector<uint64_t>;

void pf_trim(PfPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PfPoly pf_mod(PfPoly a, const PfPoly& m, uint64_t p) {
    pf_trim(a);
    const size_t dm = m.size() - 1;
    const uint64_t lead_inv = powmod_u64(m.back(), p - 2, p);
    while (a.size() > dm) {
        const uint64_t c = a.back() * lead_inv % p;
        const size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        pf_trim(a);
    }
    return a;
}

PfPoly pf_mulmod(const PfPoly& a, const PfPoly& b, const PfPoly& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PfPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return pf_mod(std::move(r), m, p);
}

PfPoly pf_pow_mod(PfPoly base, uint64_t e, const PfPoly& m, uint64_t p) {
    PfPoly r{1};
    r = pf_mod(r, m, p);
    base = pf_mod(base, m, p);
    while (e) {
        if (e & 1) r = pf_mulmod(r, base, m, p);
        base = pf_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PfPoly pf_gcd(PfPoly a, PfPoly b, uint64_t p) {
    pf_trim(a);
    pf_trim(b);
    while (!b.empty()) {
        a = pf_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// X^(p^k) mod m.
PfPoly pf_frobenius_x(uint64_t k, const PfPoly& m, uint64_t p) {
    PfPoly h = pf_mod(PfPoly{0, 1}, m, p);
    for (uint64_t i = 0; i < k; ++i) h = pf_pow_mod(h, p, m, p);
    return h;
}

// Rabin's irreducibility test.
bool pf_is_irreducible(const PfPoly& m, uint64_t p) {
    const uint64_t n = m.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    PfPoly x = pf_mod(PfPoly{0, 1}, m, p);
    if (pf_frobenius_x(n, m, p) != x) return false;
    for (uint64_t l : prime_factors(n)) {
        PfPoly h = pf_frobenius_x(n / l, m, p);
        h.resize(std::max<size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        pf_trim(h);
        if (pf_gcd(h, m, p).size() != 1) return false;
    }
    return true;
}

std::vector<uint32_t> canonical_modulus(uint32_t p, uint32_t n) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < n; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        PfPoly m(n + 1, 0);
        uint64_t t = idx;
        for (uint32_t i = 0; i < n; ++i) {
            m[i] = t % p;
            t /= p;
        }
        m[n] = 1;
        if (pf_is_irreducible(m, p)) return {m.begin(), m.end()};
    }
    throw Error("no irreducible polynomial found");  // unreachable
}

uint64_t checked_order(uint32_t p, uint32_t n) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (n == 0) throw DomainError("extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > kFieldEnvelope)
            throw DomainError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                              " exceeds the supported envelope 2^24");
    }
    return q;
}

struct Registry {
    std::mutex mutex;
    std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::unique_ptr<FiniteField>> fields;
    std::map<std::pair<uint32_t, uint32_t>, const FiniteField*> canonical;
    std::map<std::pair<const FiniteField*, const FiniteField*>, std::unique_ptr<Embedding>> embeddings;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

FiniteField::FiniteField(uint32_t p, std::vector<uint32_t> modulus, bool canonical)
    : p_(p),
      n_(static_cast<uint32_t>(modulus.size() - 1)),
      q_(static_cast<uint32_t>(checked_order(p, static_cast<uint32_t>(modulus.size() - 1)))),
      canonical_(canonical),
      modulus_(std::move(modulus)) {
    pow_p_.resize(n_ + 1);
    pow_p_[0] = 1;
    for (uint32_t i = 1; i <= n_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
    if (p_ != 2 && n_ > 1 && q_ <= 256) {
        add_table_.resize(size_t{q_} * q_);
        neg_table_.resize(q_);
        for (uint32_t a = 0; a < q_; ++a) {
            uint32_t r = 0;
            for (uint32_t i = 0; i < n_; ++i) r += ((p_ - digit(a, i)) % p_) * static_cast<uint32_t>(pow_p_[i]);
            neg_table_[a] = r;
            for (uint32_t b = 0; b < q_; ++b) add_table_[size_t{a} * q_ + b] = digit_add(a, b);
        }
    }
    find_primitive();
    if (q_ <= kTableThreshold) build_tables();
}

FiniteField::~FiniteField() = default;

const FiniteField& FiniteField::get(uint32_t p, uint32_t n) {
    checked_order(p, n);
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mutex);
        if (auto it = reg.canonical.find({p, n}); it != reg.canonical.end()) return *it->second;
    }
    auto modulus = canonical_modulus(p, n);
    std::lock_guard lock(reg.mutex);
    if (auto it = reg.canonical.find({p, n}); it != reg.canonical.end()) return *it->second;
    auto key = std::make_pair(p, modulus);
    auto& slot = reg.fields[key];
    if (!slot) slot.reset(new FiniteField(p, std::move(modulus), true));
    reg.canonical[{p, n}] = slot.get();
    return *slot;
}

const FiniteField& FiniteField::of_order(uint64_t q) {
    if (q < 2) throw DomainError("field order must be at least 2");
    for (uint32_t p = 2; uint64_t{p} * p <= q; ++p) {
        if (q % p) continue;
        uint64_t t = q;
        uint32_t n = 0;
        while (t % p == 0) {
            t /= p;
            ++n;
        }
        if (t != 1) throw DomainError(std::to_string(q) + " is not a prime power");
        return get(p, n);
    }
    return get(static_cast<uint32_t>(q), 1);
}

const FiniteField& FiniteField::with_modulus(uint32_t p, std::vector<uint32_t> modulus) {
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2) throw DomainError("modulus must have degree at least 1");
    const auto n = static_cast<uint32_t>(modulus.size() - 1);
    checked_order(p, n);
    if (modulus.back() != 1) throw DomainError("modulus must be monic");
    for (auto c : modulus)
        if (c >= p) throw DomainError("modulus coefficient out of range");
    if (!pf_is_irreducible(PfPoly(modulus.begin(), modulus.end()), p))
        throw DomainError("modulus is not irreducible");
    const FiniteField& canon = get(p, n);
    if (canon.modulus() == modulus) return canon;
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.fields[{p, modulus}];
    if (!slot) slot.reset(new FiniteField(p, std::move(modulus), false));
    return *slot;
}

const FiniteField& FiniteField::from_descriptor(const std::string& text) {
    auto parse = [&](std::string_view s) {
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw ParseError("bad field descriptor '" + text + "'");
        return v;
    };
    if (auto caret = text.find('^'); caret != std::string::npos) {
        const uint64_t p = parse(std::string_view(text).substr(0, caret));
        const uint64_t n = parse(std::string_view(text).substr(caret + 1));
        if (p > UINT32_MAX || n > 64) throw DomainError("field descriptor out of range");
        return get(static_cast<uint32_t>(p), static_cast<uint32_t>(n));
    }
    return of_order(parse(text));
}

std::string FiniteField::descriptor() const { return std::to_string(p_) + "^" + std::to_string(n_); }

uint32_t FiniteField::digit(uint32_t a, unsigned i) const noexcept {
    return static_cast<uint32_t>((a / pow_p_[i]) % p_);
}

uint32_t FiniteField::digit_add(uint32_t a, uint32_t b) const noexcept {
    uint32_t r = 0;
    for (uint32_t i = 0; i < n_ && (a || b); ++i) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * static_cast<uint32_t>(pow_p_[i]);
        a /= p_;
        b /= p_;
    }
    return r;
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (n_ == 1) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[size_t{a} * q_ + b];
    return digit_add(a, b);
}

uint32_t FiniteField::neg(uint32_t a) const noexcept {
    if (p_ == 2 || a == 0) return a;
    if (n_ == 1) return p_ - a;
    if (!neg_table_.empty()) return neg_table_[a];
    uint32_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        const uint32_t d = a % p_;
        if (d) r += (p_ - d) * static_cast<uint32_t>(pow_p_[i]);
        a /= p_;
    }
    return r;
}

uint32_t FiniteField::slow_mul(uint32_t a, uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return static_cast<uint32_t>(uint64_t{a} * b % p_);
    if (p_ == 2) {
        uint64_t r = 0;
        for (uint32_t i = 0; i < n_; ++i)
            if ((b >> i) & 1) r ^= uint64_t{a} << i;
        uint64_t mask = 0;
        for (uint32_t i = 0; i <= n_; ++i)
            if (modulus_[i]) mask |= uint64_t{1} << i;
        for (int k = 2 * static_cast<int>(n_) - 2; k >= static_cast<int>(n_); --k)
            if ((r >> k) & 1) r ^= mask << (k - n_);
        return static_cast<uint32_t>(r);
    }
    std::array<uint64_t, 64> da{}, db{}, prod{};
    for (uint32_t i = 0; i < n_; ++i) {
        da[i] = a % p_;
        db[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < n_; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int k = 2 * static_cast<int>(n_) - 2; k >= static_cast<int>(n_); --k) {
        const uint64_t c = prod[k];
        if (!c) continue;
        for (uint32_t i = 0; i <= n_; ++i)
            prod[k - n_ + i] = (prod[k - n_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    uint32_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) r += static_cast<uint32_t>(prod[i] * pow_p_[i]);
    return r;
}

uint32_t FiniteField::slow_pow(uint32_t a, uint64_t e) const noexcept {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
    }
    return r;
}

void FiniteField::find_primitive() {
    const uint64_t order = q_ - 1;
    const auto primes = prime_factors(order);
    for (uint32_t g = 1; g < q_; ++g) {
        bool ok = true;
        for (uint64_t l : primes) {
            if (slow_pow(g, order / l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive_ = g;
            return;
        }
    }
}

void FiniteField::build_tables() {
    const uint32_t order = q_ - 1;
    exp_.assign(2 * size_t{order}, 0);
    log_.assign(q_, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < order; ++i) {
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = i;
        x = slow_mul(x, primitive_);
    }
    tables_ = true;
}

uint32_t FiniteField::mul(uint32_t a, uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return slow_mul(a, b);
}

uint32_t FiniteField::inv(uint32_t a) const {
    if (a == 0) throw DomainError("division by zero");
    if (tables_) return exp_[(q_ - 1) - log_[a]];
    return slow_pow(a, q_ - 2);
}

uint32_t FiniteField::pow(uint32_t a, uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const uint64_t order = q_ - 1;
    const uint64_t r = e % order;
    if (r == 0) return 1;
    if (tables_) return exp_[(uint64_t{log_[a]} * r) % order];
    return slow_pow(a, r);
}

uint32_t FiniteField::frobenius_power(uint32_t a, uint64_t k) const noexcept {
    if (a == 0) return 0;
    k %= n_;
    if (k == 0) return a;
    return pow(a, powmod_u64(p_, k, uint64_t{q_} - 1) + (uint64_t{q_} - 1));  // exponent kept positive
}

uint32_t FiniteField::from_int(int64_t v) const noexcept {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
}

FieldElement FiniteField::element(uint32_t rep) const {
    if (rep >= q_) throw DomainError("element representation out of range");
    return FieldElement(*this, rep);
}
FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }
FieldElement FiniteField::one() const { return FieldElement(*this, 1); }
FieldElement FiniteField::gen() const { return FieldElement(*this, generator()); }
FieldElement FiniteField::from_integer(int64_t v) const { return FieldElement(*this, from_int(v)); }

std::string FiniteField::format(uint32_t a) const {
    if (a == 0) return "0";
    if (n_ == 1) return std::to_string(a);
    std::string out;
    for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
        const uint32_t c = digit(a, static_cast<unsigned>(i));
        if (!c) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'u';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const FiniteField& field, uint32_t rep) : field_(&field), rep_(rep) {}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_ || field_ == nullptr) throw FieldMismatch();
}

std::vector<uint32_t> FieldElement::coefficients() const {
    std::vector<uint32_t> out(field_->degree());
    for (unsigned i = 0; i < out.size(); ++i) out[i] = field_->digit(rep_, i);
    return out;
}

FieldElement FieldElement::operator-() const { return FieldElement(*field_, field_->neg(rep_)); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same(o);
    rep_ = field_->add(rep_, o.rep_);
    return *this;
}
FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same(o);
    rep_ = field_->sub(rep_, o.rep_);
    return *this;
}
FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same(o);
    rep_ = field_->mul(rep_, o.rep_);
    return *this;
}
FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same(o);
    rep_ = field_->div(rep_, o.rep_);
    return *this;
}

FieldElement FieldElement::pow(uint64_t e) const { return FieldElement(*field_, field_->pow(rep_, e)); }
FieldElement FieldElement::inverse() const { return FieldElement(*field_, field_->inv(rep_)); }
std::string FieldElement::to_string() const { return field_ ? field_->format(rep_) : std::string("<null>"); }

FieldElement frobenius(const FieldElement& a, uint64_t e, unsigned subfield_degree) {
    const FiniteField& f = a.field();
    if (subfield_degree == 0 || f.degree() % subfield_degree != 0)
        throw DomainError("Frobenius subfield degree must divide the field degree");
    const uint64_t k = (e % f.degree()) * subfield_degree % f.degree();
    return FieldElement(f, f.frobenius_power(a.rep(), k));
}

FieldElement frobenius(const FieldElement& a, uint64_t e, const FiniteField& over) {
    if (over.characteristic() != a.field().characteristic()) throw FieldMismatch("characteristics differ");
    return frobenius(a, e, over.degree());
}

namespace {
unsigned subfield_degree_of(const FiniteField& f, uint64_t subfield_order) {
    uint64_t t = 1;
    for (unsigned d = 1; d <= f.degree(); ++d) {
        t *= f.characteristic();
        if (t == subfield_order) {
            if (f.degree() % d != 0) break;
            return d;
        }
        if (t > subfield_order) break;
    }
    throw DomainError("F_" + std::to_string(subfield_order) + " is not a subfield of F_" +
                      std::to_string(f.order()));
}
}  // namespace

FieldElement trace(const FieldElement& a, uint64_t subfield_order) {
    const FiniteField& f = a.field();
    const unsigned d = subfield_degree_of(f, subfield_order);
    uint32_t acc = 0;
    for (unsigned i = 0; i < f.degree() / d; ++i) acc = f.add(acc, f.frobenius_power(a.rep(), uint64_t{i} * d));
    return FieldElement(f, acc);
}

bool is_square(const FieldElement& a) {
    const FiniteField& f = a.field();
    if (a.is_zero() || f.characteristic() == 2) return true;
    return f.pow(a.rep(), (f.order() - 1) / 2) == 1;
}

bool in_subfield(const FieldElement& a, unsigned subfield_degree) {
    const FiniteField& f = a.field();
    if (subfield_degree == 0 || f.degree() % subfield_degree != 0)
        throw DomainError("subfield degree must divide the field degree");
    return f.frobenius_power(a.rep(), subfield_degree) == a.rep();
}

// ---------------------------------------------------------------------------

const Embedding& Embedding::between(const FiniteField& from, const FiniteField& to) {
    if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
        throw DomainError("F_" + std::to_string(from.order()) + " does not embed in F_" + std::to_string(to.order()));
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mutex);
        if (auto it = reg.embeddings.find({&from, &to}); it != reg.embeddings.end()) return *it->second;
    }
    std::unique_ptr<Embedding> e(new Embedding(from, to));
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.embeddings[{&from, &to}];
    if (!slot) slot = std::move(e);
    return *slot;
}

Embedding::Embedding(const FiniteField& from, const FiniteField& to) : from_(&from), to_(&to) {
    const uint32_t n0 = from.degree();
    const uint32_t p = from.characteristic();
    uint32_t root = 0;
    if (n0 > 1) {
        // Roots of the source modulus lie in the multiplicative group of the
        // copy of F_{q0} inside the target, generated by omega.
        const uint64_t q0 = from.order();
        const uint32_t omega = to.pow(to.primitive(), (uint64_t{to.order()} - 1) / (q0 - 1));
        const auto& m = from.modulus();
        bool found = false;
        uint32_t w = 1;
        for (uint64_t j = 0; j + 1 < q0; ++j, w = to.mul(w, omega)) {
            uint32_t acc = 0;
            for (int i = static_cast<int>(n0); i >= 0; --i) acc = to.add(to.mul(acc, w), to.from_int(m[i]));
            if (acc == 0 && (!found || w < root)) {
                root = w;
                found = true;
            }
        }
        if (!found) throw Error("embedding root not found");
    }
    images_.resize(n0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < n0; ++i) {
        images_[i] = x;
        x = to.mul(x, root);
    }

    // Pick n0 independent target coordinates and invert that square block.
    const uint32_t nt = to.degree();
    std::vector<std::vector<uint64_t>> rows(nt, std::vector<uint64_t>(n0));
    for (uint32_t r = 0; r < nt; ++r)
        for (uint32_t c = 0; c < n0; ++c) rows[r][c] = to.digit(images_[c], r);
    std::vector<std::vector<uint64_t>> basis;
    std::vector<std::vector<uint64_t>> reduced;
    std::vector<unsigned> lead;
    for (uint32_t r = 0; r < nt && pivot_rows_.size() < n0; ++r) {
        auto v = rows[r];
        for (size_t k = 0; k < reduced.size(); ++k) {
            const uint64_t c = v[lead[k]];
            if (!c) continue;
            for (uint32_t j = 0; j < n0; ++j) v[j] = (v[j] + (p - c) * reduced[k][j]) % p;
        }
        auto it = std::find_if(v.begin(), v.end(), [](uint64_t c) { return c != 0; });
        if (it == v.end()) continue;
        const unsigned col = static_cast<unsigned>(it - v.begin());
        const uint64_t inv = powmod_u64(v[col], p - 2, p);
        for (auto& c : v) c = c * inv % p;
        for (auto& other : reduced) {
            const uint64_t c = other[col];
            if (!c) continue;
            for (uint32_t j = 0; j < n0; ++j) other[j] = (other[j] + (p - c) * v[j]) % p;
        }
        reduced.push_back(v);
        lead.push_back(col);
        pivot_rows_.push_back(r);
    }
    // Invert the n0 x n0 block of pivot rows with Gauss-Jordan.
    std::vector<std::vector<uint64_t>> a(n0, std::vector<uint64_t>(2 * n0, 0));
    for (uint32_t i = 0; i < n0; ++i) {
        a[i] = rows[pivot_rows_[i]];
        a[i].resize(2 * n0, 0);
        a[i][n0 + i] = 1;
    }
    for (uint32_t c = 0; c < n0; ++c) {
        uint32_t piv = c;
        while (a[piv][c] == 0) ++piv;
        std::swap(a[piv], a[c]);
        const uint64_t inv = powmod_u64(a[c][c], p - 2, p);
        for (auto& v : a[c]) v = v * inv % p;
        for (uint32_t r = 0; r < n0; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const uint64_t f = a[r][c];
            for (uint32_t j = 0; j < 2 * n0; ++j) a[r][j] = (a[r][j] + (p - f) * a[c][j]) % p;
        }
    }
    solve_.assign(n0, std::vector<uint32_t>(n0));
    for (uint32_t i = 0; i < n0; ++i)
        for (uint32_t j = 0; j < n0; ++j) solve_[i][j] = static_cast<uint32_t>(a[i][n0 + j]);

    if (from.order() <= (1u << 16)) {
        table_.resize(from.order());
        for (uint32_t v = 0; v < from.order(); ++v) {
            uint32_t acc = 0;
            for (uint32_t i = 0; i < n0; ++i) {
                const uint32_t d = from.digit(v, i);
                if (d) acc = to.add(acc, to.mul(to.from_int(d), images_[i]));
            }
            table_[v] = acc;
        }
    }
}

uint32_t Embedding::apply(uint32_t a) const noexcept {
    if (!table_.empty()) return table_[a];
    uint32_t acc = 0;
    for (uint32_t i = 0; i < images_.size(); ++i) {
        const uint32_t d = from_->digit(a, i);
        if (d) acc = to_->add(acc, to_->mul(to_->from_int(d), images_[i]));
    }
    return acc;
}

uint32_t Embedding::project(uint32_t b) const {
    const uint32_t n0 = from_->degree();
    const uint64_t p = from_->characteristic();
    uint32_t a = 0;
    uint64_t place = 1;
    for (uint32_t i = 0; i < n0; ++i) {
        uint64_t s = 0;
        for (uint32_t j = 0; j < n0; ++j) s = (s + uint64_t{solve_[i][j]} * to_->digit(b, pivot_rows_[j])) % p;
        a += static_cast<uint32_t>(s * place);
        place *= p;
    }
    if (apply(a) != b)
        throw DomainError(to_->format(b) + " does not lie in the subfield F_" + std::to_string(from_->order()));
    return a;
}

bool Embedding::contains(uint32_t b) const noexcept {
    return to_->frobenius_power(b, from_->degree()) == b;
}

FieldElement embed(const FieldElement& a, const FiniteField& target) {
    if (a.field_ptr() == &target) return a;
    return FieldElement(target, Embedding::between(a.field(), target).apply(a.rep()));
}

FieldElement project(const FieldElement& a, const FiniteField& subfield) {
    if (a.field_ptr() == &subfield) return a;
    return FieldElement(subfield, Embedding::between(subfield, a.field()).project(a.rep()));
}

}  // namespace prfq
