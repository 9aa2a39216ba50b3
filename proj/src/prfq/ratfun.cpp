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

#include "prfq/ratfun.hpp"

#include <map>
#include <utility>

#include "prfq/errors.hpp"

namespace prfq {

ProjectivePoint ProjectivePoint::from_index(const FiniteField& field, uint32_t index) {
    if (index > field.order()) throw DomainError("projective point index out of range");
    return ProjectivePoint(&field, index);
}

FieldElement ProjectivePoint::value() const {
    if (is_infinity()) throw DomainError("the point at infinity has no affine value");
    return FieldElement(*field_, index_);
}

std::string ProjectivePoint::to_string() const { return is_infinity() ? "inf" : field_->format(index_); }

// ---------------------------------------------------------------------------

RationalFunction normalize(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    if (&num.field() != &den.field()) throw FieldMismatch();
    if (den.is_zero()) throw DomainError("denominator is zero");
    if (num.is_zero()) {
        den_ = Polynomial(den.field(), {1});
        return;
    }
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num_ = exact_div(num, g);
        den_ = exact_div(den, g);
    }
    const uint32_t lead = den_.leading();
    if (lead != 1) {
        const uint32_t inv = den_.field().inv(lead);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction::RationalFunction(const Polynomial& poly) : num_(poly), den_(poly.field(), {1}) {}

RationalFunction RationalFunction::x(const FiniteField& field) { return RationalFunction(Polynomial::x(field)); }

RationalFunction RationalFunction::constant(const FieldElement& c) {
    return RationalFunction(Polynomial::constant(c));
}

uint32_t RationalFunction::eval_index(uint32_t index) const noexcept {
    const FiniteField& F = field();
    const uint32_t inf = F.order();
    if (index == inf) {
        const int dn = num_.degree(), dd = den_.degree();
        if (dn > dd) return inf;
        if (dn < dd) return 0;
        return F.div(num_.leading(), den_.leading());
    }
    const uint32_t d = den_.eval(index);
    if (d == 0) return inf;
    return F.div(num_.eval(index), d);
}

ProjectivePoint RationalFunction::operator()(const ProjectivePoint& pt) const {
    if (&pt.field() != &field()) throw FieldMismatch();
    return ProjectivePoint::from_index(field(), eval_index(pt.index()));
}

RationalFunction RationalFunction::embed(const FiniteField& ext) const {
    return RationalFunction(num_.embed(ext), den_.embed(ext), Reduced{});
}

RationalFunction RationalFunction::restrict_to(const FiniteField& subfield) const {
    return RationalFunction(num_.restrict_to(subfield), den_.restrict_to(subfield), Reduced{});
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto [quo, rem] = divrem(num_, den_);
    std::string numtext = rem.to_string();
    std::string dentext = den_.to_string();
    if (numtext.find('+') != std::string::npos) numtext = "(" + numtext + ")";
    if (dentext.find('+') != std::string::npos) dentext = "(" + dentext + ")";
    std::string frac = rem.is_zero() ? std::string() : numtext + "/" + dentext;
    if (quo.is_zero()) return frac.empty() ? "0" : frac;
    return frac.empty() ? quo.to_string() : quo.to_string() + "+" + frac;
}

std::string RationalFunction::to_fraction_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
    return RationalFunction(num_.pow(e), den_.pow(e), Reduced{});
}

// ---------------------------------------------------------------------------
// Homogeneous pairs (N, D) of degree d; index i holds the X^i Y^(d-i)
// coefficient.

namespace {

struct Hom {
    unsigned deg = 0;
    std::vector<uint32_t> n, d;
};

Hom homogeneous(const RationalFunction& f) {
    Hom h;
    h.deg = static_cast<unsigned>(std::max(f.degree(), 0));
    h.n.assign(h.deg + 1, 0);
    h.d.assign(h.deg + 1, 0);
    for (size_t i = 0; i < f.num().coeffs().size(); ++i) h.n[i] = f.num().coeffs()[i];
    for (size_t i = 0; i < f.den().coeffs().size(); ++i) h.d[i] = f.den().coeffs()[i];
    return h;
}

std::vector<uint32_t> conv(const FiniteField& F, const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

// (N, D)(aX + bY, cX + dY).
Hom substitute(const FiniteField& F, const Hom& h, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    const unsigned deg = h.deg;
    std::vector<std::vector<uint32_t>> apow(deg + 1), cpow(deg + 1);
    apow[0] = cpow[0] = {1};
    const std::vector<uint32_t> A{b, a}, C{d, c};
    for (unsigned i = 1; i <= deg; ++i) {
        apow[i] = conv(F, apow[i - 1], A);
        cpow[i] = conv(F, cpow[i - 1], C);
    }
    Hom out;
    out.deg = deg;
    out.n.assign(deg + 1, 0);
    out.d.assign(deg + 1, 0);
    for (unsigned i = 0; i <= deg; ++i) {
        if (!h.n[i] && !h.d[i]) continue;
        const auto t = conv(F, apow[i], cpow[deg - i]);
        for (unsigned k = 0; k <= deg; ++k) {
            if (!t[k]) continue;
            out.n[k] = F.add(out.n[k], F.mul(h.n[i], t[k]));
            out.d[k] = F.add(out.d[k], F.mul(h.d[i], t[k]));
        }
    }
    return out;
}

// (aN + bD, cN + dD).
Hom apply_outer(const FiniteField& F, const Hom& h, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    Hom out;
    out.deg = h.deg;
    out.n.resize(h.deg + 1);
    out.d.resize(h.deg + 1);
    for (unsigned i = 0; i <= h.deg; ++i) {
        out.n[i] = F.add(F.mul(a, h.n[i]), F.mul(b, h.d[i]));
        out.d[i] = F.add(F.mul(c, h.n[i]), F.mul(d, h.d[i]));
    }
    return out;
}

// Scales so that the denominator is monic in X and flattens.
OrbitKey reduced_key(const FiniteField& F, const Hom& h) {
    uint32_t lead = 0;
    for (unsigned i = h.deg + 1; i-- > 0;)
        if (h.d[i]) {
            lead = h.d[i];
            break;
        }
    const uint32_t inv = F.inv(lead);
    OrbitKey key;
    key.reserve(2 * h.deg + 3);
    key.push_back(h.deg);
    for (auto v : h.n) key.push_back(F.mul(v, inv));
    for (auto v : h.d) key.push_back(F.mul(v, inv));
    return key;
}

struct PointValue {
    uint32_t x, y;  // homogeneous [x : y]
};

uint32_t cross(const FiniteField& F, PointValue u, PointValue v) {
    return F.sub(F.mul(u.x, v.y), F.mul(v.x, u.y));
}

std::optional<OuterNormal> normal_of(const FiniteField& F, const Hom& h) {
    const unsigned deg = h.deg;
    PointValue v0{h.n[0], h.d[0]}, v1{0, 0}, v2{h.n[deg], h.d[deg]};
    for (unsigned i = 0; i <= deg; ++i) {
        v1.x = F.add(v1.x, h.n[i]);
        v1.y = F.add(v1.y, h.d[i]);
    }
    if (cross(F, v0, v1) == 0 || cross(F, v0, v2) == 0 || cross(F, v1, v2) == 0) return std::nullopt;
    // phi sends v0 -> 0, v1 -> 1, v2 -> inf.
    const uint32_t lambda = F.div(cross(F, v1, v2), cross(F, v1, v0));
    const uint32_t a = F.mul(lambda, v0.y), b = F.neg(F.mul(lambda, v0.x));
    const uint32_t c = v2.y, d = F.neg(v2.x);
    return OuterNormal{reduced_key(F, apply_outer(F, h, a, b, c, d)), MobiusTransform(F, a, b, c, d)};
}

RationalFunction from_hom(const FiniteField& F, const Hom& h) {
    return RationalFunction(Polynomial(F, h.n), Polynomial(F, h.d));
}

}  // namespace

// ---------------------------------------------------------------------------

MobiusTransform::MobiusTransform(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                 const FieldElement& d)
    : field_(a.field_ptr()), m_{a.rep(), b.rep(), c.rep(), d.rep()} {
    if (b.field_ptr() != field_ || c.field_ptr() != field_ || d.field_ptr() != field_) throw FieldMismatch();
    canonicalize();
}

MobiusTransform::MobiusTransform(const FiniteField& field, uint32_t a, uint32_t b, uint32_t c, uint32_t d)
    : field_(&field), m_{a, b, c, d} {
    canonicalize();
}

void MobiusTransform::canonicalize() {
    const FiniteField& F = *field_;
    if (F.sub(F.mul(m_[0], m_[3]), F.mul(m_[1], m_[2])) == 0) throw DomainError("singular Mobius transformation");
    for (auto v : m_) {
        if (v == 0) continue;
        const uint32_t inv = F.inv(v);
        for (auto& w : m_) w = F.mul(w, inv);
        break;
    }
}

uint32_t MobiusTransform::apply_index(uint32_t index) const noexcept {
    const FiniteField& F = *field_;
    const uint32_t inf = F.order();
    if (index == inf) return m_[2] == 0 ? inf : F.div(m_[0], m_[2]);
    const uint32_t den = F.add(F.mul(m_[2], index), m_[3]);
    if (den == 0) return inf;
    return F.div(F.add(F.mul(m_[0], index), m_[1]), den);
}

ProjectivePoint MobiusTransform::operator()(const ProjectivePoint& pt) const {
    if (&pt.field() != field_) throw FieldMismatch();
    return ProjectivePoint::from_index(*field_, apply_index(pt.index()));
}

MobiusTransform MobiusTransform::compose(const MobiusTransform& in) const {
    if (in.field_ != field_) throw FieldMismatch();
    const FiniteField& F = *field_;
    auto dot = [&](uint32_t x, uint32_t y, uint32_t z, uint32_t w) { return F.add(F.mul(x, y), F.mul(z, w)); };
    return MobiusTransform(F, dot(m_[0], in.m_[0], m_[1], in.m_[2]), dot(m_[0], in.m_[1], m_[1], in.m_[3]),
                           dot(m_[2], in.m_[0], m_[3], in.m_[2]), dot(m_[2], in.m_[1], m_[3], in.m_[3]));
}

MobiusTransform MobiusTransform::inverse() const {
    const FiniteField& F = *field_;
    return MobiusTransform(F, m_[3], F.neg(m_[1]), F.neg(m_[2]), m_[0]);
}

RationalFunction MobiusTransform::as_rational_function() const {
    const FiniteField& F = *field_;
    return RationalFunction(Polynomial(F, {m_[1], m_[0]}), Polynomial(F, {m_[3], m_[2]}));
}

std::string MobiusTransform::to_string() const { return as_rational_function().to_fraction_string(); }

std::vector<MobiusTransform> MobiusTransform::enumerate(const FiniteField& F) {
    const uint32_t q = F.order();
    std::vector<MobiusTransform> out;
    out.reserve(size_t{q} * q * q - q);
    for (uint32_t c = 1; c < q; ++c)
        for (uint32_t d = 0; d < q; ++d) out.emplace_back(F, 0, 1, c, d);
    for (uint32_t b = 0; b < q; ++b)
        for (uint32_t c = 0; c < q; ++c)
            for (uint32_t d = 0; d < q; ++d)
                if (d != F.mul(b, c)) out.emplace_back(F, 1, b, c, d);
    return out;
}

RationalFunction compose(const RationalFunction& f, const MobiusTransform& in) {
    if (&f.field() != &in.field()) throw FieldMismatch();
    return from_hom(f.field(), substitute(f.field(), homogeneous(f), in.a(), in.b(), in.c(), in.d()));
}

RationalFunction compose(const MobiusTransform& out, const RationalFunction& f) {
    if (&f.field() != &out.field()) throw FieldMismatch();
    return from_hom(f.field(), apply_outer(f.field(), homogeneous(f), out.a(), out.b(), out.c(), out.d()));
}

RationalFunction compose(const RationalFunction& f, const RationalFunction& g) {
    if (&f.field() != &g.field()) throw FieldMismatch();
    const FiniteField& F = f.field();
    const auto d = static_cast<unsigned>(std::max(f.degree(), 0));
    Polynomial num(F), den(F);
    for (unsigned i = 0; i <= d; ++i) {
        const Polynomial t = g.num().pow(i) * g.den().pow(d - i);
        num += t.scaled(f.num()[i]);
        den += t.scaled(f.den()[i]);
    }
    return RationalFunction(num, den);
}

// ---------------------------------------------------------------------------

std::optional<OuterNormal> outer_normal(const RationalFunction& f) {
    if (f.degree() < 1) return std::nullopt;
    return normal_of(f.field(), homogeneous(f));
}

void for_each_inner_normal(const RationalFunction& f,
                           const std::function<bool(const MobiusTransform&, const OuterNormal&)>& visit) {
    if (f.degree() < 1) return;
    const FiniteField& F = f.field();
    const Hom h = homogeneous(f);
    for (const auto& psi : MobiusTransform::enumerate(F)) {
        auto nf = normal_of(F, substitute(F, h, psi.a(), psi.b(), psi.c(), psi.d()));
        if (nf && !visit(psi, *nf)) return;
    }
}

namespace {

// The Mobius map sending 0, 1, inf to the given points.
MobiusTransform through_points(const FiniteField& F, uint32_t t0, uint32_t t1, uint32_t t2) {
    const uint32_t inf = F.order();
    auto hom = [&](uint32_t t) { return t == inf ? PointValue{1, 0} : PointValue{t, 1}; };
    const PointValue v0 = hom(t0), v1 = hom(t1), v2 = hom(t2);
    const uint32_t lambda = F.div(cross(F, v1, v2), cross(F, v1, v0));
    return MobiusTransform(F, F.mul(lambda, v0.y), F.neg(F.mul(lambda, v0.x)), v2.y, F.neg(v2.x)).inverse();
}

// A transformation sigma such that f o sigma has distinct values at 0, 1, inf.
std::optional<MobiusTransform> spreading_transform(const RationalFunction& f) {
    const FiniteField& F = f.field();
    std::vector<uint32_t> pts, vals;
    for (uint32_t i = 0; i <= F.order() && pts.size() < 3; ++i) {
        const uint32_t v = f.eval_index(i);
        if (std::find(vals.begin(), vals.end(), v) != vals.end()) continue;
        pts.push_back(i);
        vals.push_back(v);
    }
    if (pts.size() < 3) return std::nullopt;
    return through_points(F, pts[0], pts[1], pts[2]);
}

}  // namespace

std::optional<EquivalenceWitness> are_equivalent(const RationalFunction& f, const RationalFunction& g) {
    if (&f.field() != &g.field()) throw FieldMismatch();
    if (f.degree() != g.degree()) return std::nullopt;
    const FiniteField& F = f.field();
    if (f.degree() < 1) {
        if (f == g) return EquivalenceWitness{MobiusTransform::identity(F), MobiusTransform::identity(F)};
        return std::nullopt;
    }

    MobiusTransform sigma = MobiusTransform::identity(F);
    auto nf = outer_normal(f);
    if (!nf) {
        if (auto s = spreading_transform(f)) {
            sigma = *s;
            nf = outer_normal(compose(f, sigma));
        }
    }
    if (nf) {
        // phi_f o f o sigma = phi_g o g o psi, so f = phi_f^-1 o phi_g o g o psi o sigma^-1.
        std::optional<EquivalenceWitness> found;
        for_each_inner_normal(g, [&](const MobiusTransform& psi, const OuterNormal& ng) {
            if (ng.key != nf->key) return true;
            found = EquivalenceWitness{nf->phi.inverse().compose(ng.phi), psi.compose(sigma.inverse())};
            return false;
        });
        return found;
    }

    // f takes at most two values on P^1(F_q): enumerate both sides.
    const Hom hg = homogeneous(g);
    const OrbitKey target = reduced_key(F, homogeneous(f));
    const auto group = MobiusTransform::enumerate(F);
    for (const auto& psi : group) {
        const Hom inner = substitute(F, hg, psi.a(), psi.b(), psi.c(), psi.d());
        for (const auto& phi : group) {
            if (reduced_key(F, apply_outer(F, inner, phi.a(), phi.b(), phi.c(), phi.d())) == target)
                return EquivalenceWitness{phi, psi};
        }
    }
    return std::nullopt;
}

bool is_polynomial_equivalent(const RationalFunction& f) {
    const int deg = f.degree();
    if (deg < 1) return true;
    const FiniteField& F = f.field();
    const Hom h = homogeneous(f);
    const uint32_t inf = F.order();
    const auto d = static_cast<unsigned>(deg);
    for (uint32_t eta = 0; eta <= inf; ++eta) {
        const uint32_t xi = f.eval_index(eta);
        std::vector<uint32_t> form(d + 1);
        for (unsigned i = 0; i <= d; ++i) form[i] = xi == inf ? h.d[i] : F.sub(h.n[i], F.mul(xi, h.d[i]));
        if (eta == inf) {
            // Must be c * Y^d.
            bool ok = form[0] != 0;
            for (unsigned i = 1; i <= d && ok; ++i) ok = form[i] == 0;
            if (ok) return true;
            continue;
        }
        // Must be c * (X - eta Y)^d.
        if (form[d] == 0) continue;
        const Polynomial expected = Polynomial::linear(FieldElement(F, eta)).pow(d).scaled(form[d]);
        if (Polynomial(F, form) == expected) return true;
    }
    return false;
}

std::vector<std::vector<size_t>> equivalence_classes(const std::vector<RationalFunction>& functions) {
    std::vector<std::vector<size_t>> classes;
    std::map<OrbitKey, size_t> index;
    std::vector<size_t> unkeyed_classes;  // classes whose members take < 3 values
    for (size_t i = 0; i < functions.size(); ++i) {
        const RationalFunction& f = functions[i];
        if (i > 0 && &f.field() != &functions[0].field()) throw FieldMismatch();
        std::optional<OuterNormal> nf = outer_normal(f);
        if (!nf && f.degree() >= 1)
            if (auto s = spreading_transform(f)) nf = outer_normal(compose(f, *s));
        if (nf) {
            if (auto it = index.find(nf->key); it != index.end()) {
                classes[it->second].push_back(i);
                continue;
            }
            const size_t id = classes.size();
            classes.push_back({i});
            for_each_inner_normal(f, [&](const MobiusTransform&, const OuterNormal& n) {
                index.emplace(n.key, id);
                return true;
            });
            continue;
        }
        bool placed = false;
        for (size_t id : unkeyed_classes) {
            if (are_equivalent(f, functions[classes[id].front()])) {
                classes[id].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            unkeyed_classes.push_back(classes.size());
            classes.push_back({i});
        }
    }
    return classes;
}

}  // namespace prfq
