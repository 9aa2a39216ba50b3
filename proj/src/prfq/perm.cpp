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

#include "prfq/perm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "prfq/carlitz.hpp"
#include "prfq/errors.hpp"
#include "prfq/sweep.hpp"
#include "prfq/symident.hpp"

namespace prfq {

using detail::TableField;

bool is_pr_brute(const RationalFunction& f) {
    const uint32_t n = f.field().order() + 1;
    std::vector<uint8_t> seen(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        const uint32_t v = f.eval_index(i);
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

HermiteForm hermite_form(const RationalFunction& f) {
    const FiniteField& F = f.field();
    const uint32_t inf = F.order();
    const MobiusTransform id = MobiusTransform::identity(F);
    std::vector<uint32_t> image(inf + 1), count(inf + 1, 0);
    for (uint32_t i = 0; i <= inf; ++i) ++count[image[i] = f.eval_index(i)];
    if (image[inf] == inf && count[inf] == 1) return {f, id, id};
    for (uint32_t k = 0; k <= inf; ++k) {
        const uint32_t eta = k == 0 ? inf : k - 1;
        const uint32_t xi = image[eta];
        if (count[xi] != 1) continue;
        const MobiusTransform inner = eta == inf ? id : MobiusTransform(F, eta, 1, 1, 0);
        const MobiusTransform outer = xi == inf ? id : MobiusTransform(F, 0, 1, 1, F.neg(xi));
        return {compose(outer, compose(f, inner)), outer, inner};
    }
    throw DomainError("no point of P^1 has a unique preimage");
}

bool hermite_test(const RationalFunction& f) {
    const HermiteForm h = hermite_form(f);
    const FiniteField& F = f.field();
    const uint32_t q = F.order();
    for (uint32_t s = 1; s + 2 <= q; ++s)
        if (!power_sum(h.g, s).is_zero()) return false;
    return power_sum(h.g, q - 1).rep() == F.neg(1);
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> names = {
        {Family::T33, "T3.3"},       {Family::T34, "T3.4"},       {Family::T39, "T3.9"},
        {Family::Yuan, "YUAN"},      {Family::Form32, "FORM3.2"}, {Family::Form33, "FORM3.3"},
        {Family::Form36, "FORM3.6"}, {Family::Form312, "FORM3.12"}};
    return names;
}

const FiniteField& extension(const FiniteField& F, unsigned k) {
    return FiniteField::get(F.characteristic(), F.degree() * k);
}

const FieldElement& need(const std::optional<FieldElement>& v, const char* name, const FiniteField& field) {
    if (!v) throw DomainError(std::string("missing parameter ") + name);
    if (v->field_ptr() != &field) throw DomainError(std::string("parameter ") + name + " must lie in F_" + field.descriptor());
    return *v;
}

// r in F_{q^k} outside F_q.
const FieldElement& need_root(const PRFamilySpec& s, const FiniteField& F, unsigned k) {
    const FiniteField& E = extension(F, k);
    const FieldElement& r = need(s.r, "r", E);
    if (Embedding::between(F, E).contains(r.rep())) throw DomainError("r must not lie in F_q");
    return r;
}

const FieldElement& need_nonzero(const std::optional<FieldElement>& v, const char* name, const FiniteField& field) {
    const FieldElement& x = need(v, name, field);
    if (x.is_zero()) throw DomainError(std::string("parameter ") + name + " must be nonzero");
    return x;
}

// sum_{i<k} b^(q^i) / (X - r^(q^i)) over the field of r.
RationalFunction conjugate_sum(const FieldElement& b, const FieldElement& r, unsigned k, uint32_t q) {
    RationalFunction sum = RationalFunction::constant(r.field().zero());
    FieldElement bi = b, ri = r;
    for (unsigned i = 0; i < k; ++i) {
        sum = sum + RationalFunction(Polynomial::constant(bi), Polynomial::linear(ri));
        bi = bi.pow(q);
        ri = ri.pow(q);
    }
    return sum;
}

RationalFunction lifted(const FieldElement& c, const FiniteField& E, unsigned power) {
    return RationalFunction(Polynomial::monomial(E, embed(c, E).rep(), power));
}

}  // namespace

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& [f, n] : family_names())
        if (n == name) return f;
    return std::nullopt;
}

std::string family_name(Family f) {
    for (const auto& [g, n] : family_names())
        if (g == f) return n;
    return "?";
}

RationalFunction build_family(const PRFamilySpec& s) {
    const FiniteField& F = FiniteField::of_order(s.q);
    const uint32_t q = s.q, p = F.characteristic();
    switch (s.family) {
        case Family::T33: {
            if (p != 2) throw DomainError("T3.3 needs q even");
            const FieldElement& r = need_root(s, F, 2);
            const FiniteField& E = r.field();
            return (RationalFunction::x(E) + conjugate_sum(E.one(), r, 2, q)).restrict_to(F);
        }
        case Family::T34: {
            if (p == 2) throw DomainError("T3.4 needs q odd");
            const FieldElement& r = need_root(s, F, 2);
            const FiniteField& E = r.field();
            const FieldElement& a = need_nonzero(s.a, "a", F);
            if (!Embedding::between(F, E).contains((r * r).rep())) throw DomainError("r^2 must lie in F_q");
            const auto f = lifted(a, E, 1) + RationalFunction(Polynomial(E, {1}), Polynomial::linear(r)) +
                           RationalFunction(Polynomial(E, {1}), Polynomial::linear(-r));
            return f.restrict_to(F);
        }
        case Family::T39: {
            if (p != 3) throw DomainError("T3.9 needs characteristic 3");
            const FieldElement& r = need_root(s, F, 3);
            const FiniteField& E = r.field();
            const FieldElement r2 = r.pow(q), r3 = r2.pow(q);
            if (!(r + r2 + r3).is_zero()) throw DomainError("T3.9 needs r1 + r2 + r3 = 0");
            if (s.epsilon != 1 && s.epsilon != -1) throw DomainError("epsilon must be +1 or -1");
            const FieldElement d = r - r2;
            FieldElement a = (d * d).inverse();
            if (s.epsilon < 0) a = -a;
            const Embedding& emb = Embedding::between(F, E);
            if (!emb.contains(a.rep())) throw DomainError("(r1 - r2)^-2 is not in F_q");
            const auto f = RationalFunction(Polynomial::monomial(E, a.rep(), 1)) + conjugate_sum(E.one(), r, 3, q);
            return f.restrict_to(F);
        }
        case Family::Yuan: {
            if (p != 2 && p != 3) throw DomainError("the family needs p in {2, 3}");
            const FieldElement& delta = need(s.delta, "delta", F);
            if (trace(delta, p).is_zero()) throw DomainError("delta must have nonzero absolute trace");
            Polynomial den = Polynomial::monomial(F, 1, p) - Polynomial::x(F) + Polynomial(F, {delta.rep()});
            return RationalFunction::x(F) + RationalFunction(Polynomial(F, {1}), den);
        }
        case Family::Form32: {
            const FieldElement& r = need_root(s, F, 2);
            const FieldElement& b = need_nonzero(s.b, "b", r.field());
            return (RationalFunction::x(r.field()) + conjugate_sum(b, r, 2, q)).restrict_to(F);
        }
        case Family::Form33: {
            const FieldElement& r = need_root(s, F, 2);
            const FieldElement& a = need_nonzero(s.a, "a", F);
            return (lifted(a, r.field(), 1) + conjugate_sum(r.field().one(), r, 2, q)).restrict_to(F);
        }
        case Family::Form36: {
            const FieldElement& r = need_root(s, F, 2);
            const FiniteField& E = r.field();
            const FieldElement& a = need_nonzero(s.a, "a", F);
            const FieldElement b = s.b ? need(s.b, "b", F) : F.zero();
            const FieldElement& c = need_nonzero(s.c, "c", E);
            return (lifted(a, E, 2) + lifted(b, E, 1) + conjugate_sum(c, r, 2, q)).restrict_to(F);
        }
        case Family::Form312: {
            const FieldElement& r = need_root(s, F, 3);
            const FieldElement& a = need_nonzero(s.a, "a", F);
            return (lifted(a, r.field(), 1) + conjugate_sum(r.field().one(), r, 3, q)).restrict_to(F);
        }
    }
    throw DomainError("unknown family");
}

bool TheoremReport::passed() const noexcept {
    if (failures != 0 || cases == 0) return false;
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Verifiers

namespace {

constexpr size_t kMaxWitnesses = 20;

struct Verdict {
    bool pr;
    bool fail;
};

using Describe = std::function<Witness(uint64_t)>;

std::vector<uint64_t> sample_indices(uint64_t space, uint64_t count, uint64_t seed, const std::vector<uint64_t>& forced) {
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> picks;
    picks.reserve(count + forced.size());
    for (uint64_t i = 0; i < count; ++i) picks.push_back(detail::bounded(rng, space));
    picks.insert(picks.end(), forced.begin(), forced.end());
    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    return picks;
}

// Runs make()(k) over the parameter space (or a seeded sample of it plus
// the forced indices when the space exceeds the budget).
template <class Make>
void run_sweep(TheoremReport& rep, uint64_t space, const std::vector<uint64_t>& forced, const VerifyOptions& opt,
               Make&& make, const Describe& describe) {
    rep.space = space;
    rep.seed = opt.seed;
    rep.exhaustive = space <= opt.budget;
    std::vector<uint64_t> picks;
    if (!rep.exhaustive) picks = sample_indices(space, opt.samples, opt.seed, forced);
    const uint64_t n = rep.exhaustive ? space : picks.size();
    const unsigned jobs = std::max(1u, opt.jobs);
    std::vector<uint64_t> prs(jobs, 0);
    std::vector<std::vector<uint64_t>> bad(jobs);
    detail::parallel_chunks(n, jobs, [&](uint64_t begin, uint64_t end, unsigned w) {
        auto check = make();
        for (uint64_t i = begin; i < end; ++i) {
            const uint64_t k = rep.exhaustive ? i : picks[i];
            const Verdict v = check(k);
            prs[w] += v.pr;
            if (v.fail) bad[w].push_back(k);
        }
    });
    rep.cases += n;
    for (auto c : prs) rep.prs += c;
    std::vector<uint64_t> all;
    for (auto& b : bad) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    rep.failures += all.size();
    for (size_t i = 0; i < all.size() && rep.witnesses.size() < kMaxWitnesses; ++i)
        rep.witnesses.push_back(describe(all[i]));
}

// fn(k) returns a witness on failure. Exhaustive up to `cap` instances,
// otherwise a seeded sample of opt.samples.
template <class Fn>
IdentityCheck run_check(const std::string& name, uint64_t space, const VerifyOptions& opt, Fn&& fn) {
    IdentityCheck c;
    c.name = name;
    const uint64_t cap = std::max<uint64_t>(opt.samples, 1);
    std::vector<uint64_t> picks;
    const bool all = space <= cap;
    if (!all) picks = sample_indices(space, cap, opt.seed ^ std::hash<std::string>{}(name), {});
    const uint64_t n = all ? space : picks.size();
    for (uint64_t i = 0; i < n; ++i) {
        std::optional<Witness> w = fn(all ? i : picks[i]);
        ++c.cases;
        if (w) {
            ++c.failures;
            if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(std::move(*w));
        }
    }
    return c;
}

IdentityCheck single_check(const std::string& name, bool ok, Witness w) {
    IdentityCheck c;
    c.name = name;
    c.cases = 1;
    if (!ok) {
        c.failures = 1;
        c.witnesses.push_back(std::move(w));
    }
    return c;
}

template <class Eval>
bool injective(detail::SeenSet& seen, uint32_t q, Eval&& eval) {
    seen.clear();
    for (uint32_t x = 0; x < q; ++x)
        if (!seen.insert(eval(x))) return false;
    return true;
}

std::string pr_text(bool pr) { return pr ? "PR" : "not PR"; }

// Field context shared by the verifiers: F_q with tables, and F_{q^k}.
struct Ctx {
    const FiniteField& F;
    TableField T;
    uint32_t q;
    explicit Ctx(const FiniteField& f) : F(f), T(f), q(f.order()) {}
    std::string fmt(uint32_t x) const { return F.format(x); }
};

struct Ext {
    const FiniteField& E;
    const Embedding& emb;
    Ext(const FiniteField& F, unsigned k)
        : E(FiniteField::get(F.characteristic(), F.degree() * k)), emb(Embedding::between(F, E)) {}
    uint32_t up(uint32_t x) const { return emb.apply(x); }
    uint32_t down(uint32_t y) const { return emb.project(y); }
    bool in_base(uint32_t y) const { return emb.contains(y); }
};

// r in F_{q^2} \ F_q with the coefficients of (X - r)(X - r^q).
struct QuadRoot {
    uint32_t r, rq;
    uint32_t t, n;  // r + r^q, r^(q+1) in F_q
};

std::vector<QuadRoot> quadratic_roots(const Ctx& c, const Ext& x) {
    std::vector<QuadRoot> out;
    for (uint32_t r = 0; r < x.E.order(); ++r) {
        if (x.in_base(r)) continue;
        const uint32_t rq = x.E.pow(r, c.q);
        out.push_back({r, rq, x.down(x.E.add(r, rq)), x.down(x.E.mul(r, rq))});
    }
    return out;
}

// 1 / N(x) for x in F_q, N = X^2 + c1 X + c0 rootless.
std::vector<uint32_t> inverse_quadratic(const TableField& T, uint32_t c1, uint32_t c0) {
    std::vector<uint32_t> v(T.q());
    for (uint32_t x = 0; x < T.q(); ++x) v[x] = T.inv(T.add(T.mul(T.add(x, c1), x), c0));
    return v;
}

std::vector<uint32_t> nonsquares(const Ctx& c) {
    std::vector<uint32_t> out;
    for (uint32_t x = 1; x < c.q; ++x)
        if (!is_square(FieldElement(c.F, x))) out.push_back(x);
    return out;
}

uint32_t first_root(const Polynomial& f, const FiniteField& E) {
    const auto roots = roots_over(f, E);
    if (roots.empty()) throw Error("no root in the splitting field");
    return roots.front().value.rep();
}

// ---- L3.2: X + b/(X-r) + b^q/(X-r^q) ----------------------------------------

TheoremReport verify_l32(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const Ext x(c.F, 2);
    const auto rs = quadratic_roots(c, x);
    const uint64_t nb = x.E.order() - 1;
    std::vector<std::vector<uint32_t>> invn;
    for (const auto& r : rs) invn.push_back(inverse_quadratic(c.T, c.T.neg(r.t), r.n));
    // alpha, beta with b/(X - r) + b^q/(X - r^q) = (alpha X + beta)/N.
    auto coeffs = [&](uint64_t k) {
        const QuadRoot& r = rs[k / nb];
        const uint32_t b = static_cast<uint32_t>(1 + k % nb), bq = x.E.pow(b, c.q);
        const uint32_t alpha = x.down(x.E.add(b, bq));
        const uint32_t beta = x.down(x.E.neg(x.E.add(x.E.mul(b, r.rq), x.E.mul(bq, r.r))));
        return std::array<uint32_t, 4>{alpha, beta, b, bq};
    };
    auto make = [&] {
        return [&, seen = detail::SeenSet(c.q)](uint64_t k) mutable {
            const auto [alpha, beta, b, bq] = coeffs(k);
            const auto& inv = invn[k / nb];
            const bool pr = injective(seen, c.q, [&](uint32_t v) {
                return c.T.add(v, c.T.mul(c.T.add(c.T.mul(alpha, v), beta), inv[v]));
            });
            return Verdict{pr, pr && b != bq};
        };
    };
    auto describe = [&](uint64_t k) {
        const auto& r = rs[k / nb];
        const auto co = coeffs(k);
        return Witness{{{"r", x.E.format(r.r)}, {"b", x.E.format(co[2])}}, "b in F_q*", "PR with b outside F_q"};
    };
    run_sweep(rep, rs.size() * nb, {}, opt, make, describe);

    rep.checks.push_back(run_check("sum f = -(b1-b2)/(r1-r2) (q>2), -1-(b1-b2)/(r1-r2) (q=2)", rs.size() * nb, opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const auto& r = rs[k / nb];
                                       const auto [alpha, beta, b, bq] = coeffs(k);
                                       uint32_t sum = 0;
                                       for (uint32_t v = 0; v < c.q; ++v)
                                           sum = c.T.add(sum, c.T.add(v, c.T.mul(c.T.add(c.T.mul(alpha, v), beta),
                                                                                  invn[k / nb][v])));
                                       const FiniteField& E = x.E;
                                       uint32_t expect = E.neg(E.div(E.sub(b, bq), E.sub(r.r, r.rq)));
                                       if (c.q == 2) expect = E.sub(expect, 1);
                                       if (x.up(sum) == expect) return std::nullopt;
                                       return Witness{{{"r", E.format(r.r)}, {"b", E.format(b)}},
                                                      E.format(expect), c.fmt(sum)};
                                   }));
    return rep;
}

// ---- T3.3: X + 1/(X-r) + 1/(X-r^q), q even ----------------------------------

TheoremReport verify_t33(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const Ext x(c.F, 2);
    const auto rs = quadratic_roots(c, x);
    std::vector<std::vector<uint32_t>> invn;
    for (const auto& r : rs) invn.push_back(inverse_quadratic(c.T, r.t, r.n));
    auto value = [&](size_t i, uint32_t v) { return c.T.add(v, c.T.mul(rs[i].t, invn[i][v])); };
    std::vector<uint64_t> forced;
    for (size_t i = 0; i < rs.size(); ++i)
        if (rs[i].t == 1) forced.push_back(i);
    auto make = [&] {
        return [&, seen = detail::SeenSet(c.q)](uint64_t k) mutable {
            const bool pr = injective(seen, c.q, [&](uint32_t v) { return value(k, v); });
            return Verdict{pr, pr != (rs[k].t == 1)};
        };
    };
    auto describe = [&](uint64_t k) {
        const bool expect = rs[k].t == 1;
        return Witness{{{"r", x.E.format(rs[k].r)}, {"r+r^q", c.fmt(rs[k].t)}}, pr_text(expect), pr_text(!expect)};
    };
    run_sweep(rep, rs.size(), forced, opt, make, describe);

    if (c.q >= 4) {
        rep.checks.push_back(run_check(
            "sum f^3 = (1+r1+r2)^2/(r1+r2), plus 1 when q=4", rs.size(), opt, [&](uint64_t k) -> std::optional<Witness> {
                std::vector<uint32_t> vals(c.q);
                for (uint32_t v = 0; v < c.q; ++v) vals[v] = value(k, v);
                const uint32_t s3 = detail::power_sums(c.T, vals, 3)[2];
                const uint32_t t = rs[k].t;
                uint32_t expect = c.T.div(c.T.mul(c.T.add(1, t), c.T.add(1, t)), t);
                if (c.q == 4) expect = c.T.add(expect, 1);
                if (s3 == expect) return std::nullopt;
                return Witness{{{"r", x.E.format(rs[k].r)}}, c.fmt(expect), c.fmt(s3)};
            }));
    }
    // f(x+y) - f(x) = y[A^2 + A y + (A+1) y^2] / ((x+r)(x+r+1)(x+y+r)(x+y+r+1)), A = 1+r+r^2+x+x^2.
    rep.checks.push_back(run_check(
        "difference quotient factorization for r+r^q=1", forced.size() * c.q * c.q, opt,
        [&](uint64_t k) -> std::optional<Witness> {
            const size_t i = forced[k / (uint64_t{c.q} * c.q)];
            const uint32_t xv = static_cast<uint32_t>(k / c.q % c.q), y = static_cast<uint32_t>(k % c.q);
            const FiniteField& E = x.E;
            const uint32_t r = rs[i].r, X = x.up(xv), Y = x.up(y), XY = E.add(X, Y);
            const uint32_t A = E.add(E.add(E.add(1, r), E.mul(r, r)), E.add(X, E.mul(X, X)));
            const uint32_t num =
                E.mul(Y, E.add(E.add(E.mul(A, A), E.mul(A, Y)), E.mul(E.add(A, 1), E.mul(Y, Y))));
            const uint32_t den = E.mul(E.mul(E.add(X, r), E.add(E.add(X, r), 1)),
                                       E.mul(E.add(XY, r), E.add(E.add(XY, r), 1)));
            const uint32_t lhs = x.up(c.T.sub(value(i, c.T.add(xv, y)), value(i, xv)));
            if (lhs == E.div(num, den)) return std::nullopt;
            return Witness{{{"r", E.format(r)}, {"x", c.fmt(xv)}, {"y", c.fmt(y)}}, E.format(E.div(num, den)),
                           E.format(lhs)};
        }));
    return rep;
}

// ---- T3.4: aX + 1/(X-r) + 1/(X+r), q odd ------------------------------------

TheoremReport verify_t34(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const auto cs = nonsquares(c);
    const uint32_t na = c.q - 1, two = c.F.from_int(2), four = c.F.from_int(4);
    std::vector<std::vector<uint32_t>> invn;
    for (uint32_t s : cs) invn.push_back(inverse_quadratic(c.T, 0, c.T.neg(s)));
    auto value = [&](uint64_t k, uint32_t v) {
        const uint32_t a = static_cast<uint32_t>(1 + k % na);
        return c.T.add(c.T.mul(a, v), c.T.mul(c.T.mul(two, v), invn[k / na][v]));
    };
    auto target = [&](uint64_t k) { return c.T.neg(c.T.inv(c.T.mul(four, cs[k / na]))); };
    std::vector<uint64_t> forced;
    for (uint64_t ci = 0; ci < cs.size(); ++ci) forced.push_back(ci * na + target(ci * na) - 1);
    auto make = [&] {
        return [&, seen = detail::SeenSet(c.q)](uint64_t k) mutable {
            const bool pr = injective(seen, c.q, [&](uint32_t v) { return value(k, v); });
            return Verdict{pr, pr != (1 + k % na == target(k))};
        };
    };
    auto describe = [&](uint64_t k) {
        const bool expect = 1 + k % na == target(k);
        return Witness{{{"r^2", c.fmt(cs[k / na])}, {"a", c.fmt(static_cast<uint32_t>(1 + k % na))}},
                       pr_text(expect), pr_text(!expect)};
    };
    run_sweep(rep, cs.size() * na, forced, opt, make, describe);

    rep.checks.push_back(run_check("sum f^2 = -(1+4ar^2)/2r^2, minus a^2 when q=3", cs.size() * na, opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       std::vector<uint32_t> vals(c.q);
                                       for (uint32_t v = 0; v < c.q; ++v) vals[v] = value(k, v);
                                       const uint32_t s2 = detail::power_sums(c.T, vals, 2)[1];
                                       const uint32_t a = static_cast<uint32_t>(1 + k % na), r2 = cs[k / na];
                                       uint32_t expect = c.T.neg(c.T.div(c.T.add(1, c.T.mul(four, c.T.mul(a, r2))),
                                                                         c.T.mul(two, r2)));
                                       if (c.q == 3) expect = c.T.sub(expect, c.T.mul(a, a));
                                       if (s2 == expect) return std::nullopt;
                                       return Witness{{{"r^2", c.fmt(r2)}, {"a", c.fmt(a)}}, c.fmt(expect),
                                                      c.fmt(s2)};
                                   }));

    // f(x+y) - f(x) = -y(3r^2+x^2+xy-ry)(3r^2+x^2+xy+ry) / (4r^2(x-r)(x+r)(x+y-r)(x+y+r)) at a = -1/4r^2.
    const Ext x(c.F, 2);
    std::vector<uint32_t> roots;
    for (uint32_t s : cs) roots.push_back(first_root(Polynomial(c.F, {c.T.neg(s), 0, 1}), x.E));
    rep.checks.push_back(run_check(
        "difference quotient factorization for a=-1/4r^2", forced.size() * c.q * c.q, opt,
        [&](uint64_t k) -> std::optional<Witness> {
            const size_t i = k / (uint64_t{c.q} * c.q);
            const uint32_t xv = static_cast<uint32_t>(k / c.q % c.q), y = static_cast<uint32_t>(k % c.q);
            const FiniteField& E = x.E;
            const uint32_t r = roots[i], X = x.up(xv), Y = x.up(y), XY = E.add(X, Y);
            const uint32_t r2 = E.mul(r, r), base = E.add(E.mul(E.from_int(3), r2), E.mul(X, XY));
            const uint32_t num = E.neg(E.mul(Y, E.mul(E.sub(base, E.mul(r, Y)), E.add(base, E.mul(r, Y)))));
            const uint32_t den = E.mul(E.mul(E.mul(E.from_int(4), r2), E.mul(E.sub(X, r), E.add(X, r))),
                                       E.mul(E.sub(XY, r), E.add(XY, r)));
            const uint64_t kk = forced[i];
            const uint32_t lhs = x.up(c.T.sub(value(kk, c.T.add(xv, y)), value(kk, xv)));
            if (lhs == E.div(num, den)) return std::nullopt;
            return Witness{{{"r", E.format(r)}, {"x", c.fmt(xv)}, {"y", c.fmt(y)}}, E.format(E.div(num, den)),
                           E.format(lhs)};
        }));
    return rep;
}

uint32_t closed_sum(const RationalFunction& f, unsigned s) { return power_sum_closed(f, s).rep(); }

// ---- T3.5: quartics over F_2^n ----------------------------------------------

TheoremReport verify_t35(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const Ext x(c.F, 2);
    const auto rs = quadratic_roots(c, x);
    const uint64_t na = c.q - 1;
    std::vector<std::vector<uint32_t>> invn;
    for (const auto& r : rs) invn.push_back(inverse_quadratic(c.T, r.t, r.n));
    // k = (i * 2 + b) * na + a - 1.
    auto unpack = [&](uint64_t k) {
        return std::array<uint32_t, 3>{static_cast<uint32_t>(k / na / 2), static_cast<uint32_t>(k / na % 2),
                                       static_cast<uint32_t>(1 + k % na)};
    };
    auto value = [&](uint32_t i, uint32_t b, uint32_t a, uint32_t v) {
        return c.T.add(c.T.mul(c.T.add(c.T.mul(a, v), b), v), c.T.mul(rs[i].t, invn[i][v]));
    };
    auto sums = [&](uint32_t i, uint32_t b, uint32_t a, unsigned smax) {
        std::vector<uint32_t> vals(c.q);
        for (uint32_t v = 0; v < c.q; ++v) vals[v] = value(i, b, a, v);
        return detail::power_sums(c.T, vals, smax);
    };
    auto params = [&](uint32_t i, uint32_t b, uint32_t a) {
        return std::vector<std::pair<std::string, std::string>>{
            {"r", x.E.format(rs[i].r)}, {"b", std::to_string(b)}, {"a", c.fmt(a)}};
    };
    auto make = [&] {
        return [&, seen = detail::SeenSet(c.q)](uint64_t k) mutable {
            const auto [i, b, a] = unpack(k);
            const bool pr = injective(seen, c.q, [&](uint32_t v) { return value(i, b, a, v); });
            return Verdict{pr, pr};
        };
    };
    auto describe = [&](uint64_t k) {
        const auto [i, b, a] = unpack(k);
        return Witness{params(i, b, a), "not PR", "PR"};
    };
    const uint64_t space = rs.size() * 2 * na;
    run_sweep(rep, space, {}, opt, make, describe);

    const TableField& T = c.T;
    const uint64_t half = rs.size() * na;
    auto case1 = [&](uint64_t k) { return std::array<uint32_t, 2>{static_cast<uint32_t>(k / na), static_cast<uint32_t>(1 + k % na)}; };
    // (1+at)(1+t^2+at^3)
    auto base3 = [&](uint32_t t, uint32_t a) {
        const uint32_t t2 = T.mul(t, t), t3 = T.mul(t2, t);
        return T.mul(T.add(1, T.mul(a, t)), T.add(T.add(1, t2), T.mul(a, t3)));
    };
    rep.checks.push_back(run_check("b=1: sum f^3 = (1+at)(1+t^2+at^3)/t, t=r1+r2", half, opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const auto [i, a] = case1(k);
                                       const uint32_t t = rs[i].t, got = sums(i, 1, a, 3)[2];
                                       const uint32_t expect = T.div(base3(t, a), t);
                                       if (got == expect) return std::nullopt;
                                       return Witness{params(i, 1, a), c.fmt(expect), c.fmt(got)};
                                   }));
    rep.checks.push_back(run_check(
        "b=1: sum f^5 = (1+at)(1+t^2+at^3)(1+t^2+t^4+at^3+a^2t^6)/t^3", half, opt,
        [&](uint64_t k) -> std::optional<Witness> {
            const auto [i, a] = case1(k);
            const uint32_t t = rs[i].t, got = sums(i, 1, a, 5)[4];
            const uint32_t t2 = T.mul(t, t), t3 = T.mul(t2, t);
            const uint32_t third = T.add(T.add(T.add(1, t2), T.mul(t2, t2)),
                                         T.add(T.mul(a, t3), T.mul(T.mul(a, a), T.mul(t3, t3))));
            const uint32_t expect = T.div(T.mul(base3(t, a), third), t3);
            if (got == expect) return std::nullopt;
            return Witness{params(i, 1, a), c.fmt(expect), c.fmt(got)};
        }));

    const MultiPoly h = load_fixture("h", opt.data_dir);
    auto h_at = [&](uint32_t i, uint32_t a_in_e) {
        return h.instantiate({{"a", x.E.element(a_in_e)},
                              {"r1", x.E.element(rs[i].r)},
                              {"r2", x.E.element(rs[i].rq)}},
                             x.E)
            .rep();
    };
    rep.checks.push_back(run_check("b=1: sum f^7 = (1+at)h/t^3", half, opt, [&](uint64_t k) -> std::optional<Witness> {
        const auto [i, a] = case1(k);
        const uint32_t t = rs[i].t, got = x.up(sums(i, 1, a, 7)[6]);
        const FiniteField& E = x.E;
        const uint32_t te = x.up(t);
        const uint32_t expect = E.div(E.mul(E.add(1, E.mul(x.up(a), te)), h_at(i, x.up(a))), E.pow(te, 3));
        if (got == expect) return std::nullopt;
        return Witness{params(i, 1, a), E.format(expect), E.format(got)};
    }));
    rep.checks.push_back(run_check("h = (1+t)^2 at a = 1/t + 1/t^3", rs.size(), opt, [&](uint64_t i) -> std::optional<Witness> {
        const FiniteField& E = x.E;
        const uint32_t t = x.up(rs[i].t);
        const uint32_t a = E.add(E.inv(t), E.inv(E.pow(t, 3)));
        const uint32_t got = h_at(static_cast<uint32_t>(i), a), expect = E.pow(E.add(1, t), 2);
        if (got == expect) return std::nullopt;
        return Witness{{{"r", E.format(rs[i].r)}}, E.format(expect), E.format(got)};
    }));
    rep.checks.push_back(run_check("f(t) = f(0) at b=1, a = 1/t", rs.size(), opt, [&](uint64_t i) -> std::optional<Witness> {
        const uint32_t t = rs[i].t, a = T.inv(t);
        const uint32_t ft = value(static_cast<uint32_t>(i), 1, a, t), f0 = value(static_cast<uint32_t>(i), 1, a, 0);
        if (ft == f0) return std::nullopt;
        return Witness{params(static_cast<uint32_t>(i), 1, a), c.fmt(f0), c.fmt(ft)};
    }));
    rep.checks.push_back(run_check("b=0: sum f^3 = a(1+at^3)", half, opt, [&](uint64_t k) -> std::optional<Witness> {
        const auto [i, a] = case1(k);
        const uint32_t t = rs[i].t, got = sums(i, 0, a, 3)[2];
        const uint32_t expect = T.mul(a, T.add(1, T.mul(a, T.mul(t, T.mul(t, t)))));
        if (got == expect) return std::nullopt;
        return Witness{params(i, 0, a), c.fmt(expect), c.fmt(got)};
    }));

    // X^2 + 1/(X^2+X+c), Tr(c) = 1: closed-form sums vanish for k <= 10 and sum f^11 = 1.
    std::vector<uint32_t> cs;
    for (uint32_t v = 0; v < c.q; ++v)
        if (!trace(FieldElement(c.F, v), 2).is_zero()) cs.push_back(v);
    rep.checks.push_back(run_check("X^2+1/(X^2+X+c): sum f^k = 0 for k<=10, sum f^11 = 1", cs.size(), opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const RationalFunction f =
                                           RationalFunction(Polynomial::monomial(c.F, 1, 2)) +
                                           RationalFunction(Polynomial(c.F, {1}), Polynomial(c.F, {cs[k], 1, 1}));
                                       std::string got;
                                       bool ok = true;
                                       for (unsigned s = 1; s <= 11; ++s) {
                                           const uint32_t v = closed_sum(f, s);
                                           ok = ok && v == (s == 11 ? 1u : 0u);
                                           got += (s > 1 ? "," : "") + c.fmt(v);
                                       }
                                       if (ok) return std::nullopt;
                                       return Witness{{{"c", c.fmt(cs[k])}}, "0,0,0,0,0,0,0,0,0,0,1", got};
                                   }));
    return rep;
}

// ---- T3.6, T3.7: aX^2 + bX + quadratic denominator --------------------------

TheoremReport verify_t36(const Ctx& c, const VerifyOptions& opt, bool char3) {
    TheoremReport rep;
    const auto cs = nonsquares(c);
    const TableField& T = c.T;
    const uint64_t na = c.q - 1, q = c.q;
    const uint32_t two = c.F.from_int(2), four = c.F.from_int(4);
    std::vector<std::vector<uint32_t>> frac;  // 2x/(x^2 - r^2)
    for (uint32_t s : cs) {
        auto inv = inverse_quadratic(T, 0, T.neg(s));
        for (uint32_t v = 0; v < c.q; ++v) inv[v] = T.mul(T.mul(two, v), inv[v]);
        frac.push_back(std::move(inv));
    }
    // k = (ci * na + a - 1) * q + b.
    auto unpack = [&](uint64_t k) {
        return std::array<uint32_t, 3>{static_cast<uint32_t>(k / q / na), static_cast<uint32_t>(1 + k / q % na),
                                       static_cast<uint32_t>(k % q)};
    };
    auto value = [&](uint32_t ci, uint32_t a, uint32_t b, uint32_t v) {
        return T.add(T.mul(T.add(T.mul(a, v), b), v), frac[ci][v]);
    };
    auto sums = [&](uint32_t ci, uint32_t a, uint32_t b, unsigned smax) {
        std::vector<uint32_t> vals(c.q);
        for (uint32_t v = 0; v < c.q; ++v) vals[v] = value(ci, a, b, v);
        return detail::power_sums(T, vals, smax);
    };
    auto params = [&](uint32_t ci, uint32_t a, uint32_t b) {
        return std::vector<std::pair<std::string, std::string>>{
            {"r^2", c.fmt(cs[ci])}, {"a", c.fmt(a)}, {"b", c.fmt(b)}};
    };
    auto make = [&] {
        return [&, seen = detail::SeenSet(c.q)](uint64_t k) mutable {
            const auto [ci, a, b] = unpack(k);
            const bool pr = injective(seen, c.q, [&](uint32_t v) { return value(ci, a, b, v); });
            return Verdict{pr, pr};
        };
    };
    auto describe = [&](uint64_t k) {
        const auto [ci, a, b] = unpack(k);
        return Witness{params(ci, a, b), "not PR", "PR"};
    };
    run_sweep(rep, cs.size() * na * q, {}, opt, make, describe);

    rep.checks.push_back(run_check("sum f^2 = -(1+4br^2)/2r^2", cs.size() * na * q, opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const auto [ci, a, b] = unpack(k);
                                       const uint32_t r2 = cs[ci], got = sums(ci, a, b, 2)[1];
                                       const uint32_t expect =
                                           T.neg(T.div(T.add(1, T.mul(four, T.mul(b, r2))), T.mul(two, r2)));
                                       if (got == expect) return std::nullopt;
                                       return Witness{params(ci, a, b), c.fmt(expect), c.fmt(got)};
                                   }));
    auto pinned = [&](uint64_t k) {
        const uint32_t ci = static_cast<uint32_t>(k / na), a = static_cast<uint32_t>(1 + k % na);
        return std::array<uint32_t, 3>{ci, a, T.neg(T.inv(T.mul(four, cs[ci])))};
    };
    if (!char3) {
        rep.checks.push_back(run_check("b=-1/4r^2: sum f^3 = -6a", cs.size() * na, opt,
                                       [&](uint64_t k) -> std::optional<Witness> {
                                           const auto [ci, a, b] = pinned(k);
                                           const uint32_t got = sums(ci, a, b, 3)[2];
                                           const uint32_t expect = T.neg(T.mul(c.F.from_int(6), a));
                                           if (got == expect) return std::nullopt;
                                           return Witness{params(ci, a, b), c.fmt(expect), c.fmt(got)};
                                       }));
    } else {
        rep.checks.push_back(run_check("b=-1/r^2: sum f^4 = 0, sum f^5 = -a/r^2", cs.size() * na, opt,
                                       [&](uint64_t k) -> std::optional<Witness> {
                                           const auto [ci, a, b] = pinned(k);
                                           const auto s = sums(ci, a, b, 5);
                                           const uint32_t expect = T.neg(T.div(a, cs[ci]));
                                           if (s[3] == 0 && s[4] == expect) return std::nullopt;
                                           return Witness{params(ci, a, b), "0," + c.fmt(expect),
                                                          c.fmt(s[3]) + "," + c.fmt(s[4])};
                                       }));
    }
    return rep;
}

// ---- aX + N'/N, N = (X - r1)(X - r2)(X - r3) -------------------------------

struct CubicRoot {
    uint32_t r1, r2, r3;  // in F_{q^3}
    uint32_t c0, c1, c2;  // N = X^3 + c2 X^2 + c1 X + c0
};

// One root triple per irreducible monic cubic, in order of the first root.
std::vector<CubicRoot> cubic_roots(const Ctx& c, const Ext& x) {
    const FiniteField& E = x.E;
    std::vector<uint8_t> seen(size_t{c.q} * c.q * c.q, 0);
    std::vector<CubicRoot> out;
    for (uint32_t r = 0; r < E.order(); ++r) {
        if (x.in_base(r)) continue;
        const uint32_t r2 = E.pow(r, c.q), r3 = E.pow(r2, c.q);
        const uint32_t c2 = x.down(E.neg(E.add(E.add(r, r2), r3)));
        const uint32_t c1 = x.down(E.add(E.add(E.mul(r, r2), E.mul(r, r3)), E.mul(r2, r3)));
        const uint32_t c0 = x.down(E.neg(E.mul(E.mul(r, r2), r3)));
        const size_t key = (size_t{c2} * c.q + c1) * c.q + c0;
        if (seen[key]) continue;
        seen[key] = 1;
        out.push_back({r, r2, r3, c0, c1, c2});
    }
    return out;
}

// N'(x)/N(x) over F_q.
std::vector<uint32_t> log_derivative(const TableField& T, const CubicRoot& n) {
    std::vector<uint32_t> v(T.q());
    const uint32_t three = T.field().from_int(3), two = T.field().from_int(2);
    for (uint32_t x = 0; x < T.q(); ++x) {
        const uint32_t N = T.add(T.mul(T.add(T.mul(T.add(x, n.c2), x), n.c1), x), n.c0);
        const uint32_t D = T.add(T.mul(T.add(T.mul(three, x), T.mul(two, n.c2)), x), n.c1);
        v[x] = T.div(D, N);
    }
    return v;
}

RationalFunction form312(const Ctx& c, const CubicRoot& n, uint32_t a) {
    const Polynomial N(c.F, {n.c0, n.c1, n.c2, 1});
    return RationalFunction(Polynomial(c.F, {0, a})) + RationalFunction(N.derivative(), N);
}

std::vector<std::pair<std::string, std::string>> cubic_params(const Ctx& c, const Ext& x, const CubicRoot& n,
                                                              uint32_t a) {
    return {{"r", x.E.format(n.r1)},
            {"N", Polynomial(c.F, {n.c0, n.c1, n.c2, 1}).to_string()},
            {"a", c.fmt(a)}};
}

// Sweeps k = cubic * (q-1) + a - 1 with expected(k) giving the predicted
// verdict.
template <class Expected>
void sweep_form312(TheoremReport& rep, const Ctx& c, const Ext& x, const std::vector<CubicRoot>& ns,
                   const std::vector<uint64_t>& forced, const VerifyOptions& opt, Expected&& expected) {
    const uint64_t na = c.q - 1;
    auto make = [&] {
        return [&, seen = detail::SeenSet(c.q), last = uint64_t(-1), ld = std::vector<uint32_t>()](uint64_t k) mutable {
            const uint64_t i = k / na;
            if (i != last) {
                ld = log_derivative(c.T, ns[i]);
                last = i;
            }
            const uint32_t a = static_cast<uint32_t>(1 + k % na);
            const bool pr = injective(seen, c.q, [&](uint32_t v) { return c.T.add(c.T.mul(a, v), ld[v]); });
            return Verdict{pr, pr != expected(k)};
        };
    };
    auto describe = [&](uint64_t k) {
        const bool e = expected(k);
        return Witness{cubic_params(c, x, ns[k / na], static_cast<uint32_t>(1 + k % na)), pr_text(e), pr_text(!e)};
    };
    run_sweep(rep, ns.size() * na, forced, opt, make, describe);
}

std::vector<uint32_t> form312_sums(const Ctx& c, const CubicRoot& n, uint32_t a, unsigned smax) {
    const auto ld = log_derivative(c.T, n);
    std::vector<uint32_t> vals(c.q);
    for (uint32_t v = 0; v < c.q; ++v) vals[v] = c.T.add(c.T.mul(a, v), ld[v]);
    return detail::power_sums(c.T, vals, smax);
}

// ---- T3.8: aX + N'/N, N cubic -----------------------------------------------

TheoremReport verify_t38(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const Ext x(c.F, 3);
    const auto ns = cubic_roots(c, x);
    sweep_form312(rep, c, x, ns, {}, opt, [](uint64_t) { return false; });

    const MultiPoly h1 = load_fixture("h1", opt.data_dir), h2 = load_fixture("h2", opt.data_dir),
                    h3 = load_fixture("h3", opt.data_dir);
    // A resultant that is a single monomial in a, r2 with coefficient nonzero
    // mod p cannot vanish for a, r2 != 0.
    const uint32_t p = c.F.characteristic();
    auto survives = [&](const MultiPoly& res) {
        if (res.terms().size() != 1) return false;
        const BigInt& coef = res.terms().begin()->second;
        return coef % p != 0;
    };
    const MultiPoly res2 = resultant_wrt(h1, h2, "r1"), res3 = resultant_wrt(h1, h3, "r1");
    const bool s2 = survives(res2), s3 = survives(res3);
    rep.checks.push_back(single_check(
        "Res(h1,h2;r1) or Res(h1,h3;r1) nonzero mod p", s2 || s3,
        Witness{{{"p", std::to_string(p)}, {"Res(h1,h2)", res2.to_string()}, {"Res(h1,h3)", res3.to_string()}},
                "one resultant nonzero mod p", "both vanish mod p"}));

    // Closed forms on r1 + r2 + r3 = 0 against the Carlitz engine.
    std::vector<size_t> tz;
    for (size_t i = 0; i < ns.size(); ++i)
        if (ns[i].c2 == 0) tz.push_back(i);
    const uint64_t na = c.q - 1;
    const FiniteField& E = x.E;
    rep.checks.push_back(run_check(
        "on r1+r2+r3=0: sum f = 3h1/D, sum f^2 = -3h2/D^2, sum f^3 = 3h3/D^3", tz.size() * na, opt,
        [&](uint64_t k) -> std::optional<Witness> {
            const CubicRoot& n = ns[tz[k / na]];
            const uint32_t a = static_cast<uint32_t>(1 + k % na);
            const RationalFunction f = form312(c, n, a);
            const std::map<std::string, FieldElement> at = {
                {"a", E.element(x.up(a))}, {"r1", E.element(n.r1)}, {"r2", E.element(n.r2)}};
            const uint32_t D = E.mul(E.mul(E.sub(n.r1, n.r2), E.sub(n.r2, n.r3)), E.sub(n.r3, n.r1));
            const uint32_t three = E.from_int(3);
            const uint32_t e1 = E.div(E.mul(three, h1.instantiate(at, E).rep()), D);
            const uint32_t e2 = E.neg(E.div(E.mul(three, h2.instantiate(at, E).rep()), E.pow(D, 2)));
            const uint32_t e3 = E.div(E.mul(three, h3.instantiate(at, E).rep()), E.pow(D, 3));
            const uint32_t g1 = x.up(closed_sum(f, 1)), g2 = x.up(closed_sum(f, 2)), g3 = x.up(closed_sum(f, 3));
            if (g1 == e1 && g2 == e2 && g3 == e3) return std::nullopt;
            return Witness{cubic_params(c, x, n, a), E.format(e1) + "," + E.format(e2) + "," + E.format(e3),
                           E.format(g1) + "," + E.format(g2) + "," + E.format(g3)};
        }));
    return rep;
}

// ---- T3.9: aX + N'/N in characteristic 3 ------------------------------------

TheoremReport verify_t39(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const Ext x(c.F, 3);
    const FiniteField& E = x.E;
    const TableField& T = c.T;
    const auto ns = cubic_roots(c, x);
    const uint64_t na = c.q - 1;
    // Predicted a per cubic from its roots (0 when none).
    std::vector<uint32_t> target(ns.size(), 0);
    std::vector<uint64_t> forced;
    for (size_t i = 0; i < ns.size(); ++i) {
        const CubicRoot& n = ns[i];
        if (E.add(E.add(n.r1, n.r2), n.r3) != 0) continue;
        const uint32_t a = E.neg(E.inv(E.pow(E.sub(n.r1, n.r2), 2)));
        if (!x.in_base(a)) continue;
        target[i] = x.down(a);
        forced.push_back(i * na + target[i] - 1);
    }
    sweep_form312(rep, c, x, ns, forced, opt,
                  [&](uint64_t k) { return target[k / na] == static_cast<uint32_t>(1 + k % na); });

    auto diffs = [&](const CubicRoot& n) {
        return E.mul(E.mul(E.sub(n.r1, n.r2), E.sub(n.r2, n.r3)), E.sub(n.r3, n.r1));
    };
    rep.checks.push_back(run_check("sum f = (r1+r2+r3)^2/((r1-r2)(r2-r3)(r3-r1))", ns.size() * na, opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const CubicRoot& n = ns[k / na];
                                       const uint32_t a = static_cast<uint32_t>(1 + k % na);
                                       const uint32_t got = x.up(form312_sums(c, n, a, 1)[0]);
                                       const uint32_t expect =
                                           E.div(E.pow(E.add(E.add(n.r1, n.r2), n.r3), 2), diffs(n));
                                       if (got == expect) return std::nullopt;
                                       return Witness{cubic_params(c, x, n, a), E.format(expect), E.format(got)};
                                   }));
    std::vector<size_t> tz;
    for (size_t i = 0; i < ns.size(); ++i)
        if (ns[i].c2 == 0) tz.push_back(i);
    rep.checks.push_back(run_check(
        "on r1+r2+r3=0: sum f^4 = 0, sum f^5 = a^2(1-a^2(r1-r2)^4)/(r1-r2)", tz.size() * na, opt,
        [&](uint64_t k) -> std::optional<Witness> {
            const CubicRoot& n = ns[tz[k / na]];
            const uint32_t a = static_cast<uint32_t>(1 + k % na);
            const auto s = form312_sums(c, n, a, 5);
            const uint32_t ae = x.up(a), d = E.sub(n.r1, n.r2), a2 = E.mul(ae, ae);
            const uint32_t expect = E.div(E.mul(a2, E.sub(1, E.mul(a2, E.pow(d, 4)))), d);
            if (s[3] == 0 && x.up(s[4]) == expect) return std::nullopt;
            return Witness{cubic_params(c, x, n, a), "0," + E.format(expect),
                           c.fmt(s[3]) + "," + E.format(x.up(s[4]))};
        }));

    // N = X^3 - X + b with Tr(b) != 0.
    std::vector<uint32_t> bs;
    for (uint32_t b = 0; b < c.q; ++b)
        if (!trace(FieldElement(c.F, b), 3).is_zero()) bs.push_back(b);
    auto artin = [&](uint32_t b) { return Polynomial(c.F, {b, T.neg(1), 0, 1}); };
    rep.checks.push_back(run_check("X - 1/(X^3-X+b): sum f^7 = 0, sum f^8 = 1", bs.size(), opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const RationalFunction f = RationalFunction::x(c.F) -
                                                                  RationalFunction(Polynomial(c.F, {1}), artin(bs[k]));
                                       const uint32_t s7 = closed_sum(f, 7), s8 = closed_sum(f, 8);
                                       if (s7 == 0 && s8 == 1) return std::nullopt;
                                       return Witness{{{"b", c.fmt(bs[k])}}, "0,1", c.fmt(s7) + "," + c.fmt(s8)};
                                   }));
    rep.checks.push_back(run_check("-X - 1/(X^3-X+b) and X + 1/(X^3-X+b) are PRs", bs.size(), opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const RationalFunction g = RationalFunction(Polynomial(c.F, {1}), artin(bs[k]));
                                       const RationalFunction x1 = RationalFunction::x(c.F);
                                       const bool m = is_pr_brute(-x1 - g), p = is_pr_brute(x1 + g);
                                       if (m && p) return std::nullopt;
                                       return Witness{{{"b", c.fmt(bs[k])}}, "PR,PR", pr_text(m) + "," + pr_text(p)};
                                   }));
    rep.checks.push_back(run_check(
        "difference quotient of X + 1/(X^3-X+b)", bs.size() * c.q * c.q, opt,
        [&](uint64_t k) -> std::optional<Witness> {
            const uint32_t b = bs[k / (uint64_t{c.q} * c.q)];
            const uint32_t xv = static_cast<uint32_t>(k / c.q % c.q), y = static_cast<uint32_t>(k % c.q);
            auto N = [&](uint32_t v) { return T.add(T.sub(T.mul(T.mul(v, v), v), v), b); };
            auto f = [&](uint32_t v) { return T.add(v, T.inv(N(v))); };
            const uint32_t cc = N(xv), xy = T.add(xv, y);
            const uint32_t poly = T.add(T.sub(T.sub(T.add(1, T.mul(cc, cc)), T.mul(cc, y)), T.mul(y, y)),
                                        T.mul(cc, T.mul(y, T.mul(y, y))));
            const uint32_t expect = T.div(T.mul(y, poly), T.mul(cc, N(xy)));
            const uint32_t got = T.sub(f(xy), f(xv));
            if (got == expect) return std::nullopt;
            return Witness{{{"b", c.fmt(b)}, {"x", c.fmt(xv)}, {"y", c.fmt(y)}}, c.fmt(expect), c.fmt(got)};
        }));
    return rep;
}

// ---- R3.3, R3.5, R4.6 -------------------------------------------------------

PRFamilySpec member(Family f, uint32_t q) {
    PRFamilySpec s;
    s.family = f;
    s.q = q;
    return s;
}

// Brute-force PR test over a list of family members.
void sweep_members(TheoremReport& rep, const std::vector<RationalFunction>& fs, const VerifyOptions& opt) {
    auto make = [&] {
        return [&](uint64_t k) {
            const bool pr = is_pr_brute(fs[k]);
            return Verdict{pr, !pr};
        };
    };
    auto describe = [&](uint64_t k) { return Witness{{{"f", fs[k].to_string()}}, "PR", "not PR"}; };
    VerifyOptions all = opt;
    all.budget = std::max<uint64_t>(opt.budget, fs.size());
    run_sweep(rep, fs.size(), {}, all, make, describe);
}

IdentityCheck one_class(const std::vector<RationalFunction>& fs) {
    const auto classes = equivalence_classes(fs);
    Witness w;
    if (classes.size() > 1) {
        w.params = {{"f", fs[classes[0][0]].to_string()}, {"g", fs[classes[1][0]].to_string()}};
        w.expected = "1 class";
        w.observed = std::to_string(classes.size()) + " classes";
    }
    return single_check("all members equivalent", classes.size() == 1, std::move(w));
}

TheoremReport verify_r33(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const Ext x(c.F, 2);
    std::vector<uint32_t> rs;
    std::vector<RationalFunction> fs;
    for (const auto& r : quadratic_roots(c, x)) {
        if (r.t != 1) continue;
        rs.push_back(r.r);
        PRFamilySpec s = member(Family::T33, c.q);
        s.r = x.E.element(r.r);
        fs.push_back(build_family(s));
    }
    sweep_members(rep, fs, opt);
    rep.checks.push_back(one_class(fs));
    rep.checks.push_back(run_check("f_r1(X+u) = f_r2(X) + u, u = r1 - r2", rs.size() * rs.size(), opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const size_t i = k / rs.size(), j = k % rs.size();
                                       const uint32_t ue = x.E.sub(rs[i], rs[j]);
                                       if (!x.in_base(ue))
                                           return Witness{{{"r1", x.E.format(rs[i])}, {"r2", x.E.format(rs[j])}},
                                                          "u in F_q", "u = " + x.E.format(ue)};
                                       const uint32_t u = x.down(ue);
                                       const RationalFunction lhs = compose(fs[i], MobiusTransform(c.F, 1, u, 0, 1));
                                       const RationalFunction rhs = fs[j] + RationalFunction::constant(c.F.element(u));
                                       if (lhs == rhs) return std::nullopt;
                                       return Witness{{{"r1", x.E.format(rs[i])}, {"r2", x.E.format(rs[j])}},
                                                      rhs.to_string(), lhs.to_string()};
                                   }));
    return rep;
}

TheoremReport verify_r35(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const Ext x(c.F, 2);
    const FiniteField& E = x.E;
    std::vector<uint32_t> rs;
    std::vector<RationalFunction> fs;
    for (uint32_t s : nonsquares(c)) {
        const uint32_t r = first_root(Polynomial(c.F, {c.T.neg(s), 0, 1}), E);
        PRFamilySpec spec = member(Family::T34, c.q);
        spec.r = E.element(r);
        spec.a = c.F.element(c.T.neg(c.T.inv(c.T.mul(c.F.from_int(4), s))));
        rs.push_back(r);
        fs.push_back(build_family(spec));
    }
    sweep_members(rep, fs, opt);
    rep.checks.push_back(one_class(fs));
    rep.checks.push_back(run_check("f_r1(uX) = f_r2(X)/u, u = r1/r2", rs.size() * rs.size(), opt,
                                   [&](uint64_t k) -> std::optional<Witness> {
                                       const size_t i = k / rs.size(), j = k % rs.size();
                                       const uint32_t ue = E.div(rs[i], rs[j]);
                                       const std::vector<std::pair<std::string, std::string>> ps = {
                                           {"r1", E.format(rs[i])}, {"r2", E.format(rs[j])}};
                                       if (!x.in_base(ue)) return Witness{ps, "u in F_q", "u = " + E.format(ue)};
                                       const uint32_t u = x.down(ue);
                                       const RationalFunction lhs = compose(fs[i], MobiusTransform(c.F, u, 0, 0, 1));
                                       const RationalFunction rhs =
                                           fs[j] * RationalFunction::constant(c.F.element(c.T.inv(u)));
                                       if (lhs == rhs) return std::nullopt;
                                       return Witness{ps, rhs.to_string(), lhs.to_string()};
                                   }));
    if (c.F.characteristic() == 3) {
        rep.checks.push_back(run_check(
            "char 3: f_r = -X^3/(r^2(X^2-r^2)), polynomial-equivalent, equivalent to r^2X^3-X", fs.size(), opt,
            [&](uint64_t k) -> std::optional<Witness> {
                const uint32_t r2 = x.down(E.mul(rs[k], rs[k]));
                const Polynomial den = Polynomial(c.F, {c.T.neg(r2), 0, 1}).scaled(r2);
                const RationalFunction form(Polynomial::monomial(c.F, c.T.neg(1), 3), den);
                const RationalFunction poly(Polynomial(c.F, {0, c.T.neg(1), 0, r2}));
                const bool eq = form == fs[k], pe = is_polynomial_equivalent(fs[k]);
                const bool ae = are_equivalent(fs[k], poly).has_value();
                if (eq && pe && ae) return std::nullopt;
                return Witness{{{"r", E.format(rs[k])}, {"f_r", fs[k].to_string()}}, "true,true,true",
                               std::string(eq ? "true" : "false") + "," + (pe ? "true" : "false") + "," +
                                   (ae ? "true" : "false")};
            }));
    }
    return rep;
}

TheoremReport verify_r46(const Ctx& c, const VerifyOptions& opt) {
    TheoremReport rep;
    const uint32_t p = c.F.characteristic();
    std::vector<uint32_t> ds;
    std::vector<RationalFunction> fs;
    for (uint32_t d = 0; d < c.q; ++d) {
        if (trace(FieldElement(c.F, d), p).is_zero()) continue;
        PRFamilySpec s = member(Family::Yuan, c.q);
        s.delta = c.F.element(d);
        ds.push_back(d);
        fs.push_back(build_family(s));
    }
    sweep_members(rep, fs, opt);
    rep.checks.push_back(one_class(fs));
    const Ext x(c.F, p);
    rep.checks.push_back(run_check(
        p == 2 ? "equals the T3.3 member with r a root of X^2+X+delta"
               : "equivalent to the T3.9 member (epsilon=-1) with r a root of X^3-X+delta",
        ds.size(), opt, [&](uint64_t k) -> std::optional<Witness> {
            const Polynomial den = Polynomial::monomial(c.F, 1, p) - Polynomial::x(c.F) + Polynomial(c.F, {ds[k]});
            PRFamilySpec s = member(p == 2 ? Family::T33 : Family::T39, c.q);
            s.r = x.E.element(first_root(den, x.E));
            s.epsilon = -1;
            const RationalFunction g = build_family(s);
            const bool ok = p == 2 ? g == fs[k] : are_equivalent(fs[k], g).has_value();
            if (ok) return std::nullopt;
            return Witness{{{"delta", c.fmt(ds[k])}, {"f", fs[k].to_string()}}, g.to_string(),
                           p == 2 ? "different" : "not equivalent"};
        }));
    return rep;
}

bool is_power_of(uint32_t q, uint32_t p, unsigned min_exp) {
    const FiniteField& F = FiniteField::of_order(q);
    return F.characteristic() == p && F.degree() >= min_exp;
}

}  // namespace

std::vector<std::string> theorem_ids() {
    return {"L3.2", "T3.3", "T3.4", "T3.5", "T3.6", "T3.7", "T3.8", "T3.9", "R3.3", "R3.5", "R4.6"};
}

TheoremReport verify_theorem(const std::string& id, uint32_t q, const VerifyOptions& opt) {
    const FiniteField& F = FiniteField::of_order(q);
    const uint32_t p = F.characteristic();
    auto require = [&](bool ok, const char* what) {
        if (!ok) throw DomainError(id + " needs " + what);
    };
    if (id == "T3.3" || id == "R3.3") require(p == 2, "q even");
    else if (id == "T3.4" || id == "R3.5") require(p != 2, "q odd");
    else if (id == "T3.5") require(is_power_of(q, 2, 5), "q = 2^n with n >= 5");
    else if (id == "T3.6") require(p != 2 && p != 3 && q > 7, "characteristic not 2 or 3 and q > 7");
    else if (id == "T3.7" || id == "T3.9") require(is_power_of(q, 3, 3), "q = 3^n with n >= 3");
    else if (id == "T3.8") require(p != 3 && q >= 5, "characteristic not 3 and q >= 5");
    else if (id == "R4.6") require(p == 2 || p == 3, "characteristic 2 or 3");
    else if (id != "L3.2") throw DomainError("unknown theorem id " + id);
    if (q > 1024) throw BudgetExceeded("theorem verification supports q <= 1024");

    const Ctx c(F);
    TheoremReport rep;
    if (id == "L3.2") rep = verify_l32(c, opt);
    else if (id == "T3.3") rep = verify_t33(c, opt);
    else if (id == "T3.4") rep = verify_t34(c, opt);
    else if (id == "T3.5") rep = verify_t35(c, opt);
    else if (id == "T3.6") rep = verify_t36(c, opt, false);
    else if (id == "T3.7") rep = verify_t36(c, opt, true);
    else if (id == "T3.8") rep = verify_t38(c, opt);
    else if (id == "T3.9") rep = verify_t39(c, opt);
    else if (id == "R3.3") rep = verify_r33(c, opt);
    else if (id == "R3.5") rep = verify_r35(c, opt);
    else rep = verify_r46(c, opt);
    rep.theorem = id;
    rep.q = q;
    rep.seed = opt.seed;
    return rep;
}

}  // namespace prfq
