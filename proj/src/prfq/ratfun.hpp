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

#ifndef PRFQ_RATFUN_HPP
#define PRFQ_RATFUN_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prfq/gf.hpp"
#include "prfq/poly.hpp"

namespace prfq {

/// A point of P^1(F_q) = F_q u {inf}.
class ProjectivePoint {
   public:
    static ProjectivePoint infinity(const FiniteField& field) { return ProjectivePoint(&field, field.order()); }
    static ProjectivePoint finite(const FieldElement& x) { return ProjectivePoint(x.field_ptr(), x.rep()); }
    /// Points are indexed 0..q-1 by element, q for infinity.
    static ProjectivePoint from_index(const FiniteField& field, uint32_t index);

    bool is_infinity() const noexcept { return index_ == field_->order(); }
    FieldElement value() const;
    uint32_t index() const noexcept { return index_; }
    const FiniteField& field() const noexcept { return *field_; }
    std::string to_string() const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) noexcept {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }

   private:
    ProjectivePoint(const FiniteField* f, uint32_t index) : field_(f), index_(index) {}
    const FiniteField* field_;
    uint32_t index_;
};

/// Reduced quotient P/Q with gcd(P, Q) = 1 and Q monic.
class RationalFunction {
   public:
    /// Normalises: divides out gcd(P, Q) and makes Q monic. Throws
    /// DomainError when Q = 0.
    RationalFunction(const Polynomial& num, const Polynomial& den);
    explicit RationalFunction(const Polynomial& poly);
    static RationalFunction x(const FiniteField& field);
    static RationalFunction constant(const FieldElement& c);

    const FiniteField& field() const noexcept { return num_.field(); }
    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    /// max(deg P, deg Q).
    int degree() const noexcept { return std::max(num_.degree(), den_.degree()); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    ProjectivePoint operator()(const ProjectivePoint& pt) const;
    /// Evaluation on point indices (q stands for infinity).
    uint32_t eval_index(uint32_t index) const noexcept;

    RationalFunction embed(const FiniteField& ext) const;
    RationalFunction restrict_to(const FiniteField& subfield) const;

    /// Canonical text: polynomial part plus proper fraction, e.g. "x^2+1/(x^2+x+1)".
    std::string to_string() const;
    /// Single fraction text "(P)/(Q)".
    std::string to_fraction_string() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction pow(unsigned e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

   private:
    struct Reduced {};
    RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    friend class MobiusTransform;

    Polynomial num_;
    Polynomial den_;
};

RationalFunction normalize(const Polynomial& num, const Polynomial& den);
/// f o g.
RationalFunction compose(const RationalFunction& f, const RationalFunction& g);

/// X -> (aX + b)/(cX + d), ad - bc != 0, scaled so the first nonzero entry
/// of (a, b, c, d) is 1.
class MobiusTransform {
   public:
    MobiusTransform(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d);
    MobiusTransform(const FiniteField& field, uint32_t a, uint32_t b, uint32_t c, uint32_t d);
    static MobiusTransform identity(const FiniteField& field) { return {field, 1, 0, 0, 1}; }

    const FiniteField& field() const noexcept { return *field_; }
    uint32_t a() const noexcept { return m_[0]; }
    uint32_t b() const noexcept { return m_[1]; }
    uint32_t c() const noexcept { return m_[2]; }
    uint32_t d() const noexcept { return m_[3]; }

    ProjectivePoint operator()(const ProjectivePoint& pt) const;
    uint32_t apply_index(uint32_t index) const noexcept;
    /// this o inner.
    MobiusTransform compose(const MobiusTransform& inner) const;
    MobiusTransform inverse() const;
    RationalFunction as_rational_function() const;
    std::string to_string() const;

    /// All q^3 - q elements in canonical order: lexicographic on (a, b, c, d).
    static std::vector<MobiusTransform> enumerate(const FiniteField& field);

    friend bool operator==(const MobiusTransform& x, const MobiusTransform& y) noexcept {
        return x.field_ == y.field_ && x.m_ == y.m_;
    }
    friend auto operator<=>(const MobiusTransform& x, const MobiusTransform& y) noexcept { return x.m_ <=> y.m_; }

   private:
    void canonicalize();
    const FiniteField* field_;
    std::array<uint32_t, 4> m_;
};

RationalFunction compose(const RationalFunction& f, const MobiusTransform& inner);
RationalFunction compose(const MobiusTransform& outer, const RationalFunction& f);

/// f = outer o g o inner.
struct EquivalenceWitness {
    MobiusTransform outer;
    MobiusTransform inner;
};

std::optional<EquivalenceWitness> are_equivalent(const RationalFunction& f, const RationalFunction& g);

/// True iff some outer o f o inner is a polynomial: some point of P^1(F_q)
/// is the only preimage of its image, with multiplicity deg f.
bool is_polynomial_equivalent(const RationalFunction& f);

/// Keys for equivalence classes. outer_key(f) is the reduced coefficient
/// vector of the unique phi o f taking the values 0, 1, inf at 0, 1, inf; it
/// exists when f(0), f(1), f(inf) are distinct.
using OrbitKey = std::vector<uint32_t>;

struct OuterNormal {
    OrbitKey key;
    MobiusTransform phi;  // key describes phi o f
};

std::optional<OuterNormal> outer_normal(const RationalFunction& f);

/// Calls visit(psi, normal) for every psi in canonical order for which
/// f o psi has distinct values at 0, 1, inf. Stops early when visit
/// returns false.
void for_each_inner_normal(const RationalFunction& f,
                           const std::function<bool(const MobiusTransform&, const OuterNormal&)>& visit);

/// Partition into equivalence classes. Class order follows first
/// appearance; members keep input order.
std::vector<std::vector<size_t>> equivalence_classes(const std::vector<RationalFunction>& functions);

}  // namespace prfq

#endif
