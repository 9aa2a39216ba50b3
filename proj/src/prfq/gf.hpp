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

#ifndef PRFQ_GF_HPP
#define PRFQ_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace prfq {

class FieldElement;

/// Largest supported field order. Every degree <= 4 denominator over every
/// q <= 64 splits inside this bound.
inline constexpr uint64_t kFieldEnvelope = uint64_t{1} << 24;

/// Fields up to this order get log/antilog tables; larger ones multiply
/// residue polynomials directly.
inline constexpr uint64_t kTableThreshold = uint64_t{1} << 20;

bool is_prime(uint64_t n) noexcept;

/// F_{p^n} realised as F_p[u]/(modulus). Elements are packed as the base-p
/// integer sum c_i p^i of their residue coefficients, so the packed value is
/// also the canonical element order.
///
/// Instances are interned and immutable; obtain them through get(),
/// of_order() or with_modulus(). References stay valid for the lifetime of
/// the process.
class FiniteField {
   public:
    /// Canonical field: the modulus is the monic irreducible of degree n
    /// whose low coefficients (c_0..c_{n-1}), read base p, are minimal.
    static const FiniteField& get(uint32_t p, uint32_t n);
    static const FiniteField& of_order(uint64_t q);
    /// Field with an explicit monic irreducible modulus (constant term first).
    static const FiniteField& with_modulus(uint32_t p, std::vector<uint32_t> modulus);
    /// Parses "p^n" or a plain order such as "16".
    static const FiniteField& from_descriptor(const std::string& text);

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;
    ~FiniteField();

    uint32_t characteristic() const noexcept { return p_; }
    uint32_t degree() const noexcept { return n_; }
    uint32_t order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return n_ == 1; }
    bool is_canonical() const noexcept { return canonical_; }
    /// Monic modulus, constant term first, length n + 1.
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }
    std::string descriptor() const;

    uint32_t add(uint32_t a, uint32_t b) const noexcept;
    uint32_t sub(uint32_t a, uint32_t b) const noexcept { return add(a, neg(b)); }
    uint32_t neg(uint32_t a) const noexcept;
    uint32_t mul(uint32_t a, uint32_t b) const noexcept;
    /// Throws DomainError on zero.
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const noexcept;
    /// a^(p^k), i.e. k applications of the absolute Frobenius.
    uint32_t frobenius_power(uint32_t a, uint64_t k) const noexcept;

    uint32_t from_int(int64_t v) const noexcept;
    /// Residue class of u. Equal to 0 in a prime field (modulus X).
    uint32_t generator() const noexcept { return n_ == 1 ? 0 : p_; }
    /// Smallest element of multiplicative order q - 1.
    uint32_t primitive() const noexcept { return primitive_; }
    uint32_t digit(uint32_t a, unsigned i) const noexcept;

    FieldElement element(uint32_t rep) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;
    FieldElement from_integer(int64_t v) const;

    /// Text form over the generator u, highest power first: "2u^2+u+1", "0".
    std::string format(uint32_t a) const;

   private:
    FiniteField(uint32_t p, std::vector<uint32_t> modulus, bool canonical);

    uint32_t slow_mul(uint32_t a, uint32_t b) const noexcept;
    uint32_t slow_pow(uint32_t a, uint64_t e) const noexcept;
    uint32_t digit_add(uint32_t a, uint32_t b) const noexcept;
    void build_tables();
    void find_primitive();

    uint32_t p_;
    uint32_t n_;
    uint32_t q_;
    bool canonical_;
    std::vector<uint32_t> modulus_;
    std::vector<uint64_t> pow_p_;  // p^i for i <= n
    uint32_t primitive_ = 1;
    bool tables_ = false;
    std::vector<uint32_t> exp_;  // 2(q-1) entries
    std::vector<uint32_t> log_;
    std::vector<uint32_t> add_table_;  // q*q, small odd fields only
    std::vector<uint32_t> neg_table_;
};

/// A value of F_{p^n} bound to its field.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const FiniteField& field, uint32_t rep);

    const FiniteField& field() const { return *field_; }
    const FiniteField* field_ptr() const noexcept { return field_; }
    uint32_t rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_ == 0; }
    bool is_one() const noexcept { return rep_ == 1; }
    /// Residue coefficients c_0..c_{n-1}.
    std::vector<uint32_t> coefficients() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement pow(uint64_t e) const;
    FieldElement inverse() const;
    std::string to_string() const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.rep_ == b.rep_;
    }
    /// Canonical order; elements of different fields are unordered.
    friend std::partial_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
        if (a.field_ != b.field_) return std::partial_ordering::unordered;
        return a.rep_ <=> b.rep_;
    }

   private:
    void check_same(const FieldElement& o) const;

    const FiniteField* field_ = nullptr;
    uint32_t rep_ = 0;
};

/// a^(p^(e*d)) where d is the degree of the subfield the Frobenius is taken
/// over. Throws DomainError when d does not divide the degree of a's field.
FieldElement frobenius(const FieldElement& a, uint64_t e, unsigned subfield_degree);
FieldElement frobenius(const FieldElement& a, uint64_t e, const FiniteField& over);

/// Tr_{F_{p^n}/F_{p^d}}(a) where subfield_order = p^d; the result is in the
/// subfield but returned in a's field.
FieldElement trace(const FieldElement& a, uint64_t subfield_order);

bool is_square(const FieldElement& a);

/// True iff a lies in the subfield of order p^d of its field.
bool in_subfield(const FieldElement& a, unsigned subfield_degree);

/// A fixed F_p-linear field embedding between two fields of the same
/// characteristic. The source generator goes to the smallest root of the
/// source modulus in the target.
class Embedding {
   public:
    static const Embedding& between(const FiniteField& from, const FiniteField& to);

    const FiniteField& source() const noexcept { return *from_; }
    const FiniteField& target() const noexcept { return *to_; }
    uint32_t apply(uint32_t a) const noexcept;
    /// Inverse on the image; throws DomainError if b is not in the image.
    uint32_t project(uint32_t b) const;
    bool contains(uint32_t b) const noexcept;
    /// Image of the source generator u.
    uint32_t generator_image() const noexcept { return images_.size() > 1 ? images_[1] : 0; }

   private:
    Embedding(const FiniteField& from, const FiniteField& to);

    const FiniteField* from_;
    const FiniteField* to_;
    std::vector<uint32_t> images_;  // image of u^i
    std::vector<uint32_t> table_;   // full table for small sources
    std::vector<unsigned> pivot_rows_;
    std::vector<std::vector<uint32_t>> solve_;  // inverse of the pivot submatrix
};

FieldElement embed(const FieldElement& a, const FiniteField& target);
/// Inverse of embed on its image.
FieldElement project(const FieldElement& a, const FiniteField& subfield);

}  // namespace prfq

#endif
