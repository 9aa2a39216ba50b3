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

#ifndef PRFQ_POLY_HPP
#define PRFQ_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "prfq/gf.hpp"

namespace prfq {

/// Dense univariate polynomial over a finite field, constant term first,
/// with no trailing zero coefficients.
class Polynomial {
   public:
    explicit Polynomial(const FiniteField& field) : field_(&field) {}
    Polynomial(const FiniteField& field, std::vector<uint32_t> coeffs);
    /// Integer coefficients reduced into the prime subfield.
    static Polynomial from_ints(const FiniteField& field, std::initializer_list<int64_t> coeffs);
    static Polynomial constant(const FieldElement& c);
    static Polynomial monomial(const FiniteField& field, uint32_t c, unsigned k);
    static Polynomial x(const FiniteField& field) { return monomial(field, 1, 1); }
    /// X - r.
    static Polynomial linear(const FieldElement& r);

    const FiniteField& field() const noexcept { return *field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    uint32_t operator[](size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    FieldElement coefficient(size_t i) const { return FieldElement(*field_, (*this)[i]); }
    uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::span<const uint32_t> coeffs() const noexcept { return c_; }

    uint32_t eval(uint32_t x) const noexcept;
    FieldElement operator()(const FieldElement& x) const;

    Polynomial monic() const;
    Polynomial scaled(uint32_t c) const;
    Polynomial pow(unsigned e) const;
    Polynomial derivative() const;
    /// Coefficient-wise image in an extension field.
    Polynomial embed(const FiniteField& ext) const;
    /// Coefficient-wise projection into a subfield; throws DomainError if a
    /// coefficient lies outside it.
    Polynomial restrict_to(const FiniteField& subfield) const;

    /// Compact text over variable `var`, highest degree first: "x^2+(u+1)*x+u".
    std::string to_string(char var = 'x') const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

   private:
    void trim() noexcept;
    void check_same(const Polynomial& o) const;

    const FiniteField* field_;
    std::vector<uint32_t> c_;
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

DivRem divrem(const Polynomial& f, const Polynomial& g);
/// f / g, throwing DomainError unless g divides f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
Polynomial powmod(const Polynomial& base, uint64_t e, const Polynomial& m);

bool is_irreducible(const Polynomial& f);
/// Distinct degrees of the irreducible factors of f, ascending.
std::vector<unsigned> factor_degrees(const Polynomial& f);
/// Degree over f's field of the smallest extension splitting f.
unsigned splitting_degree(const Polynomial& f);
const FiniteField& splitting_field(const Polynomial& f);

struct Root {
    FieldElement value;
    unsigned multiplicity;
};

/// Roots of f lying in ext (an extension of f's field), ascending, with
/// multiplicities found by repeated exact division.
std::vector<Root> roots_over(const Polynomial& f, const FiniteField& ext);

/// First `count` coefficients of f expanded in powers of (X - r), by
/// repeated synthetic division.
std::vector<uint32_t> taylor_coefficients(const Polynomial& f, uint32_t r, size_t count);

}  // namespace prfq

#endif
