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

#ifndef PRFQ_SYMIDENT_HPP
#define PRFQ_SYMIDENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "prfq/gf.hpp"

namespace prfq {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in named variables with integer coefficients.
class MultiPoly {
   public:
    using Monomial = std::vector<unsigned>;  // exponents, aligned with vars()

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    static MultiPoly constant(const BigInt& c);
    static MultiPoly variable(const std::string& name);
    /// Parses integer-coefficient expressions; `order` fixes the variable
    /// order (names not listed are appended in order of appearance).
    static MultiPoly parse(std::string_view text, const std::vector<std::string>& order = {});

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned total_degree() const;
    unsigned degree_in(const std::string& var) const;
    /// Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coefficient_in(const std::string& var, unsigned k) const;
    /// Same polynomial over a variable list containing vars().
    MultiPoly with_vars(const std::vector<std::string>& vars) const;

    /// Graded lexicographic order (by total degree, then exponents in
    /// variable order), largest term first: "r1^2+r1*r2+r2^2".
    std::string to_string() const;

    /// Coefficients are reduced mod the characteristic.
    FieldElement instantiate(const std::map<std::string, FieldElement>& assignment, const FiniteField& field) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    /// Exact quotient; throws DomainError if b does not divide a.
    friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b);
    MultiPoly pow(unsigned e) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

   private:
    void add_term(const Monomial& m, const BigInt& c);

    std::vector<std::string> vars_;
    std::map<Monomial, BigInt> terms_;
};

/// Determinant of the Sylvester matrix of f and g in var (rows of f first),
/// by fraction-free Bareiss elimination.
MultiPoly resultant_wrt(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Same determinant by cofactor expansion; exponential, for small cases.
MultiPoly resultant_cofactor(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Named fixture polynomials (h1, h2, h3, h) read from
/// <data_dir>/fixtures/v1 and checked against the stored checksums.
MultiPoly load_fixture(const std::string& name, const std::string& data_dir);
/// CRC-32 of the canonical serialization, as 8 hex digits.
std::string fixture_checksum(const MultiPoly& f);
/// PRFQ_DATA_DIR if set, otherwise the configured install location.
std::string default_data_dir();

}  // namespace prfq

#endif
