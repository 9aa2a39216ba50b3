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

#ifndef PRFQ_CARLITZ_HPP
#define PRFQ_CARLITZ_HPP

#include <vector>

#include "prfq/gf.hpp"
#include "prfq/poly.hpp"
#include "prfq/ratfun.hpp"

namespace prfq {

/// Exact check of sum_{x in F_q} 1/(x - X)^k = 1/(X^q - X)^k in F_q(X).
/// Throws DomainError unless 1 <= k <= q.
bool carlitz_identity_check(const FiniteField& field, unsigned k);

struct PoleTerm {
    FieldElement root;  // in the splitting field
    unsigned order;
    FieldElement coefficient;
};

/// f^s = sum_i a_i X^i + sum b / (X - r)^k.
struct PartialFractionDecomposition {
    const FiniteField* base = nullptr;
    const FiniteField* ext = nullptr;
    unsigned power = 0;
    Polynomial poly_part;          // over base
    std::vector<PoleTerm> poles;   // by root, then ascending order; zero coefficients omitted

    /// The sum of all terms, over ext.
    RationalFunction recombine() const;
};

/// Throws DomainError if den(f) has a root in F_q or s = 0.
PartialFractionDecomposition partial_fractions(const RationalFunction& f, unsigned s);

/// sum_{x in F_q} f(x)^s from the decomposition and the Carlitz identity.
/// Throws FormulaOutOfRange when some pole order exceeds q.
FieldElement power_sum_closed(const RationalFunction& f, unsigned s);

/// Literal enumeration. Throws DomainError on a pole in F_q.
FieldElement power_sum_brute(const RationalFunction& f, unsigned s);

/// Closed form when applicable, enumeration otherwise.
FieldElement power_sum(const RationalFunction& f, unsigned s);

}  // namespace prfq

#endif
