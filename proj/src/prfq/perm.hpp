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

#ifndef PRFQ_PERM_HPP
#define PRFQ_PERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prfq/gf.hpp"
#include "prfq/ratfun.hpp"

namespace prfq {

bool is_pr_brute(const RationalFunction& f);

/// g = outer o f o inner with g(inf) = inf and no poles in F_q.
struct HermiteForm {
    RationalFunction g;
    MobiusTransform outer;
    MobiusTransform inner;
};

/// Returns f itself when it already qualifies. Otherwise picks the first
/// point eta (inf first, then field elements in order) whose image xi has
/// eta as its only preimage, and uses inner = eta + 1/X, outer = 1/(X - xi).
/// Throws DomainError when no such point exists.
HermiteForm hermite_form(const RationalFunction& f);

/// Hermite's criterion on hermite_form(f), with power sums taken in
/// increasing order and stopping at the first violation.
bool hermite_test(const RationalFunction& f);

enum class Family { T33, T34, T39, Yuan, Form32, Form33, Form36, Form312 };

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

/// Parameters live in the field where the family places them: r in F_{q^2}
/// or F_{q^3}, a and b in F_q (b in F_{q^2} for Form32), c in F_{q^2}.
struct PRFamilySpec {
    Family family;
    uint32_t q;
    std::optional<FieldElement> r, a, b, c, delta;
    int epsilon = -1;
};

/// The family member as a function over F_q. Throws DomainError when the
/// parameters violate the family's hypotheses.
RationalFunction build_family(const PRFamilySpec& spec);

struct Witness {
    std::vector<std::pair<std::string, std::string>> params;
    std::string expected;
    std::string observed;
};

/// A power-sum identity or structural claim checked on many instances.
struct IdentityCheck {
    std::string name;
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::vector<Witness> witnesses;  // first failures
    bool passed() const noexcept { return cases > 0 && failures == 0; }
};

struct TheoremReport {
    std::string theorem;
    uint32_t q = 0;
    uint64_t seed = 0;
    bool exhaustive = true;
    uint64_t space = 0;   // size of the parameter space
    uint64_t cases = 0;   // parameters examined
    uint64_t prs = 0;     // examined parameters giving a PR
    uint64_t failures = 0;
    std::vector<Witness> witnesses;  // first failures
    std::vector<IdentityCheck> checks;

    bool passed() const noexcept;
};

struct VerifyOptions {
    uint64_t budget = uint64_t{1} << 22;
    uint64_t samples = 10000;
    uint64_t seed = 1;
    unsigned jobs = 1;
    std::string data_dir;  // fixtures; empty means the default
};

/// Ids: L3.2, T3.3 .. T3.9, R3.3, R3.5, R4.6. Throws DomainError when q
/// does not meet the statement's hypotheses.
TheoremReport verify_theorem(const std::string& id, uint32_t q, const VerifyOptions& options = {});

std::vector<std::string> theorem_ids();

}  // namespace prfq

#endif
