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

#ifndef PRFQ_REPRODUCE_HPP
#define PRFQ_REPRODUCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prfq/perm.hpp"
#include "prfq/ratfun.hpp"

namespace prfq {

struct CheckItem {
    std::string label;
    bool passed = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0;
    std::vector<CheckItem> items;
};

struct PaperCheckOptions {
    unsigned jobs = 1;
    uint64_t seed = 1;
    std::string data_dir;  // empty means the default
};

constexpr int kCriteria = 9;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const PaperCheckOptions& options = {});

struct PaperCheckResult {
    std::vector<CriterionResult> criteria;
    bool passed = false;
    double seconds = 0;
};

/// Runs the given criteria (all when empty) in order. With fail_fast it
/// stops after the first failing criterion.
PaperCheckResult paper_check(const PaperCheckOptions& options, const std::vector<int>& ids = {},
                             bool fail_fast = false,
                             const std::function<void(const CriterionResult&)>& progress = {});

struct ResultantCheck {
    std::string name;      // "Res(h1,h2;r1)"
    std::string computed;  // graded-lex text
    std::string expected;
    bool exact = false;      // computed == expected
    bool up_to_sign = false; // computed == +-expected
};

std::vector<ResultantCheck> check_resultants(const std::string& data_dir);

/// g = outer o f o inner with g a polynomial, when one exists.
struct PolynomialWitness {
    RationalFunction g;
    MobiusTransform outer;
    MobiusTransform inner;
};
std::optional<PolynomialWitness> polynomial_witness(const RationalFunction& f);

}  // namespace prfq

#endif
