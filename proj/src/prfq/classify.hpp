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

#ifndef PRFQ_CLASSIFY_HPP
#define PRFQ_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prfq/ratfun.hpp"

namespace prfq {

enum class Form { Deg3NonPoly, Form36, Form312 };

/// Accepts "deg3-nonpoly", "form3.6", "form3.12", "3.6", "3.12".
std::optional<Form> form_from_name(const std::string& name);
std::string form_name(Form form);
int form_degree(Form form);

struct ClassifyOptions {
    uint64_t budget = uint64_t{1} << 23;  // max search space size
    unsigned jobs = 1;
};

struct ClassInfo {
    std::string representative;  // shortlex-smallest canonical text
    uint64_t members = 0;        // PRs of the sweep in this class
};

struct ClassificationReport {
    uint32_t q = 0;
    int degree = 0;
    Form form = Form::Deg3NonPoly;
    uint64_t search_space_size = 0;
    uint64_t pr_count = 0;
    uint64_t polynomial_equivalent = 0;  // PRs equivalent to a polynomial (dropped in degree 3)
    std::vector<ClassInfo> classes;      // sorted by representative

    uint64_t class_count() const noexcept { return classes.size(); }
};

/// Sweeps the normal form exhaustively:
///   Deg3NonPoly  X + (cX + d)/N,           N monic irreducible quadratic
///   Form36       aX^2 + bX + (cX + d)/N,   N monic irreducible quadratic
///   Form312      aX + N'/N,                N monic irreducible cubic
/// with a != 0 and (c, d) != (0, 0). For degree 3, PRs equivalent to a
/// polynomial are dropped. The PRs are reduced by equivalence. Throws
/// BudgetExceeded.
ClassificationReport classify(uint32_t q, int degree, Form form, const ClassifyOptions& options = {});

/// Every reduced P/Q of the given degree with nonconstant monic Q over F_q
/// (q <= 4), reduced as above. The report's form field is not meaningful.
ClassificationReport classify_all(uint32_t q, int degree, const ClassifyOptions& options = {});

struct GoldenEntry {
    std::string text;            // as stored
    std::string canonical;       // parsed and reformatted
    bool is_pr = false;
    std::optional<size_t> class_index;
    std::string outer, inner;    // representative = outer o golden o inner
};

struct GoldenComparison {
    std::string path;
    std::vector<GoldenEntry> entries;
    std::vector<int> class_hits;  // golden entries matching each class
    bool passed() const;
};

/// <data_dir>/golden/v1/<form>_q<q>.txt; an empty data_dir means the default.
std::string golden_path(uint32_t q, Form form, const std::string& data_dir);
/// Reads the golden list for (q, form); throws Error when missing.
std::vector<std::string> load_golden(uint32_t q, Form form, const std::string& data_dir);
GoldenComparison compare_golden(const ClassificationReport& report, const std::string& data_dir);

}  // namespace prfq

#endif
