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

#ifndef PRFQ_EXPR_HPP
#define PRFQ_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

#include "prfq/gf.hpp"
#include "prfq/ratfun.hpp"

namespace prfq {

/// Parsed arithmetic expression.
///
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/')? unary)*      juxtaposition multiplies
///   unary  := '-' unary | factor
///   factor := base ('^' uint)?
///   base   := ident | uint | '(' expr ')'
///
/// Identifiers are a letter followed by letters, digits or '_'.
struct Expr {
    enum class Kind { Number, Identifier, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    std::string text;       // digits or identifier name
    unsigned exponent = 0;  // Pow only
    std::unique_ptr<Expr> lhs, rhs;
};

std::unique_ptr<Expr> parse_expression(std::string_view text);

/// Rational function over `field` in the variable x (or X); u names the
/// generator of a non-prime field.
RationalFunction parse_rational_function(std::string_view text, const FiniteField& field);

/// Field element over the generator u.
FieldElement parse_field_element(std::string_view text, const FiniteField& field);

}  // namespace prfq

#endif
