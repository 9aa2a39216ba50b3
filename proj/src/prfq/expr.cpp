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

#include "prfq/expr.hpp"

#include <cctype>

#include "prfq/errors.hpp"

namespace prfq {

namespace {

class Parser {
   public:
    explicit Parser(std::string_view s) : s_(s) {}

    std::unique_ptr<Expr> parse() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    int peek() {
        skip();
        return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
    }

    static std::unique_ptr<Expr> node(Expr::Kind k, std::unique_ptr<Expr> l, std::unique_ptr<Expr> r) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    std::unique_ptr<Expr> expr() {
        auto e = term();
        for (int c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            e = node(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, std::move(e), term());
        }
        return e;
    }

    bool starts_base(int c) const { return c == '(' || std::isalnum(c); }

    std::unique_ptr<Expr> term() {
        auto e = unary();
        for (;;) {
            const int c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                e = node(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, std::move(e), unary());
            } else if (c >= 0 && starts_base(c)) {
                e = node(Expr::Kind::Mul, std::move(e), factor());
            } else {
                return e;
            }
        }
    }

    std::unique_ptr<Expr> unary() {
        if (peek() == '-') {
            ++pos_;
            return node(Expr::Kind::Neg, unary(), nullptr);
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return factor();
    }

    std::unique_ptr<Expr> factor() {
        auto e = base();
        if (peek() == '^') {
            ++pos_;
            skip();
            const size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 6) fail("exponent too large");
            auto p = node(Expr::Kind::Pow, std::move(e), nullptr);
            p->exponent = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
            return p;
        }
        return e;
    }

    std::unique_ptr<Expr> base() {
        const int c = peek();
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        auto e = std::make_unique<Expr>();
        const size_t start = pos_;
        if (c >= 0 && std::isdigit(c)) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            e->kind = Expr::Kind::Number;
        } else if (c >= 0 && std::isalpha(c)) {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            e->kind = Expr::Kind::Identifier;
        } else {
            fail(c < 0 ? "unexpected end of input" : "unexpected character");
        }
        e->text = std::string(s_.substr(start, pos_ - start));
        return e;
    }

    std::string_view s_;
    size_t pos_ = 0;
};

uint32_t reduce_decimal(const std::string& digits, const FiniteField& F) {
    uint64_t v = 0;
    const uint64_t p = F.characteristic();
    for (char ch : digits) v = (v * 10 + static_cast<uint64_t>(ch - '0')) % p;
    return F.from_int(static_cast<int64_t>(v));
}

template <class T, class Leaf>
T evaluate(const Expr& e, const Leaf& leaf) {
    switch (e.kind) {
        case Expr::Kind::Number:
        case Expr::Kind::Identifier:
            return leaf(e);
        case Expr::Kind::Add:
            return evaluate<T>(*e.lhs, leaf) + evaluate<T>(*e.rhs, leaf);
        case Expr::Kind::Sub:
            return evaluate<T>(*e.lhs, leaf) - evaluate<T>(*e.rhs, leaf);
        case Expr::Kind::Mul:
            return evaluate<T>(*e.lhs, leaf) * evaluate<T>(*e.rhs, leaf);
        case Expr::Kind::Div:
            return evaluate<T>(*e.lhs, leaf) / evaluate<T>(*e.rhs, leaf);
        case Expr::Kind::Neg:
            return -evaluate<T>(*e.lhs, leaf);
        case Expr::Kind::Pow:
            return evaluate<T>(*e.lhs, leaf).pow(e.exponent);
    }
    throw ParseError("malformed expression");
}

uint32_t generator_of(const FiniteField& F) {
    if (F.is_prime_field()) throw ParseError("generator u is undefined in the prime field F_" + F.descriptor());
    return F.generator();
}

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text) { return Parser(text).parse(); }

RationalFunction parse_rational_function(std::string_view text, const FiniteField& F) {
    auto e = parse_expression(text);
    auto leaf = [&](const Expr& n) -> RationalFunction {
        if (n.kind == Expr::Kind::Number)
            return RationalFunction::constant(FieldElement(F, reduce_decimal(n.text, F)));
        if (n.text == "x" || n.text == "X") return RationalFunction::x(F);
        if (n.text == "u") return RationalFunction::constant(FieldElement(F, generator_of(F)));
        throw ParseError("unknown identifier '" + n.text + "'");
    };
    return evaluate<RationalFunction>(*e, leaf);
}

FieldElement parse_field_element(std::string_view text, const FiniteField& F) {
    auto e = parse_expression(text);
    auto leaf = [&](const Expr& n) -> FieldElement {
        if (n.kind == Expr::Kind::Number) return FieldElement(F, reduce_decimal(n.text, F));
        if (n.text == "u") return FieldElement(F, generator_of(F));
        throw ParseError("unknown identifier '" + n.text + "'");
    };
    return evaluate<FieldElement>(*e, leaf);
}

}  // namespace prfq
