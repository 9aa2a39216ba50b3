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

#include "prfq/symident.hpp"

#include <algorithm>
#include <boost/crc.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "prfq/errors.hpp"
#include "prfq/expr.hpp"

#ifndef PRFQ_DEFAULT_DATA_DIR
#define PRFQ_DEFAULT_DATA_DIR "data"
#endif

namespace prfq {

namespace {

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

unsigned degree_of(const MultiPoly::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

// Graded order on monomials, larger first.
bool graded_greater(const MultiPoly::Monomial& x, const MultiPoly::Monomial& y) {
    const unsigned dx = degree_of(x), dy = degree_of(y);
    if (dx != dy) return dx > dy;
    return x > y;
}

}  // namespace

MultiPoly MultiPoly::constant(const BigInt& c) {
    MultiPoly p;
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p({name});
    p.add_term({1}, 1);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) throw DomainError("variable " + vars_[i] + " missing from target list");
        pos[i] = static_cast<size_t>(it - vars.begin());
    }
    MultiPoly out(vars);
    for (const auto& [m, c] : terms_) {
        Monomial e(vars.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) e[pos[i]] = m[i];
        out.terms_.emplace(std::move(e), c);
    }
    return out;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, degree_of(t.first));
    return d;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    const size_t i = static_cast<size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first[i]);
    return d;
}

MultiPoly MultiPoly::coefficient_in(const std::string& var, unsigned k) const {
    MultiPoly out(vars_);
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return k == 0 ? *this : out;
    const size_t i = static_cast<size_t>(it - vars_.begin());
    for (const auto& [m, c] : terms_) {
        if (m[i] != k) continue;
        Monomial e = m;
        e[i] = 0;
        out.terms_.emplace(std::move(e), c);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, BigInt>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return graded_greater(x->first, y->first); });
    std::string out;
    for (auto* t : order) {
        const BigInt& c = t->second;
        std::string mono;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars_[i];
            if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
        }
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        std::string piece;
        if (mono.empty())
            piece = mag.str();
        else
            piece = mag == 1 ? mono : mag.str() + "*" + mono;
        if (c < 0)
            out += "-" + piece;
        else
            out += (out.empty() ? "" : "+") + piece;
    }
    return out;
}

FieldElement MultiPoly::instantiate(const std::map<std::string, FieldElement>& assignment, const FiniteField& F) const {
    std::vector<uint32_t> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it == assignment.end()) throw DomainError("no value for variable " + vars_[i]);
        if (it->second.field_ptr() != &F) throw FieldMismatch();
        vals[i] = it->second.rep();
    }
    const BigInt p = F.characteristic();
    uint32_t acc = 0;
    for (const auto& [m, c] : terms_) {
        BigInt r = c % p;
        if (r < 0) r += p;
        uint32_t v = F.from_int(static_cast<int64_t>(r));
        for (size_t i = 0; i < m.size() && v; ++i)
            if (m[i]) v = F.mul(v, F.pow(vals[i], m[i]));
        acc = F.add(acc, v);
    }
    return FieldElement(F, acc);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merged(a.vars_, b.vars_);
    MultiPoly r = a.with_vars(vars);
    for (const auto& [m, c] : b.with_vars(vars).terms_) r.add_term(m, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merged(a.vars_, b.vars_);
    const MultiPoly x = a.with_vars(vars), y = b.with_vars(vars);
    MultiPoly r(vars);
    MultiPoly::Monomial e(vars.size());
    for (const auto& [m1, c1] : x.terms_)
        for (const auto& [m2, c2] : y.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = m1[i] + m2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const auto vars = merged(a.vars_, b.vars_);
    MultiPoly rem = a.with_vars(vars);
    const MultiPoly d = b.with_vars(vars);
    // Lexicographic leading terms: the map's last entry.
    const auto& [dm, dc] = *d.terms_.rbegin();
    MultiPoly quo(vars);
    while (!rem.is_zero()) {
        const auto [rm, rc] = *rem.terms_.rbegin();
        MultiPoly::Monomial e(vars.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (rm[i] < dm[i]) throw DomainError("inexact multivariate division");
            e[i] = rm[i] - dm[i];
        }
        if (rc % dc != 0) throw DomainError("inexact multivariate division");
        const BigInt c = rc / dc;
        quo.add_term(e, c);
        for (const auto& [m, v] : d.terms_) {
            MultiPoly::Monomial s(vars.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = m[i] + e[i];
            rem.add_term(s, -c * v);
        }
    }
    return quo;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(1).with_vars(vars_);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merged(a.vars_, b.vars_);
    return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
}

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& order) {
    auto expr = parse_expression(text);
    std::vector<std::string> vars = order;
    auto collect = [&](auto&& self, const Expr& e) -> void {
        if (e.kind == Expr::Kind::Identifier && std::find(vars.begin(), vars.end(), e.text) == vars.end())
            vars.push_back(e.text);
        if (e.lhs) self(self, *e.lhs);
        if (e.rhs) self(self, *e.rhs);
    };
    collect(collect, *expr);
    auto eval = [&](auto&& self, const Expr& e) -> MultiPoly {
        switch (e.kind) {
            case Expr::Kind::Number:
                return constant(BigInt(e.text));
            case Expr::Kind::Identifier:
                return variable(e.text);
            case Expr::Kind::Add:
                return self(self, *e.lhs) + self(self, *e.rhs);
            case Expr::Kind::Sub:
                return self(self, *e.lhs) - self(self, *e.rhs);
            case Expr::Kind::Mul:
                return self(self, *e.lhs) * self(self, *e.rhs);
            case Expr::Kind::Div:
                return self(self, *e.lhs) / self(self, *e.rhs);
            case Expr::Kind::Neg:
                return -self(self, *e.lhs);
            case Expr::Kind::Pow:
                return self(self, *e.lhs).pow(e.exponent);
        }
        throw ParseError("malformed expression");
    };
    return eval(eval, *expr).with_vars(vars);
}

namespace {

using Matrix = std::vector<std::vector<MultiPoly>>;

Matrix sylvester(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    const unsigned m = f.degree_in(var), n = g.degree_in(var);
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
    if (m == 0 || n == 0) throw DomainError("resultant needs positive degree in " + var);
    const auto vars = merged(f.vars(), g.vars());
    const size_t size = m + n;
    Matrix M(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k <= m; ++k) M[i][i + k] = f.coefficient_in(var, m - k).with_vars(vars);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned k = 0; k <= n; ++k) M[n + i][i + k] = g.coefficient_in(var, n - k).with_vars(vars);
    return M;
}

MultiPoly cofactor_det(const Matrix& M, std::vector<size_t>& cols, size_t row) {
    const size_t n = M.size();
    if (row == n) return MultiPoly::constant(1);
    MultiPoly total = MultiPoly::constant(0);
    int sign = 1;
    for (size_t i = 0; i < cols.size(); ++i) {
        const size_t c = cols[i];
        if (!M[row][c].is_zero()) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
            MultiPoly minor = cofactor_det(M, cols, row + 1);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
            const MultiPoly t = M[row][c] * minor;
            total = sign > 0 ? total + t : total - t;
        }
        sign = -sign;
    }
    return total;
}

}  // namespace

MultiPoly resultant_wrt(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    Matrix M = sylvester(f, g, var);
    const size_t n = M.size();
    const auto vars = M[0][0].vars();
    MultiPoly prev = MultiPoly::constant(1).with_vars(vars);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t i = k + 1;
            while (i < n && M[i][k].is_zero()) ++i;
            if (i == n) return MultiPoly(vars);
            std::swap(M[k], M[i]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            M[i][k] = MultiPoly(vars);
        }
        prev = M[k][k];
    }
    return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

MultiPoly resultant_cofactor(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    const Matrix M = sylvester(f, g, var);
    std::vector<size_t> cols(M.size());
    std::iota(cols.begin(), cols.end(), 0);
    return cofactor_det(M, cols, 0).with_vars(M[0][0].vars());
}

std::string fixture_checksum(const MultiPoly& f) {
    boost::crc_32_type crc;
    const std::string s = f.to_string();
    crc.process_bytes(s.data(), s.size());
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
    return buf;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("PRFQ_DATA_DIR"); env && *env) return env;
    return PRFQ_DEFAULT_DATA_DIR;
}

MultiPoly load_fixture(const std::string& name, const std::string& data_dir) {
    const std::string dir = (data_dir.empty() ? default_data_dir() : data_dir) + "/fixtures/v1/";
    std::ifstream in(dir + name + ".txt");
    if (!in) throw IoError("cannot open fixture " + dir + name + ".txt");
    std::vector<std::string> vars;
    std::string body, line;
    while (std::getline(in, line)) {
        if (line.rfind("# vars:", 0) == 0) {
            std::istringstream ss(line.substr(7));
            for (std::string v; ss >> v;) vars.push_back(v);
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        body += line;
    }
    MultiPoly f = MultiPoly::parse(body, vars);

    std::ifstream sums(dir + "CHECKSUMS");
    while (std::getline(sums, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string n, sum;
        if (!(ss >> n >> sum) || n != name) continue;
        if (sum != fixture_checksum(f)) throw IoError("checksum mismatch for fixture " + name);
        return f;
    }
    throw IoError("no checksum recorded for fixture " + name);
}

}  // namespace prfq
