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

#include "prfq/sweep.hpp"

#include "prfq/errors.hpp"

namespace prfq::detail {

TableField::TableField(const FiniteField& F) : field_(&F), q_(F.order()) {
    if (q_ > 1024) throw DomainError("table field too large");
    add_.resize(size_t{q_} * q_);
    mul_.resize(size_t{q_} * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) {
        neg_[a] = static_cast<uint16_t>(F.neg(a));
        inv_[a] = a ? static_cast<uint16_t>(F.inv(a)) : 0;
        for (uint32_t b = 0; b < q_; ++b) {
            add_[a * q_ + b] = static_cast<uint16_t>(F.add(a, b));
            mul_[a * q_ + b] = static_cast<uint16_t>(F.mul(a, b));
        }
    }
}

std::vector<Quadratic> irreducible_quadratics(const TableField& T) {
    const uint32_t q = T.q();
    std::vector<uint8_t> has_root(size_t{q} * q, 0);
    for (uint32_t r = 0; r < q; ++r)
        for (uint32_t s = r; s < q; ++s)
            // (X - r)(X - s)
            has_root[T.neg(T.add(r, s)) * q + T.mul(r, s)] = 1;
    std::vector<Quadratic> out;
    for (uint32_t c1 = 0; c1 < q; ++c1)
        for (uint32_t c0 = 0; c0 < q; ++c0)
            if (!has_root[c1 * q + c0]) out.push_back({c0, c1});
    return out;
}

std::vector<Cubic> irreducible_cubics(const TableField& T) {
    const uint32_t q = T.q();
    std::vector<Cubic> out;
    for (uint32_t c2 = 0; c2 < q; ++c2)
        for (uint32_t c1 = 0; c1 < q; ++c1)
            for (uint32_t c0 = 0; c0 < q; ++c0) {
                bool root = false;
                for (uint32_t x = 0; x < q && !root; ++x)
                    root = T.add(T.mul(T.add(T.mul(T.add(x, c2), x), c1), x), c0) == 0;
                if (!root) out.push_back({c0, c1, c2});
            }
    return out;
}

std::vector<uint32_t> power_sums(const TableField& T, const std::vector<uint32_t>& values, unsigned smax) {
    std::vector<uint32_t> cur(values.size(), 1), sums(smax, 0);
    for (unsigned s = 0; s < smax; ++s) {
        uint32_t acc = 0;
        for (size_t i = 0; i < values.size(); ++i) {
            cur[i] = T.mul(cur[i], values[i]);
            acc = T.add(acc, cur[i]);
        }
        sums[s] = acc;
    }
    return sums;
}

}  // namespace prfq::detail
