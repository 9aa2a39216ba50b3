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

#ifndef PRFQ_SWEEP_HPP
#define PRFQ_SWEEP_HPP

// Table-driven helpers for parameter sweeps over small fields.

#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "prfq/gf.hpp"

namespace prfq::detail {

class TableField {
   public:
    explicit TableField(const FiniteField& F);

    const FiniteField& field() const noexcept { return *field_; }
    uint32_t q() const noexcept { return q_; }
    uint32_t add(uint32_t a, uint32_t b) const noexcept { return add_[a * q_ + b]; }
    uint32_t sub(uint32_t a, uint32_t b) const noexcept { return add_[a * q_ + neg_[b]]; }
    uint32_t mul(uint32_t a, uint32_t b) const noexcept { return mul_[a * q_ + b]; }
    uint32_t neg(uint32_t a) const noexcept { return neg_[a]; }
    uint32_t inv(uint32_t a) const noexcept { return inv_[a]; }
    uint32_t div(uint32_t a, uint32_t b) const noexcept { return mul(a, inv_[b]); }

   private:
    const FiniteField* field_;
    uint32_t q_;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
};

/// Epoch-stamped membership set over [0, n).
class SeenSet {
   public:
    explicit SeenSet(uint32_t n) : stamp_(n, 0) {}
    void clear() {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
    }
    bool insert(uint32_t v) {
        if (stamp_[v] == epoch_) return false;
        stamp_[v] = epoch_;
        return true;
    }

   private:
    std::vector<uint32_t> stamp_;
    uint32_t epoch_ = 0;
};

/// Monic X^2 + c1 X + c0 without roots in F_q.
struct Quadratic {
    uint32_t c0, c1;
};
std::vector<Quadratic> irreducible_quadratics(const TableField& T);

/// Monic X^3 + c2 X^2 + c1 X + c0 without roots in F_q.
struct Cubic {
    uint32_t c0, c1, c2;
};
std::vector<Cubic> irreducible_cubics(const TableField& T);

/// sum_x v[x]^s for s = 1..smax (index s - 1).
std::vector<uint32_t> power_sums(const TableField& T, const std::vector<uint32_t>& values, unsigned smax);

/// Uniform value in [0, n) from one 64-bit draw.
inline uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

/// Runs fn(begin, end, worker) over contiguous chunks of [0, n).
template <class Fn>
void parallel_chunks(uint64_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n < 2) {
        fn(uint64_t{0}, n, 0u);
        return;
    }
    jobs = static_cast<unsigned>(std::min<uint64_t>(jobs, n));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] { fn(n * w / jobs, n * (w + 1) / jobs, w); });
    for (auto& t : pool) t.join();
}

}  // namespace prfq::detail

#endif
