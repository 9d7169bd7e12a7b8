// SPDX-License-Identifier: Apache-2.0
//
// rischan: RIS-aided channel estimation simulator
// Copyright (C) 2026 The rischan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISCHAN_RNG_HPP
#define RISCHAN_RNG_HPP

#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

namespace rischan
{
    inline std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    // Counter-based split: any (cell, trial, stream) triple gets its own seed
    inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t trial,
                                        std::uint64_t stream)
    {
        std::uint64_t h = splitmix64(master);
        h = splitmix64(h ^ cell);
        h = splitmix64(h ^ (trial + 0x632BE59BD9B4E019ull));
        return splitmix64(h ^ (stream * 0xD1B54A32D192ED03ull));
    }

    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : gen_(seed) {}

        double normal() { return nd_(gen_); }
        double uniform() { return ud_(gen_); }

        // CN(0,1)
        cplx cn()
        {
            double re = nd_(gen_);
            double im = nd_(gen_);
            return cplx(re, im) * std::numbers::sqrt2 * 0.5;
        }

        CMat cn_matrix(Eigen::Index rows, Eigen::Index cols)
        {
            CMat A(rows, cols);
            for (Eigen::Index j = 0; j < cols; ++j)
                for (Eigen::Index i = 0; i < rows; ++i)
                    A(i, j) = cn();
            return A;
        }

        CVec cn_vector(Eigen::Index n) { return cn_matrix(n, 1).col(0); }

        std::mt19937_64 &engine() { return gen_; }

    private:
        std::mt19937_64 gen_;
        std::normal_distribution<double> nd_{0.0, 1.0};
        std::uniform_real_distribution<double> ud_{0.0, 1.0};
    };

    // Runs fn(i) for i in [0, n) over a small worker pool. Work is split by index,
    // so results written to slot i are independent of the thread count.
    inline void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)> &fn)
    {
        if (threads <= 1 || n < 2)
        {
            for (std::int64_t i = 0; i < n; ++i)
                fn(i);
            return;
        }
        const int nt = int(std::min<std::int64_t>(threads, n));
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex mu;
        for (int w = 0; w < nt; ++w)
            pool.emplace_back([&, w] {
                try
                {
                    for (std::int64_t i = w; i < n; i += nt)
                        fn(i);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!err)
                        err = std::current_exception();
                }
            });
        for (auto &t : pool)
            t.join();
        if (err)
            std::rethrow_exception(err);
    }
}

#endif
