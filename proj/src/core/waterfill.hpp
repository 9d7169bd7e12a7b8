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

#ifndef RISCHAN_WATERFILL_HPP
#define RISCHAN_WATERFILL_HPP

#include "core/linalg.hpp"

namespace rischan
{
    // minimize  sum_i sum_m a_{m,i} / (b_{m,i} p_i + 1/snr)
    // s.t.      p_i >= 0, sum_i p_i <= budget, p_i = 0 for i >= active_limit
    // with a_{m,i} = bs_eigs(m) * g_diag(i) and b_{m,i} = bs_eigs(m) * b_eigs(i).
    struct WaterfillProblem
    {
        RVec bs_eigs; // d_g',m
        RVec b_eigs;  // eigenvalues of B (or of R_hg without EMI)
        RVec g_diag;  // diagonal of G (equal to b_eigs without EMI)
        double snr = 1.0;
        double budget = 1.0; // N * tau_p
        Eigen::Index active_limit = -1; // min(tau_p, rank); negative means all

        Eigen::Index directions() const { return b_eigs.size(); }
        Eigen::Index limit() const;
        void validate() const;
    };

    struct WaterfillSolution
    {
        RVec power; // p_i = lambda_i^2, one per direction
        double mu = 0.0;

        RVec singular_values() const { return power.cwiseSqrt(); }
    };

    // Exact solution via sorted breakpoints; requires a single BS eigenvalue
    WaterfillSolution waterfill_single_antenna(const WaterfillProblem &p);

    // Bisection on the multiplier with a monotone Newton inner solve
    WaterfillSolution waterfill_multi_antenna(const WaterfillProblem &p);

    double waterfill_objective(const WaterfillProblem &p, const RVec &power);

    // sum_m a b / (b p + 1/snr)^2, the negative slope of direction i
    double waterfill_slope(const WaterfillProblem &p, Eigen::Index i, double power);
}

#endif
