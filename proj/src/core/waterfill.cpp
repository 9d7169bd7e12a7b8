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

#include "core/waterfill.hpp"
#include "core/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace rischan
{
    Eigen::Index WaterfillProblem::limit() const
    {
        return active_limit < 0 ? directions() : std::min(active_limit, directions());
    }

    void WaterfillProblem::validate() const
    {
        if (b_eigs.size() != g_diag.size() || b_eigs.size() == 0 || bs_eigs.size() == 0)
            fail(ErrorCode::DimensionMismatch, "water-filling tables are empty or inconsistent");
        if (!(budget > 0.0) || !std::isfinite(budget))
            fail(ErrorCode::Infeasible, "water-filling budget must be positive");
        if (!(snr > 0.0) || !std::isfinite(snr))
            fail(ErrorCode::InvalidArgument, "water-filling needs a finite positive SNR");
        if ((b_eigs.array() < 0.0).any() || (g_diag.array() < 0.0).any() || (bs_eigs.array() < 0.0).any())
            fail(ErrorCode::InvalidArgument, "water-filling coefficients must be nonnegative");
    }

    double waterfill_slope(const WaterfillProblem &p, Eigen::Index i, double power)
    {
        const double s = 1.0 / p.snr;
        double f = 0.0;
        for (Eigen::Index m = 0; m < p.bs_eigs.size(); ++m)
        {
            const double a = p.bs_eigs(m) * p.g_diag(i);
            const double b = p.bs_eigs(m) * p.b_eigs(i);
            const double q = b * power + s;
            f += a * b / (q * q);
        }
        return f;
    }

    double waterfill_objective(const WaterfillProblem &p, const RVec &power)
    {
        const double s = 1.0 / p.snr;
        double v = 0.0;
        for (Eigen::Index i = 0; i < p.directions(); ++i)
            for (Eigen::Index m = 0; m < p.bs_eigs.size(); ++m)
            {
                const double a = p.bs_eigs(m) * p.g_diag(i);
                const double b = p.bs_eigs(m) * p.b_eigs(i);
                v += a / (b * power(i) + s);
            }
        return v;
    }

    namespace
    {
        bool useful(const WaterfillProblem &p, Eigen::Index i)
        {
            return p.b_eigs(i) > 0.0 && p.g_diag(i) > 0.0;
        }
    }

    WaterfillSolution waterfill_single_antenna(const WaterfillProblem &p)
    {
        p.validate();
        if (p.bs_eigs.size() != 1)
            fail(ErrorCode::DimensionMismatch, "single-antenna water-filling takes one BS eigenvalue");
        const double c = p.bs_eigs(0);
        const double s = 1.0 / p.snr;
        const Eigen::Index L = p.limit();

        // p_i = max(0, sqrt(g_i/b_i) nu - s/(c b_i)); breakpoint nu_i = s / (c sqrt(g_i b_i))
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < L; ++i)
            if (c > 0.0 && useful(p, i))
                idx.push_back(i);
        if (idx.empty())
            fail(ErrorCode::InvalidArgument, "water-filling coefficient table is all zero");
        auto bp = [&](Eigen::Index i) { return s / (c * std::sqrt(p.g_diag(i) * p.b_eigs(i))); };
        std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return bp(x) < bp(y); });

        double slope = 0.0, offset = 0.0, nu = 0.0;
        size_t k = 0;
        for (; k < idx.size(); ++k)
        {
            const auto i = idx[k];
            slope += std::sqrt(p.g_diag(i) / p.b_eigs(i));
            offset += s / (c * p.b_eigs(i));
            nu = (p.budget + offset) / slope;
            if (k + 1 == idx.size() || nu <= bp(idx[k + 1]))
                break;
        }
        WaterfillSolution sol;
        sol.power = RVec::Zero(p.directions());
        for (size_t j = 0; j <= k; ++j)
        {
            const auto i = idx[j];
            sol.power(i) = std::max(0.0, std::sqrt(p.g_diag(i) / p.b_eigs(i)) * nu - s / (c * p.b_eigs(i)));
        }
        sol.mu = 1.0 / (nu * nu);
        return sol;
    }

    namespace
    {
        // root of slope(p) = mu on p >= 0; slope is convex and decreasing, so Newton from 0 climbs monotonically
        double solve_direction(const WaterfillProblem &wp, Eigen::Index i, double mu)
        {
            if (waterfill_slope(wp, i, 0.0) <= mu)
                return 0.0;
            const double s = 1.0 / wp.snr;
            double x = 0.0;
            for (int it = 0; it < 200; ++it)
            {
                double f = 0.0, df = 0.0;
                for (Eigen::Index m = 0; m < wp.bs_eigs.size(); ++m)
                {
                    const double a = wp.bs_eigs(m) * wp.g_diag(i);
                    const double b = wp.bs_eigs(m) * wp.b_eigs(i);
                    const double q = b * x + s;
                    f += a * b / (q * q);
                    df -= 2.0 * a * b * b / (q * q * q);
                }
                const double g = f - mu;
                if (g <= 0.0 || df == 0.0)
                    break;
                const double step = -g / df;
                x += step;
                if (step <= 1e-15 * std::max(x, 1e-300))
                    break;
            }
            return x;
        }

        double allocate(const WaterfillProblem &wp, double mu, RVec &power)
        {
            power.setZero();
            double total = 0.0;
            for (Eigen::Index i = 0; i < wp.limit(); ++i)
                if (useful(wp, i))
                {
                    power(i) = solve_direction(wp, i, mu);
                    total += power(i);
                }
            return total;
        }
    }

    WaterfillSolution waterfill_multi_antenna(const WaterfillProblem &p)
    {
        p.validate();
        double mu_hi = 0.0;
        for (Eigen::Index i = 0; i < p.limit(); ++i)
            if (useful(p, i))
                mu_hi = std::max(mu_hi, waterfill_slope(p, i, 0.0));
        if (!(mu_hi > 0.0))
            fail(ErrorCode::InvalidArgument, "water-filling coefficient table is all zero");

        RVec power(p.directions());
        double mu_lo = mu_hi;
        for (int k = 0; k < 4000 && allocate(p, mu_lo, power) < p.budget; ++k)
            mu_lo *= 0.25;

        // log-space bisection on mu; allocated total decreases in mu
        for (int it = 0; it < 300; ++it)
        {
            const double mid = std::sqrt(mu_lo * mu_hi);
            const double tot = allocate(p, mid, power);
            if (tot >= p.budget)
                mu_lo = mid;
            else
                mu_hi = mid;
            if (mu_hi / mu_lo - 1.0 < 1e-15)
                break;
        }
        WaterfillSolution sol;
        sol.mu = mu_lo;
        sol.power.resize(p.directions());
        const double tot = allocate(p, mu_lo, sol.power);
        if (tot > 0.0)
            sol.power *= p.budget / tot;
        return sol;
    }
}
