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

#ifndef RISCHAN_TEST_HELPERS_HPP
#define RISCHAN_TEST_HELPERS_HPP

#include "core/estimators.hpp"
#include "core/invariants.hpp"

#include <cmath>
#include <memory>

namespace rischan::testing
{
    inline const ArrayGeometry desk_bs{2, 2, 0.25, 0.25};
    inline const ArrayGeometry desk_ris{4, 4, 0.125, 0.125};

    // Unit-gain reference scenario at SNR 10 dB and SIR 5 dB
    inline ScenarioConfig desk_cfg(std::uint64_t seed = 3, ArrayGeometry bs = desk_bs, ArrayGeometry ris = desk_ris)
    {
        ScenarioConfig c = reference_scenario(bs, ris, 20000, seed);
        c.power = 1.0;
        c.noise_var = 0.1;
        c.emi_var = std::pow(10.0, -0.5);
        return c;
    }

    inline EstimatorContext make_ctx(std::shared_ptr<const ChannelModel> m, const ConservativeSubspace &b,
                                     const CMat &phi, double power, double noise_var, double emi_var)
    {
        EstimatorContext x;
        x.model = std::move(m);
        x.basis = b;
        x.phi = phi;
        x.power = power;
        x.noise_var = noise_var;
        x.emi_var = emi_var;
        return x;
    }

    inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

    // Random Hermitian PSD matrix with unit mean diagonal
    inline CorrelationMatrix random_psd(Eigen::Index n, Rng &rng, Eigen::Index rank = -1)
    {
        CMat A = rng.cn_matrix(n, rank < 0 ? n : rank);
        CMat R = A * A.adjoint();
        R *= double(n) / R.trace().real();
        return CorrelationMatrix::from_matrix(R);
    }
}

#endif
