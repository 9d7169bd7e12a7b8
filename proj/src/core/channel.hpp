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

#ifndef RISCHAN_CHANNEL_HPP
#define RISCHAN_CHANNEL_HPP

#include "core/corr_cache.hpp"
#include "core/corrmat.hpp"
#include "core/rng.hpp"

#include <cstdint>
#include <string>

namespace rischan
{
    enum class EmiMode
    {
        Slow, // one realization for the whole pilot block
        Fast  // fresh realization every slot
    };

    const char *emi_mode_name(EmiMode m);

    struct LinkSpec
    {
        ScatteringSpec scatter;
        double gain = 1.0;
    };

    struct ScenarioConfig
    {
        ArrayGeometry bs{2, 2, 0.25, 0.25};
        ArrayGeometry ris{4, 4, 0.125, 0.125};
        LinkSpec h, g, gp, w; // UE-RIS, RIS-BS (RIS side), RIS-BS (BS side), EMI
        int pilot_len = 8;
        double power = 0.2;      // rho, watts
        double noise_var = 1.0;  // sigma_n^2, watts
        double emi_var = 0.0;    // sigma_w^2, watts
        EmiMode emi_mode = EmiMode::Slow;
        std::uint64_t seed = 1;
        std::int64_t trials = 1000;
        std::int64_t mc_samples = 100000; // for clustered specs
        double rank_fraction = default_rank_fraction;

        double snr() const { return power / noise_var; }
        double sir() const; // +inf without EMI
        void validate() const;
    };

    // Second-order statistics and sampling factors of one scenario
    struct ChannelModel
    {
        CorrelationMatrix R_h, R_g, R_gp, R_w;
        CorrelationMatrix R_hg; // R_h .* R_g
        CorrelationMatrix R_wg; // R_w .* R_g
        CMat L_h, L_g, L_gp, L_w;

        Eigen::Index M() const { return R_gp.size(); }
        Eigen::Index N() const { return R_h.size(); }
        double trace_rx() const { return R_gp.trace() * R_hg.trace(); }
    };

    ChannelModel build_channel_model(const ScenarioConfig &cfg, const CorrelationCache &cache = {});

    // Assemble from given matrices (tests, synthetic scenarios)
    ChannelModel make_channel_model(CorrelationMatrix R_h, CorrelationMatrix R_g, CorrelationMatrix R_gp,
                                    CorrelationMatrix R_w);

    struct CascadedChannel
    {
        CVec h;  // N
        CMat Gt; // N x M, column m is g_m
        CMat X;  // N x M, column m is h .* g_m

        CVec x() const { return X.reshaped(); }
    };

    // N x slots matrix of EMI vectors, already scaled by sigma_w
    using EmiDraw = CMat;

    struct PilotObservation
    {
        CMat Y; // tau_p x M, column m is antenna m

        CVec y() const { return Y.reshaped(); }
    };

    CascadedChannel sample_channels(const ChannelModel &model, Rng &rng);

    EmiDraw sample_emi(const ChannelModel &model, double emi_var, EmiMode mode, int slots, Rng &rng);

    // noise: tau_p x M standard CN(0,1) draws, scaled by sigma_n inside
    PilotObservation observe(const CMat &phi, const CascadedChannel &ch, const EmiDraw &emi, double power,
                             double noise_var, const CMat &noise);

    PilotObservation observe(const CMat &phi, const CascadedChannel &ch, const EmiDraw &emi, double power,
                             double noise_var, Rng &rng);
}

#endif
