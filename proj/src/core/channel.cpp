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

#include "core/channel.hpp"
#include "core/error.hpp"

#include <cmath>
#include <limits>

namespace rischan
{
    const char *emi_mode_name(EmiMode m)
    {
        return m == EmiMode::Slow ? "slow" : "fast";
    }

    double ScenarioConfig::sir() const
    {
        return emi_var > 0.0 ? power / emi_var : std::numeric_limits<double>::infinity();
    }

    void ScenarioConfig::validate() const
    {
        bs.validate();
        ris.validate();
        h.scatter.validate();
        g.scatter.validate();
        gp.scatter.validate();
        w.scatter.validate();
        if (pilot_len < 1)
            fail(ErrorCode::InvalidArgument, "pilot length must be at least 1");
        if (!(power > 0.0) || !(noise_var > 0.0))
            fail(ErrorCode::InvalidArgument, "pilot power and noise variance must be positive");
        if (!(emi_var >= 0.0))
            fail(ErrorCode::InvalidArgument, "EMI variance must be nonnegative");
        if (trials < 0)
            fail(ErrorCode::InvalidArgument, "trial count must be nonnegative");
        for (double gn : {h.gain, g.gain, gp.gain, w.gain})
            if (!(gn >= 0.0) || !std::isfinite(gn))
                fail(ErrorCode::InvalidArgument, "link gains must be finite and nonnegative");
    }

    ChannelModel make_channel_model(CorrelationMatrix R_h, CorrelationMatrix R_g, CorrelationMatrix R_gp,
                                    CorrelationMatrix R_w)
    {
        if (R_h.size() != R_g.size() || R_w.size() != R_g.size())
            fail(ErrorCode::DimensionMismatch, "RIS-side correlation matrices differ in size");
        ChannelModel m;
        m.R_h = std::move(R_h);
        m.R_g = std::move(R_g);
        m.R_gp = std::move(R_gp);
        m.R_w = std::move(R_w);
        m.R_hg = hadamard(m.R_h, m.R_g);
        m.R_wg = hadamard(m.R_w, m.R_g);
        m.L_h = m.R_h.sqrt_factor();
        m.L_g = m.R_g.sqrt_factor();
        m.L_gp = m.R_gp.sqrt_factor();
        m.L_w = m.R_w.sqrt_factor();
        return m;
    }

    ChannelModel build_channel_model(const ScenarioConfig &cfg, const CorrelationCache &cache)
    {
        cfg.validate();
        auto spec = [&](const LinkSpec &l) {
            ScatteringSpec s = l.scatter;
            s.mc_samples = cfg.mc_samples;
            return s;
        };
        // each matrix gets its own sampling stream
        auto R_h = cache.get_or_build(cfg.ris, spec(cfg.h), cfg.h.gain, substream_seed(cfg.seed, 0, 0, 11));
        auto R_g = cache.get_or_build(cfg.ris, spec(cfg.g), cfg.g.gain, substream_seed(cfg.seed, 0, 0, 12));
        auto R_gp = cache.get_or_build(cfg.bs, spec(cfg.gp), cfg.gp.gain, substream_seed(cfg.seed, 0, 0, 13));
        auto R_w = cache.get_or_build(cfg.ris, spec(cfg.w), cfg.w.gain, substream_seed(cfg.seed, 0, 0, 14));
        return make_channel_model(std::move(R_h), std::move(R_g), std::move(R_gp), std::move(R_w));
    }

    CascadedChannel sample_channels(const ChannelModel &model, Rng &rng)
    {
        const Eigen::Index N = model.N(), M = model.M();
        CascadedChannel ch;
        ch.h = model.L_h * rng.cn_vector(N);
        CMat W = rng.cn_matrix(M, N);
        // G = L_gp W L_g^T is M x N; keep its transpose
        ch.Gt = model.L_g * W.transpose() * model.L_gp.transpose();
        ch.X = ch.h.asDiagonal() * ch.Gt;
        return ch;
    }

    EmiDraw sample_emi(const ChannelModel &model, double emi_var, EmiMode mode, int slots, Rng &rng)
    {
        const Eigen::Index N = model.N();
        if (slots < 1)
            fail(ErrorCode::InvalidArgument, "EMI needs at least one slot");
        if (emi_var == 0.0)
            return CMat::Zero(N, slots);
        const double s = std::sqrt(emi_var);
        if (mode == EmiMode::Slow)
        {
            CVec w = s * (model.L_w * rng.cn_vector(N));
            return w.replicate(1, slots);
        }
        return s * (model.L_w * rng.cn_matrix(N, slots));
    }

    PilotObservation observe(const CMat &phi, const CascadedChannel &ch, const EmiDraw &emi, double power,
                             double noise_var, const CMat &noise)
    {
        const Eigen::Index tau = phi.rows(), N = ch.X.rows(), M = ch.X.cols();
        if (phi.cols() != N)
            fail(ErrorCode::DimensionMismatch, "phase-shift matrix has " + std::to_string(phi.cols()) +
                                                   " columns, channel has " + std::to_string(N) + " elements");
        if (emi.rows() != N || emi.cols() != tau)
            fail(ErrorCode::DimensionMismatch, "EMI draw must be N x tau_p");
        if (noise.rows() != tau || noise.cols() != M)
            fail(ErrorCode::DimensionMismatch, "noise draw must be tau_p x M");
        PilotObservation obs;
        obs.Y = std::sqrt(power) * (phi * ch.X);
        // slot t sees the RIS-reflected EMI w(t) .* g_m through row t of phi
        CMat phiw = phi.cwiseProduct(emi.transpose());
        obs.Y.noalias() += phiw * ch.Gt;
        obs.Y += std::sqrt(noise_var) * noise;
        return obs;
    }

    PilotObservation observe(const CMat &phi, const CascadedChannel &ch, const EmiDraw &emi, double power,
                             double noise_var, Rng &rng)
    {
        CMat n = rng.cn_matrix(phi.rows(), ch.X.cols());
        return observe(phi, ch, emi, power, noise_var, n);
    }
}
