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

#include "core/sweep.hpp"
#include "core/corr_cache.hpp"
#include "core/error.hpp"
#include "core/estimators.hpp"
#include "core/phaseopt.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <thread>

namespace rischan
{
    namespace
    {
        constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

        using clock_type = std::chrono::steady_clock;

        double seconds_since(clock_type::time_point t0)
        {
            return std::chrono::duration<double>(clock_type::now() - t0).count();
        }

        struct DesignResult
        {
            std::optional<CMat> phi;
            std::string error;
        };

        // One estimator bound to one design; exactly one member is set
        struct RowEstimator
        {
            std::unique_ptr<LmmseEstimator> lmmse;
            std::unique_ptr<RslsEstimator> rsls;
            std::unique_ptr<LsEstimator> ls;

            CMat estimate(const CMat &Y) const
            {
                if (lmmse)
                    return lmmse->estimate(Y);
                if (rsls)
                    return rsls->estimate(Y);
                return ls->estimate(Y);
            }
        };

        struct PendingRow
        {
            SweepRow row;
            size_t design_slot = 0;
            RowEstimator est;
            double trace_rx = 1.0;
            bool mc = false;
        };

        std::map<PhiDesign, DesignResult> build_designs(const SweepSpec &spec, const ScenarioConfig &cfg,
                                                        const ChannelModel &model, const ConservativeSubspace &basis,
                                                        int bits, std::uint64_t cell)
        {
            std::map<PhiDesign, DesignResult> out;
            auto finish = [&](const PhaseShiftMatrix &p) -> CMat {
                if (bits > 0)
                    return quantize_phases(p, bits).entries;
                return p.entries;
            };
            const double inv_sir = cfg.emi_var / cfg.power;
            std::optional<LmmseDesign> lmmse_bound;
            std::optional<PhaseShiftMatrix> rsls_bound;

            for (PhiDesign d : spec.designs)
            {
                DesignResult r;
                try
                {
                    switch (d)
                    {
                    case PhiDesign::LmmseBound:
                    case PhiDesign::LmmseOpt:
                        if (!lmmse_bound)
                            lmmse_bound = lmmse_optimal_phi(model.R_gp.eig().values,
                                                            build_B_and_G(model.R_hg.matrix(), model.R_wg.matrix(), inv_sir),
                                                            cfg.snr(), cfg.pilot_len);
                        r.phi = d == PhiDesign::LmmseBound ? lmmse_bound->phi.entries
                                                           : finish(project_unit_modulus(lmmse_bound->phi));
                        break;
                    case PhiDesign::LmmseOptNoEmi:
                        r.phi = finish(project_unit_modulus(
                            lmmse_optimal_phi_no_emi(model.R_gp.eig().values, model.R_hg, cfg.snr(), cfg.pilot_len).phi));
                        break;
                    case PhiDesign::RslsBound:
                    case PhiDesign::RslsOpt:
                    case PhiDesign::RslsMm:
                        if (!rsls_bound)
                            rsls_bound = rsls_optimal_phi(basis.ris, cfg.pilot_len);
                        if (d == PhiDesign::RslsBound)
                            r.phi = rsls_bound->entries;
                        else if (d == PhiDesign::RslsOpt)
                            r.phi = finish(project_unit_modulus(*rsls_bound));
                        else
                            r.phi = finish(mm_refine(project_unit_modulus(*rsls_bound), basis.ris, spec.mm_iters).phi);
                        break;
                    case PhiDesign::Dft:
                    case PhiDesign::Random:
                    {
                        Rng rng(substream_seed(cfg.seed, cell, 0, 21));
                        auto kind = d == PhiDesign::Dft ? BaselineKind::Dft : BaselineKind::Random;
                        r.phi = finish(baseline_phi(kind, cfg.pilot_len, model.N(), rng));
                        break;
                    }
                    }
                }
                catch (const std::exception &e)
                {
                    r.error = e.what();
                }
                out[d] = std::move(r);
            }
            return out;
        }
    }

    std::pair<double, double> aggregate_nmse_db(const std::vector<double> &sq, double trace_rx)
    {
        if (sq.empty())
            return {nan_v, nan_v};
        const double n = double(sq.size());
        double sum = 0.0;
        for (double v : sq)
            sum += v;
        const double mean = sum / n;
        double ss = 0.0;
        for (double v : sq)
            ss += (v - mean) * (v - mean);
        const double se = sq.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : nan_v;
        return {to_db(nmse(mean, trace_rx)), 10.0 / std::log(10.0) * se / mean};
    }

    SweepTable run_sweep(const SweepSpec &spec)
    {
        const auto t_start = clock_type::now();
        spec.validate();
        SweepTable table;
        table.seed = spec.base.seed;
        {
            char buf[24];
            std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)fnv1a64(spec.canonical()));
            table.config_hash = buf;
        }
        const int threads = spec.threads > 0 ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
        CorrelationCache cache(spec.cache_dir);

        for (size_t ci = 0; ci < spec.values.size(); ++ci)
        {
            const double av = spec.values[ci];
            const auto cell = std::uint64_t(ci);
            const ScenarioConfig cfg = spec.cell(av);
            const int bits = spec.axis == SweepAxis::Bits ? int(av) : spec.bits;

            // rows in a fixed order: emi mode, estimator, design
            std::vector<PendingRow> pending;
            auto add_rows_with_error = [&](const std::string &msg) {
                for (auto mode : spec.emi_modes)
                    for (auto e : spec.estimators)
                        for (auto d : spec.designs)
                            if (pair_valid(e, d))
                            {
                                PendingRow p;
                                p.row = {av, estimator_name(e), design_name(d), emi_mode_name(mode), nan_v, nan_v,
                                         nan_v, 0, 0.0, msg};
                                pending.push_back(std::move(p));
                            }
            };

            std::shared_ptr<ChannelModel> model;
            ConservativeSubspace basis;
            std::map<PhiDesign, DesignResult> designs;
            try
            {
                model = std::make_shared<ChannelModel>(build_channel_model(cfg, cache));
                basis = conservative_subspace(cfg.bs, cfg.ris, cfg.rank_fraction);
                designs = build_designs(spec, cfg, *model, basis, bits, cell);
            }
            catch (const std::exception &e)
            {
                add_rows_with_error(e.what());
                for (auto &p : pending)
                    table.rows.push_back(p.row);
                continue;
            }

            std::vector<PhiDesign> design_order;
            std::vector<CMat> phis;
            std::vector<EstimatorContext> contexts;
            for (auto d : spec.designs)
            {
                auto &dr = designs[d];
                if (!dr.phi)
                    continue;
                design_order.push_back(d);
                phis.push_back(*dr.phi);
            }
            contexts.reserve(phis.size());
            for (auto &phi : phis)
            {
                EstimatorContext ctx;
                ctx.model = model;
                ctx.basis = basis;
                ctx.phi = phi;
                ctx.power = cfg.power;
                ctx.noise_var = cfg.noise_var;
                ctx.emi_var = cfg.emi_var;
                contexts.push_back(std::move(ctx));
            }

            for (auto mode : spec.emi_modes)
                for (auto e : spec.estimators)
                    for (auto d : spec.designs)
                    {
                        if (!pair_valid(e, d))
                            continue;
                        PendingRow p;
                        p.row = {av, estimator_name(e), design_name(d), emi_mode_name(mode), nan_v, nan_v, nan_v, 0, 0.0, ""};
                        p.trace_rx = model->trace_rx();
                        const auto &dr = designs[d];
                        if (!dr.phi)
                        {
                            p.row.error = dr.error;
                            pending.push_back(std::move(p));
                            continue;
                        }
                        p.design_slot = size_t(std::find(design_order.begin(), design_order.end(), d) - design_order.begin());
                        const auto &ctx = contexts[p.design_slot];
                        const auto t0 = clock_type::now();
                        try
                        {
                            double closed = nan_v;
                            switch (e)
                            {
                            case EstimatorKind::Lmmse:
                                p.est.lmmse = std::make_unique<LmmseEstimator>(ctx);
                                closed = p.est.lmmse->mse_closed();
                                break;
                            case EstimatorKind::Rsls:
                                p.est.rsls = std::make_unique<RslsEstimator>(ctx);
                                closed = p.est.rsls->mse_closed();
                                break;
                            case EstimatorKind::Ls:
                                p.est.ls = std::make_unique<LsEstimator>(ctx);
                                closed = p.est.ls->mse_closed();
                                break;
                            case EstimatorKind::Crlb:
                                closed = RslsEstimator(ctx).crlb();
                                break;
                            }
                            // closed forms assume one EMI draw per block
                            if (mode == EmiMode::Slow)
                                p.row.nmse_db_closed = to_db(nmse(closed, p.trace_rx));
                            p.mc = e != EstimatorKind::Crlb && cfg.trials > 0;
                            if (p.mc)
                                p.row.trials = cfg.trials;
                        }
                        catch (const std::exception &ex)
                        {
                            p.row.error = ex.what();
                        }
                        if (spec.record_timing)
                            p.row.seconds = seconds_since(t0);
                        pending.push_back(std::move(p));
                    }

            // Monte-Carlo: every design and estimator sees the same channel, EMI and noise draws
            const std::int64_t T = cfg.trials;
            std::vector<size_t> mc_rows;
            for (size_t i = 0; i < pending.size(); ++i)
                if (pending[i].mc)
                    mc_rows.push_back(i);
            if (!mc_rows.empty())
            {
                const auto t0 = clock_type::now();
                std::vector<std::vector<double>> err(mc_rows.size(), std::vector<double>(size_t(T)));
                const int tau = cfg.pilot_len;
                parallel_for(T, threads, [&](std::int64_t t) {
                    Rng r_ch(substream_seed(cfg.seed, cell, std::uint64_t(t), 1));
                    Rng r_noise(substream_seed(cfg.seed, cell, std::uint64_t(t), 3));
                    const CascadedChannel ch = sample_channels(*model, r_ch);
                    std::map<EmiMode, EmiDraw> emi;
                    for (auto mode : spec.emi_modes)
                    {
                        Rng r(substream_seed(cfg.seed, cell, std::uint64_t(t), mode == EmiMode::Slow ? 2 : 4));
                        emi[mode] = sample_emi(*model, cfg.emi_var, mode, tau, r);
                    }
                    const CMat noise = r_noise.cn_matrix(tau, model->M());
                    std::map<std::pair<size_t, int>, CMat> obs;
                    for (size_t k = 0; k < mc_rows.size(); ++k)
                    {
                        const auto &p = pending[mc_rows[k]];
                        const EmiMode mode = p.row.emi_mode == "slow" ? EmiMode::Slow : EmiMode::Fast;
                        auto key = std::make_pair(p.design_slot, int(mode));
                        auto it = obs.find(key);
                        if (it == obs.end())
                            it = obs.emplace(key, observe(phis[p.design_slot], ch, emi[mode], cfg.power, cfg.noise_var,
                                                          noise).Y).first;
                        err[k][size_t(t)] = (p.est.estimate(it->second) - ch.X).squaredNorm();
                    }
                });
                const double per_row = seconds_since(t0) / double(mc_rows.size());
                for (size_t k = 0; k < mc_rows.size(); ++k)
                {
                    auto &row = pending[mc_rows[k]].row;
                    std::tie(row.nmse_db_mc, row.stderr_db) = aggregate_nmse_db(err[k], pending[mc_rows[k]].trace_rx);
                    if (spec.record_timing)
                        row.seconds += per_row;
                }
            }
            for (auto &p : pending)
                table.rows.push_back(p.row);
        }
        table.wall_seconds = seconds_since(t_start);
        return table;
    }
}
