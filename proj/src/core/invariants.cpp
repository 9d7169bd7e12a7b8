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

#include "core/invariants.hpp"
#include "core/config.hpp"
#include "core/estimators.hpp"
#include "core/phaseopt.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace rischan
{
    ScenarioConfig reference_scenario(const ArrayGeometry &bs, const ArrayGeometry &ris, std::int64_t mc_samples,
                                   std::uint64_t seed)
    {
        SweepSpec s = default_spec(Profile::Desk);
        ScenarioConfig c = s.base;
        c.bs = bs;
        c.ris = ris;
        c.mc_samples = mc_samples;
        c.seed = seed;
        c.h.gain = c.g.gain = c.gp.gain = c.w.gain = 1.0;
        c.power = 1.0;
        c.noise_var = 0.1;
        c.emi_var = std::pow(10.0, -0.5);
        return c;
    }

    namespace
    {
        std::string fmt(const char *f, double a, double b = 0.0)
        {
            char buf[160];
            std::snprintf(buf, sizeof(buf), f, a, b);
            return buf;
        }

        double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
    }

    std::vector<InvariantResult> run_invariants(const std::function<void(const InvariantResult &)> &on_result)
    {
        std::vector<InvariantResult> out;
        auto record = [&](const std::string &name, bool pass, const std::string &detail) {
            out.push_back({name, pass, detail});
            if (on_result)
                on_result(out.back());
        };
        auto guarded = [&](const std::string &name, const std::function<std::pair<bool, std::string>()> &fn) {
            try
            {
                auto [ok, d] = fn();
                record(name, ok, d);
            }
            catch (const std::exception &e)
            {
                record(name, false, std::string("exception: ") + e.what());
            }
        };

        const ArrayGeometry bs{2, 2, 0.25, 0.25};
        const ArrayGeometry ris{4, 4, 0.125, 0.125};

        guarded("array response unit modulus", [&] {
            CVec a = array_response(ArrayGeometry{4, 4, 0.25, 0.25}, {std::numbers::pi / 4, std::numbers::pi / 6});
            double dev = (a.cwiseAbs().array() - 1.0).abs().maxCoeff();
            CVec b = array_response(ris, {0.0, 0.0});
            double bro = (b - CVec::Ones(b.size())).cwiseAbs().maxCoeff();
            return std::make_pair(dev < 1e-14 && bro == 0.0, fmt("max |1-|a_k|| = %.3g, broadside dev = %.3g", dev, bro));
        });

        guarded("isotropic correlation unit diagonal", [&] {
            auto R = iso_correlation(ris);
            double dev = (R.matrix().diagonal().array() - cplx(1.0, 0.0)).abs().maxCoeff();
            return std::make_pair(dev == 0.0, fmt("max diagonal deviation %.3g", dev));
        });

        guarded("Schur product stays PSD", [&] {
            Rng rng(7);
            CMat A = rng.cn_matrix(8, 8), B = rng.cn_matrix(8, 8);
            auto ra = CorrelationMatrix::from_matrix(A * A.adjoint());
            auto rb = CorrelationMatrix::from_matrix(B * B.adjoint());
            auto h = hadamard(ra, rb);
            double lo = h.eig().values.minCoeff(), hi = h.eig().values.maxCoeff();
            return std::make_pair(lo >= -1e-10 * hi, fmt("min/max eigenvalue %.3g / %.3g", lo, hi));
        });

        guarded("Kronecker spectrum and trace", [&] {
            auto a = iso_correlation(bs), b = iso_correlation(ris);
            auto k = kron(a, b);
            RVec direct = eigh_desc(k.matrix()).values;
            double dev = (direct - k.eig().values).cwiseAbs().maxCoeff();
            double tr = rel(k.trace(), a.trace() * b.trace());
            return std::make_pair(dev < 1e-10 && tr < 1e-12, fmt("eigenvalue deviation %.3g, trace rel %.3g", dev, tr));
        });

        guarded("effective rank monotone in fraction", [&] {
            auto r = iso_correlation(ArrayGeometry{8, 8, 0.125, 0.125});
            int prev = 0;
            bool ok = true;
            for (double f : {0.5, 0.9, 0.99, 0.999, 1.0 - 1e-6, 1.0})
            {
                int k = r.effective_rank(f);
                ok = ok && k >= prev;
                prev = k;
            }
            return std::make_pair(ok, "rank at fraction 1: " + std::to_string(prev));
        });

        const ScenarioConfig cfg = reference_scenario(bs, ris, 20000, 3);
        auto model = std::make_shared<ChannelModel>(build_channel_model(cfg));
        const auto basis = conservative_subspace(bs, ris);

        guarded("clustered channel inside conservative subspace", [&] {
            double d = subspace_containment_defect(model->R_hg, basis.ris);
            return std::make_pair(d <= 1e-3, fmt("containment defect %.3g (r_hg = %.0f)", d, basis.ris.rank));
        });

        const int tau = basis.ris.rank + 1;
        auto ctx_for = [&](const CMat &phi, double emi) {
            EstimatorContext c;
            c.model = model;
            c.basis = basis;
            c.phi = phi;
            c.power = cfg.power;
            c.noise_var = cfg.noise_var;
            c.emi_var = emi;
            return c;
        };

        guarded("RS-LS optimum closed form", [&] {
            auto phi = rsls_optimal_phi(basis.ris, tau);
            const double r = basis.ris.rank, N = double(ris.size());
            double want = basis.bs.rank * r * r / (N * tau * cfg.snr());
            double got = mse_rsls_closed(ctx_for(phi.entries, 0.0));
            double leak = max_abs(phi.entries * complement_basis(basis.ris));
            return std::make_pair(rel(got, want) < 1e-8 && leak < 1e-10,
                                  fmt("relative error %.3g, complement leakage %.3g", rel(got, want), leak));
        });

        guarded("RS-LS general and simplified MSE agree", [&] {
            auto phi = rsls_optimal_phi(basis.ris, tau);
            RslsEstimator est(ctx_for(phi.entries, cfg.emi_var));
            double e = rel(est.mse_closed(), est.mse_simplified());
            return std::make_pair(e < 1e-8, fmt("relative gap %.3g", e));
        });

        guarded("CRLB below RS-LS MSE", [&] {
            Rng rng(11);
            auto phi = baseline_phi(BaselineKind::Random, tau, ris.size(), rng);
            RslsEstimator est(ctx_for(phi.entries, cfg.emi_var));
            double c = est.crlb(), m = est.mse_closed();
            return std::make_pair(c <= m * (1 + 1e-12), fmt("crlb %.4g, rs-ls %.4g", c, m));
        });

        guarded("no-EMI reduction of B and G", [&] {
            auto bg = build_B_and_G(model->R_hg.matrix(), model->R_wg.matrix(), 0.0);
            const RVec &d = model->R_hg.eig().values;
            double worst = 0.0;
            for (Eigen::Index i = 0; i < bg.g_diag.size(); ++i)
                if (d(i) > 1e-6 * d(0))
                    worst = std::max(worst, rel(bg.g_diag(i), d(i)));
            return std::make_pair(worst < 1e-6, fmt("max relative deviation %.3g", worst));
        });

        guarded("water-filling meets the budget", [&] {
            auto bg = build_B_and_G(model->R_hg.matrix(), model->R_wg.matrix(), cfg.emi_var / cfg.power);
            auto d = lmmse_optimal_phi(model->R_gp.eig().values, bg, cfg.snr(), 8);
            double b = rel(d.allocation.power.sum(), d.problem.budget);
            double f = rel(d.phi.entries.squaredNorm(), 8.0 * ris.size());
            return std::make_pair(b < 1e-9 && f < 1e-8, fmt("budget rel %.3g, Frobenius rel %.3g", b, f));
        });

        guarded("MM descent", [&] {
            auto start = project_unit_modulus(rsls_optimal_phi(basis.ris, tau));
            auto res = mm_refine(start, basis.ris, 20);
            bool ok = true;
            for (size_t k = 1; k < res.costs.size(); ++k)
                ok = ok && res.costs[k] <= res.costs[k - 1] * (1 + 1e-9);
            return std::make_pair(ok, fmt("cost %.5g -> %.5g", res.costs.front(), res.costs.back()));
        });

        guarded("LMMSE objective identity", [&] {
            Rng rng(5);
            CMat phi = baseline_phi(BaselineKind::Random, 4, ris.size(), rng).entries;
            const double is = cfg.emi_var / cfg.power;
            double a = lmmse_objective_direct(phi, model->R_gp.matrix(), model->R_hg.matrix(), model->R_wg.matrix(), is, cfg.snr());
            double b = lmmse_objective_eigenform(phi, model->R_gp.matrix(), model->R_hg.matrix(), model->R_wg.matrix(), is, cfg.snr());
            return std::make_pair(rel(a, b) < 1e-8, fmt("relative gap %.3g", rel(a, b)));
        });

        guarded("LMMSE below RS-LS and LS", [&] {
            Rng rng(9);
            auto phi = baseline_phi(BaselineKind::Random, int(ris.size()), ris.size(), rng);
            auto c = ctx_for(phi.entries, cfg.emi_var);
            double l = mse_lmmse_closed(c), r = mse_rsls_closed(c), s = mse_ls_closed(c);
            return std::make_pair(l <= r && l <= s, fmt("lmmse %.4g vs min(rs-ls, ls) %.4g", l, std::min(r, s)));
        });

        return out;
    }
}
