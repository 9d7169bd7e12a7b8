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

#ifndef RISCHAN_ESTIMATORS_HPP
#define RISCHAN_ESTIMATORS_HPP

#include "core/channel.hpp"
#include "core/corrmat.hpp"

#include <memory>

namespace rischan
{
    // Everything an estimator needs. Built once, shared read-only by all trials.
    struct EstimatorContext
    {
        std::shared_ptr<const ChannelModel> model;
        ConservativeSubspace basis;
        CMat phi;              // tau_p x N
        double power = 1.0;    // rho
        double noise_var = 1.0;
        double emi_var = 0.0;  // slow-EMI covariance assumed by every estimator

        double snr() const { return power / noise_var; }
        double trace_rx() const { return model->trace_rx(); }
    };

    class LsEstimator
    {
    public:
        explicit LsEstimator(const EstimatorContext &ctx);
        CMat estimate(const CMat &Y) const; // returns N x M
        double mse_closed() const;

    private:
        EstimatorContext ctx_;
        Eigen::LLT<CMat> gram_;
    };

    class LmmseEstimator
    {
    public:
        explicit LmmseEstimator(const EstimatorContext &ctx);
        CMat estimate(const CMat &Y) const;
        double mse_closed() const;

    private:
        EstimatorContext ctx_;
        CMat P_;     // R_hg Phi^H V_K, N x tau_p
        CMat VK_;    // eigenvectors of Phi (rho R_hg + s_w^2 R_wg) Phi^H
        RMat Winv_;  // 1 / (d_m lambda_t + s_n^2), tau_p x M
        CMat right_; // D_g U_g^T
        CMat Ug_conj_; // conj(U_g)
        RVec cnorm_; // squared column norms of P_
    };

    class RslsEstimator
    {
    public:
        explicit RslsEstimator(const EstimatorContext &ctx);
        CMat estimate(const CMat &Y) const;
        double mse_closed() const;      // general two-term form
        double mse_simplified() const;  // form valid when phi annihilates the complement basis
        double crlb() const;
        double noise_cost() const { return tinv_trace_; } // tr(T^{-1})

    private:
        EstimatorContext ctx_;
        CMat A_;            // phi * U_hg
        Eigen::LLT<CMat> T_;
        CMat proj_bs_;      // conj(U_g U_g^H)
        double tinv_trace_ = 0.0;
    };

    double mse_lmmse_closed(const EstimatorContext &ctx);
    double mse_rsls_closed(const EstimatorContext &ctx);
    double mse_ls_closed(const EstimatorContext &ctx);
    double crlb(const EstimatorContext &ctx);

    double nmse(double mse, double trace_rx);
    double to_db(double v);
}

#endif
