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

#include "core/estimators.hpp"
#include "core/error.hpp"

#include <cmath>
#include <string>

namespace rischan
{
    namespace
    {
        void require_phi(const EstimatorContext &ctx)
        {
            if (!ctx.model)
                fail(ErrorCode::InvalidArgument, "estimator context has no channel model");
            if (ctx.phi.cols() != ctx.model->N())
                fail(ErrorCode::DimensionMismatch, "phase-shift matrix width does not match the RIS size");
            if (!(ctx.power > 0.0) || !(ctx.noise_var >= 0.0) || !(ctx.emi_var >= 0.0))
                fail(ErrorCode::InvalidArgument, "estimator needs rho > 0 and nonnegative variances");
        }
    }

    // ---------------------------------------------------------------- LS

    LsEstimator::LsEstimator(const EstimatorContext &ctx) : ctx_(ctx)
    {
        require_phi(ctx);
        const auto tau = ctx.phi.rows(), N = ctx.phi.cols();
        if (tau < N)
            fail(ErrorCode::RankDeficient, "LS needs tau_p >= N (tau_p = " + std::to_string(tau) +
                                               ", N = " + std::to_string(N) + ")");
        gram_.compute(ctx.phi.adjoint() * ctx.phi);
        if (gram_.info() != Eigen::Success)
            fail(ErrorCode::RankDeficient, "Phi^H Phi is singular; LS is undefined for this phase-shift matrix");
    }

    CMat LsEstimator::estimate(const CMat &Y) const
    {
        return gram_.solve(ctx_.phi.adjoint() * Y) / std::sqrt(ctx_.power);
    }

    double LsEstimator::mse_closed() const
    {
        const auto N = ctx_.phi.cols();
        const double tinv = gram_.solve(CMat::Identity(N, N)).trace().real();
        const auto &m = *ctx_.model;
        return double(m.M()) * tinv * ctx_.noise_var / ctx_.power +
               m.R_gp.trace() * m.R_wg.trace() * ctx_.emi_var / ctx_.power;
    }

    // ------------------------------------------------------------- LMMSE

    LmmseEstimator::LmmseEstimator(const EstimatorContext &ctx) : ctx_(ctx)
    {
        require_phi(ctx);
        const auto &m = *ctx.model;
        const CMat &phi = ctx.phi;
        CMat K = phi * (ctx.power * m.R_hg.matrix() + ctx.emi_var * m.R_wg.matrix()) * phi.adjoint();
        Eigh ek = eigh_desc(K);
        VK_ = ek.vectors;
        P_ = m.R_hg.matrix() * phi.adjoint() * VK_;
        cnorm_ = P_.colwise().squaredNorm().transpose();

        const RVec &d = m.R_gp.eig().values;
        const CMat &Ug = m.R_gp.eig().vectors;
        const auto tau = phi.rows(), M = m.M();
        RMat W(tau, M);
        for (Eigen::Index mm = 0; mm < M; ++mm)
            for (Eigen::Index t = 0; t < tau; ++t)
                W(t, mm) = std::max(d(mm), 0.0) * std::max(ek.values(t), 0.0) + ctx.noise_var;
        const double wmax = W.maxCoeff();
        if (!(wmax > 0.0))
            fail(ErrorCode::Singular, "LMMSE system is singular (no signal and no noise); regularization failed");
        if (W.minCoeff() <= 1e-14 * wmax)
            W.array() += 1e-12 * W.mean();
        Winv_ = W.cwiseInverse();
        Ug_conj_ = Ug.conjugate();
        right_ = d.cwiseMax(0.0).asDiagonal() * Ug.transpose();
    }

    CMat LmmseEstimator::estimate(const CMat &Y) const
    {
        CMat Q = VK_.adjoint() * Y * Ug_conj_;
        Q.array() *= Winv_.array().cast<cplx>();
        return std::sqrt(ctx_.power) * (P_ * Q * right_);
    }

    double LmmseEstimator::mse_closed() const
    {
        const auto &m = *ctx_.model;
        const RVec &d = m.R_gp.eig().values;
        double gain = 0.0;
        for (Eigen::Index mm = 0; mm < Winv_.cols(); ++mm)
        {
            const double dm = std::max(d(mm), 0.0);
            for (Eigen::Index t = 0; t < Winv_.rows(); ++t)
                gain += dm * dm * cnorm_(t) * Winv_(t, mm);
        }
        return m.trace_rx() - ctx_.power * gain;
    }

    // ------------------------------------------------------------- RS-LS

    RslsEstimator::RslsEstimator(const EstimatorContext &ctx) : ctx_(ctx)
    {
        require_phi(ctx);
        const CMat &Uhg = ctx.basis.ris.basis;
        const CMat &Ug = ctx.basis.bs.basis;
        if (Uhg.rows() != ctx.phi.cols() || Ug.rows() != ctx.model->M())
            fail(ErrorCode::DimensionMismatch, "conservative basis does not match the array sizes");
        const auto tau = ctx.phi.rows();
        const auto r = Uhg.cols();
        if (tau < r)
            fail(ErrorCode::RankDeficient, "RS-LS needs tau_p >= r_hg (tau_p = " + std::to_string(tau) +
                                               ", r_hg = " + std::to_string(r) + ")");
        A_ = ctx.phi * Uhg;
        T_.compute(A_.adjoint() * A_);
        CMat Tinv = T_.solve(CMat::Identity(r, r));
        // a near-singular Gram passes LLT but shows up as a huge or non-finite inverse
        const double rc = 1.0 / (Tinv.norm() * (A_.adjoint() * A_).norm());
        if (T_.info() != Eigen::Success || !std::isfinite(rc) || rc < 1e-13)
            fail(ErrorCode::RankDeficient, "U_hg^H Phi^H Phi U_hg is singular; need tau_p >= r_hg = " +
                                               std::to_string(r) + " with phi full rank on the subspace");
        tinv_trace_ = Tinv.trace().real();
        proj_bs_ = (Ug * Ug.adjoint()).conjugate();
    }

    CMat RslsEstimator::estimate(const CMat &Y) const
    {
        const CMat &Uhg = ctx_.basis.ris.basis;
        return Uhg * T_.solve(A_.adjoint() * Y) * proj_bs_ / std::sqrt(ctx_.power);
    }

    double RslsEstimator::mse_closed() const
    {
        const auto &m = *ctx_.model;
        const CMat &Ug = ctx_.basis.bs.basis;
        const double noise = double(ctx_.basis.bs.rank) * tinv_trace_ * ctx_.noise_var / ctx_.power;
        if (ctx_.emi_var == 0.0)
            return noise;
        const double bs = (Ug.adjoint() * m.R_gp.matrix() * Ug).trace().real();
        CMat F = T_.solve(A_.adjoint() * ctx_.phi); // r x N
        const double ris = (F * m.R_wg.matrix() * F.adjoint()).trace().real();
        return noise + bs * ris * ctx_.emi_var / ctx_.power;
    }

    double RslsEstimator::mse_simplified() const
    {
        const auto &m = *ctx_.model;
        const CMat &Ug = ctx_.basis.bs.basis;
        const CMat &Uhg = ctx_.basis.ris.basis;
        const double noise = double(ctx_.basis.bs.rank) * tinv_trace_ * ctx_.noise_var / ctx_.power;
        const double bs = (Ug.adjoint() * m.R_gp.matrix() * Ug).trace().real();
        const double ris = (Uhg.adjoint() * m.R_wg.matrix() * Uhg).trace().real();
        return noise + bs * ris * ctx_.emi_var / ctx_.power;
    }

    double RslsEstimator::crlb() const
    {
        const auto &m = *ctx_.model;
        const CMat &Ug = ctx_.basis.bs.basis;
        const auto rg = Ug.cols(), rh = A_.cols();
        const CMat &Ugp = m.R_gp.eig().vectors;
        const RVec &d = m.R_gp.eig().values;

        Eigh ec = eigh_desc(ctx_.phi * m.R_wg.matrix() * ctx_.phi.adjoint());
        CMat E = ec.vectors.adjoint() * A_; // tau x r_hg
        CMat B = Ugp.adjoint() * Ug;        // M x r_g

        CMat J = CMat::Zero(rg * rh, rg * rh);
        for (Eigen::Index mm = 0; mm < m.M(); ++mm)
        {
            RVec w(ec.values.size());
            for (Eigen::Index t = 0; t < w.size(); ++t)
                w(t) = 1.0 / (ctx_.emi_var * std::max(d(mm), 0.0) * std::max(ec.values(t), 0.0) + ctx_.noise_var);
            CMat inner = E.adjoint() * w.asDiagonal() * E;
            CMat outer = B.row(mm).adjoint() * B.row(mm);
            J += rischan::kron(outer, inner);
        }
        J *= ctx_.power;
        Eigen::LLT<CMat> llt(hermitian_part(J));
        if (llt.info() != Eigen::Success)
            fail(ErrorCode::RankDeficient, "Fisher information is singular; need tau_p >= r_hg");
        return llt.solve(CMat::Identity(J.rows(), J.cols())).trace().real();
    }

    double mse_lmmse_closed(const EstimatorContext &ctx) { return LmmseEstimator(ctx).mse_closed(); }
    double mse_rsls_closed(const EstimatorContext &ctx) { return RslsEstimator(ctx).mse_closed(); }
    double mse_ls_closed(const EstimatorContext &ctx) { return LsEstimator(ctx).mse_closed(); }
    double crlb(const EstimatorContext &ctx) { return RslsEstimator(ctx).crlb(); }

    double nmse(double mse, double trace_rx)
    {
        if (!(trace_rx > 0.0))
            fail(ErrorCode::InvalidArgument, "NMSE needs a positive channel trace");
        return mse / trace_rx;
    }

    double to_db(double v) { return 10.0 * std::log10(v); }
}
