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

#include "core/phaseopt.hpp"
#include "core/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace rischan
{
    // ----------------------------------------------------------- regimes

    PhaseShiftMatrix PhaseShiftMatrix::relaxed(CMat e)
    {
        PhaseShiftMatrix p{std::move(e), Regime::Relaxed, 0};
        p.validate();
        return p;
    }

    PhaseShiftMatrix PhaseShiftMatrix::unit_modulus(CMat e)
    {
        PhaseShiftMatrix p{std::move(e), Regime::UnitModulus, 0};
        p.validate();
        return p;
    }

    PhaseShiftMatrix PhaseShiftMatrix::quantized(CMat e, int bits)
    {
        PhaseShiftMatrix p{std::move(e), Regime::Quantized, bits};
        p.validate();
        return p;
    }

    void PhaseShiftMatrix::validate() const
    {
        if (entries.size() == 0)
            fail(ErrorCode::InvalidArgument, "empty phase-shift matrix");
        const double budget = double(entries.rows()) * double(entries.cols());
        switch (regime)
        {
        case Regime::Relaxed:
            if (entries.squaredNorm() > budget + 1e-6 * std::max(1.0, budget))
                fail(ErrorCode::InvalidArgument, "relaxed phase-shift matrix exceeds the Frobenius budget");
            break;
        case Regime::UnitModulus:
        case Regime::Quantized:
            for (Eigen::Index k = 0; k < entries.size(); ++k)
                if (std::abs(std::abs(entries(k)) - 1.0) > 1e-12)
                    fail(ErrorCode::InvalidArgument, "phase-shift entry is not unit modulus");
            if (regime == Regime::Quantized)
            {
                if (bits < 1 || bits > 30)
                    fail(ErrorCode::InvalidArgument, "quantization needs 1..30 bits");
                const double step = 2.0 * std::numbers::pi / double(std::int64_t(1) << bits);
                for (Eigen::Index k = 0; k < entries.size(); ++k)
                {
                    const double q = std::arg(entries(k)) / step;
                    if (std::abs(q - std::round(q)) > 1e-9)
                        fail(ErrorCode::InvalidArgument, "phase-shift angle is off the quantization grid");
                }
            }
            break;
        }
    }

    CMat scale_to_budget(const CMat &phi)
    {
        const double n2 = phi.squaredNorm();
        if (n2 == 0.0)
            return phi;
        return phi * std::sqrt(double(phi.rows()) * double(phi.cols()) / n2);
    }

    // ------------------------------------------------------ LMMSE design

    BGDecomposition build_B_and_G(const CMat &R_hg, const CMat &R_wg, double inv_sir)
    {
        if (R_hg.rows() != R_wg.rows() || R_hg.cols() != R_wg.cols())
            fail(ErrorCode::DimensionMismatch, "R_hg and R_wg differ in size");
        if (!(inv_sir >= 0.0) || !std::isfinite(inv_sir))
            fail(ErrorCode::InvalidArgument, "1/SIR must be finite and nonnegative");
        CMat B = R_hg;
        if (inv_sir > 0.0)
            B += inv_sir * R_wg;
        Eigh e = eigh_desc(B);
        const double floor = 1e-12 * std::max(e.values(0), 0.0);
        Eigen::Index r = 0;
        while (r < e.values.size() && e.values(r) > floor)
            ++r;
        if (r == 0)
            fail(ErrorCode::InvalidArgument, "B has no positive eigenvalues");
        BGDecomposition bg;
        bg.basis = e.vectors.leftCols(r);
        bg.b_eigs = e.values.head(r);
        RVec isq = bg.b_eigs.cwiseSqrt().cwiseInverse();
        CMat H = R_hg * bg.basis; // R_hg U_B
        bg.G = isq.asDiagonal() * (H.adjoint() * H) * isq.asDiagonal();
        bg.G = hermitian_part(bg.G);
        bg.g_diag = bg.G.diagonal().real().cwiseMax(0.0);
        return bg;
    }

    namespace
    {
        LmmseDesign assemble(const RVec &bs_eigs, const CMat &basis, const RVec &b_eigs, const RVec &g_diag,
                             double snr, int tau_p)
        {
            if (tau_p < 1)
                fail(ErrorCode::InvalidArgument, "pilot length must be at least 1");
            const Eigen::Index N = basis.rows();
            LmmseDesign d;
            d.problem.bs_eigs = bs_eigs.cwiseMax(0.0);
            d.problem.b_eigs = b_eigs;
            d.problem.g_diag = g_diag;
            d.problem.snr = snr;
            d.problem.budget = double(N) * tau_p;
            d.problem.active_limit = std::min<Eigen::Index>(tau_p, basis.cols());
            d.allocation = d.problem.bs_eigs.size() == 1 ? waterfill_single_antenna(d.problem)
                                                         : waterfill_multi_antenna(d.problem);
            const Eigen::Index k = d.problem.limit();
            RVec lam = d.allocation.singular_values().head(k);
            CMat S = unitary_dft(tau_p).leftCols(k);
            CMat phi = S * lam.asDiagonal() * basis.leftCols(k).adjoint();
            // the allocation meets the budget to ~1e-15; trim rounding so the Relaxed check holds exactly
            d.phi = PhaseShiftMatrix{scale_to_budget(phi), PhaseShiftMatrix::Regime::Relaxed, 0};
            return d;
        }
    }

    LmmseDesign lmmse_optimal_phi(const RVec &bs_eigs, const BGDecomposition &bg, double snr, int tau_p)
    {
        return assemble(bs_eigs, bg.basis, bg.b_eigs, bg.g_diag, snr, tau_p);
    }

    LmmseDesign lmmse_optimal_phi_no_emi(const RVec &bs_eigs, const CorrelationMatrix &R_hg, double snr, int tau_p)
    {
        const RVec &d = R_hg.eig().values;
        const double floor = 1e-12 * std::max(d(0), 0.0);
        Eigen::Index r = 0;
        while (r < d.size() && d(r) > floor)
            ++r;
        return assemble(bs_eigs, R_hg.eig().vectors.leftCols(r), d.head(r), d.head(r), snr, tau_p);
    }

    // ------------------------------------------------------ RS-LS design

    PhaseShiftMatrix rsls_optimal_phi(const SubspaceBasis &Uhg, int tau_p)
    {
        const auto r = Uhg.basis.cols();
        const auto N = Uhg.basis.rows();
        if (tau_p < r)
            fail(ErrorCode::RankDeficient, "RS-LS design needs tau_p >= r_hg (tau_p = " + std::to_string(tau_p) +
                                               ", r_hg = " + std::to_string(r) + ")");
        CMat S1 = unitary_dft(tau_p).leftCols(r);
        const double amp = std::sqrt(double(N) * tau_p / double(r));
        return PhaseShiftMatrix{amp * S1 * Uhg.basis.adjoint(), PhaseShiftMatrix::Regime::Relaxed, 0};
    }

    PhaseShiftMatrix project_unit_modulus(const PhaseShiftMatrix &phi)
    {
        CMat out(phi.entries.rows(), phi.entries.cols());
        for (Eigen::Index k = 0; k < out.size(); ++k)
        {
            const cplx v = phi.entries(k);
            out(k) = std::abs(v) == 0.0 ? cplx(1.0, 0.0) : v / std::abs(v);
        }
        return PhaseShiftMatrix{std::move(out), PhaseShiftMatrix::Regime::UnitModulus, 0};
    }

    PhaseShiftMatrix quantize_phases(const PhaseShiftMatrix &phi, int bits)
    {
        if (bits < 1 || bits > 30)
            fail(ErrorCode::InvalidArgument, "quantization needs 1..30 bits");
        const std::int64_t levels = std::int64_t(1) << bits;
        const double step = 2.0 * std::numbers::pi / double(levels);
        CMat out(phi.entries.rows(), phi.entries.cols());
        for (Eigen::Index k = 0; k < out.size(); ++k)
        {
            double a = std::arg(phi.entries(k));
            if (a < 0.0)
                a += 2.0 * std::numbers::pi;
            // nearest grid index, ties to the lower one
            std::int64_t q = std::int64_t(std::ceil(a / step - 0.5));
            q = ((q % levels) + levels) % levels;
            const double ang = step * double(q);
            out(k) = cplx(std::cos(ang), std::sin(ang));
        }
        return PhaseShiftMatrix{std::move(out), PhaseShiftMatrix::Regime::Quantized, bits};
    }

    // ---------------------------------------------------------------- MM

    double rsls_noise_cost(const CMat &phi, const CMat &Uhg)
    {
        CMat A = phi * Uhg;
        Eigen::LLT<CMat> llt(A.adjoint() * A);
        if (llt.info() != Eigen::Success)
            return std::numeric_limits<double>::infinity();
        return llt.solve(CMat::Identity(A.cols(), A.cols())).trace().real();
    }

    MMResult mm_refine(const PhaseShiftMatrix &phi0, const SubspaceBasis &Uhg, int iters)
    {
        if (phi0.regime == PhaseShiftMatrix::Regime::Relaxed)
            fail(ErrorCode::InvalidArgument, "MM refinement starts from a unit-modulus matrix");
        if (iters < 0)
            fail(ErrorCode::InvalidArgument, "MM iteration count must be nonnegative");
        const CMat &U = Uhg.basis;
        const auto r = U.cols();
        MMResult res;
        res.phi = phi0;
        CMat phi = phi0.entries;
        auto inner_inverse = [&](const CMat &P, CMat &Tinv) {
            CMat A = P * U;
            Eigen::LLT<CMat> llt(A.adjoint() * A);
            if (llt.info() != Eigen::Success)
                fail(ErrorCode::Singular, "U^H Phi^H Phi U is singular; increase tau_p above r_hg = " +
                                              std::to_string(r));
            Tinv = llt.solve(CMat::Identity(r, r));
        };
        CMat Tinv;
        inner_inverse(phi, Tinv);
        res.costs.push_back(Tinv.trace().real());
        for (int it = 0; it < iters; ++it)
        {
            const double c = Tinv.trace().real();
            const double a0 = 3.0 * c * c;
            // -b0 = Phi0 U T^{-2} U^H + a0 Phi0; B0 vec(Phi0) never formed explicitly
            CMat nb = (phi * U) * (Tinv * Tinv) * U.adjoint() + a0 * phi;
            for (Eigen::Index k = 0; k < nb.size(); ++k)
                phi(k) = std::abs(nb(k)) == 0.0 ? phi(k) : nb(k) / std::abs(nb(k));
            inner_inverse(phi, Tinv);
            res.costs.push_back(Tinv.trace().real());
        }
        res.phi = PhaseShiftMatrix{phi, PhaseShiftMatrix::Regime::UnitModulus, 0};
        return res;
    }

    // --------------------------------------------------------- baselines

    PhaseShiftMatrix baseline_phi(BaselineKind kind, int tau_p, Eigen::Index N, Rng &rng)
    {
        if (tau_p < 1 || N < 1)
            fail(ErrorCode::InvalidArgument, "baseline needs tau_p >= 1 and N >= 1");
        CMat phi(tau_p, N);
        if (kind == BaselineKind::Dft)
        {
            for (Eigen::Index t = 0; t < tau_p; ++t)
                for (Eigen::Index n = 0; n < N; ++n)
                {
                    const double ang = -2.0 * std::numbers::pi * double((t * n) % N) / double(N);
                    phi(t, n) = cplx(std::cos(ang), std::sin(ang));
                }
        }
        else
        {
            for (Eigen::Index n = 0; n < N; ++n)
                for (Eigen::Index t = 0; t < tau_p; ++t)
                {
                    const double ang = 2.0 * std::numbers::pi * rng.uniform();
                    phi(t, n) = cplx(std::cos(ang), std::sin(ang));
                }
        }
        return PhaseShiftMatrix{std::move(phi), PhaseShiftMatrix::Regime::UnitModulus, 0};
    }

    // ------------------------------------------------- objective identity

    double lmmse_objective_direct(const CMat &phi, const CMat &R_gp, const CMat &R_hg, const CMat &R_wg,
                                  double inv_sir, double snr)
    {
        const auto M = R_gp.rows();
        CMat phiM = rischan::kron(CMat::Identity(M, M), phi);
        CMat Rx = rischan::kron(R_gp, R_hg);
        CMat Rb = rischan::kron(R_gp, R_hg + inv_sir * R_wg);
        CMat X = phiM * Rb * phiM.adjoint();
        X.diagonal().array() += 1.0 / snr;
        Eigen::LLT<CMat> llt(hermitian_part(X));
        CMat PR = phiM * Rx;
        return (PR.adjoint() * llt.solve(PR)).trace().real();
    }

    double lmmse_objective_eigenform(const CMat &phi, const CMat &R_gp, const CMat &R_hg, const CMat &R_wg,
                                     double inv_sir, double snr)
    {
        const auto M = R_gp.rows();
        CMat Rx = rischan::kron(R_gp, R_hg);
        Eigh eb = eigh_desc(rischan::kron(R_gp, R_hg + inv_sir * R_wg));
        const double floor = 1e-12 * std::max(eb.values(0), 0.0);
        Eigen::Index r = 0;
        while (r < eb.values.size() && eb.values(r) > floor)
            ++r;
        CMat UB = eb.vectors.leftCols(r);
        RVec dsq = eb.values.head(r).cwiseSqrt();
        CMat phiM = rischan::kron(CMat::Identity(M, M), phi);
        CMat Psi = phiM * UB * dsq.asDiagonal();
        Eigen::BDCSVD<CMat> svd(Psi, Eigen::ComputeThinU | Eigen::ComputeThinV);
        CMat H = Rx * UB * dsq.cwiseInverse().asDiagonal();
        CMat G = H.adjoint() * H;
        CMat V = svd.matrixV();
        const RVec &sv = svd.singularValues();
        double v = 0.0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
        {
            const double dA = sv(i) * sv(i);
            const double gi = (V.col(i).adjoint() * G * V.col(i))(0, 0).real();
            v += gi * dA / (dA + 1.0 / snr);
        }
        return v;
    }
}
