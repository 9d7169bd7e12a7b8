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

#ifndef RISCHAN_PHASEOPT_HPP
#define RISCHAN_PHASEOPT_HPP

#include "core/corrmat.hpp"
#include "core/rng.hpp"
#include "core/waterfill.hpp"

#include <vector>

namespace rischan
{
    struct PhaseShiftMatrix
    {
        enum class Regime
        {
            Relaxed,     // ||Phi||_F^2 <= N tau_p
            UnitModulus, // |Phi_tn| = 1
            Quantized    // angles on the 2^bits grid
        };
        CMat entries; // tau_p x N
        Regime regime = Regime::Relaxed;
        int bits = 0;

        static PhaseShiftMatrix relaxed(CMat e);
        static PhaseShiftMatrix unit_modulus(CMat e);
        static PhaseShiftMatrix quantized(CMat e, int bits);

        Eigen::Index pilot_len() const { return entries.rows(); }
        Eigen::Index elements() const { return entries.cols(); }
        void validate() const;
    };

    // Eigenstructure behind the EMI-aware LMMSE design:
    // B = R_hg + inv_sir R_wg = U_B D_B U_B^H on its positive part, and
    // G = D_B^{-1/2} U_B^H R_hg^2 U_B D_B^{-1/2}
    struct BGDecomposition
    {
        CMat basis;  // U_B,1, N x r_B
        RVec b_eigs; // D_B,1
        CMat G;
        RVec g_diag;
    };

    BGDecomposition build_B_and_G(const CMat &R_hg, const CMat &R_wg, double inv_sir);

    struct LmmseDesign
    {
        PhaseShiftMatrix phi;
        WaterfillSolution allocation;
        WaterfillProblem problem;
    };

    // Phi = S Lambda U_B^H with S the tau_p-point unitary DFT
    LmmseDesign lmmse_optimal_phi(const RVec &bs_eigs, const BGDecomposition &bg, double snr, int tau_p);

    // Same without EMI, built directly on the eigenpairs of R_hg
    LmmseDesign lmmse_optimal_phi_no_emi(const RVec &bs_eigs, const CorrelationMatrix &R_hg, double snr, int tau_p);

    PhaseShiftMatrix rsls_optimal_phi(const SubspaceBasis &Uhg, int tau_p);

    PhaseShiftMatrix project_unit_modulus(const PhaseShiftMatrix &phi);

    PhaseShiftMatrix quantize_phases(const PhaseShiftMatrix &phi, int bits);

    // tr((U^H Phi^H Phi U)^{-1})
    double rsls_noise_cost(const CMat &phi, const CMat &Uhg);

    struct MMResult
    {
        PhaseShiftMatrix phi;
        std::vector<double> costs; // costs[0] at the start, costs[k] after iteration k
    };

    MMResult mm_refine(const PhaseShiftMatrix &phi0, const SubspaceBasis &Uhg, int iters);

    enum class BaselineKind
    {
        Dft,
        Random
    };

    PhaseShiftMatrix baseline_phi(BaselineKind kind, int tau_p, Eigen::Index N, Rng &rng);

    // Rescale so that ||Phi||_F^2 = N tau_p
    CMat scale_to_budget(const CMat &phi);

    // LMMSE maximization objective tr(R_x Phi_M^H (Phi_M (R_gp kron B) Phi_M^H + I/snr)^{-1} Phi_M R_x),
    // evaluated densely and through the singular values of Phi_M U_B D_B^{1/2}. Small instances only.
    double lmmse_objective_direct(const CMat &phi, const CMat &R_gp, const CMat &R_hg, const CMat &R_wg,
                                  double inv_sir, double snr);
    double lmmse_objective_eigenform(const CMat &phi, const CMat &R_gp, const CMat &R_hg, const CMat &R_wg,
                                     double inv_sir, double snr);
}

#endif
