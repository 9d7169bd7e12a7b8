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

#ifndef RISCHAN_LINALG_HPP
#define RISCHAN_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace rischan
{
    using cplx = std::complex<double>;
    using CMat = Eigen::MatrixXcd;
    using CVec = Eigen::VectorXcd;
    using RVec = Eigen::VectorXd;
    using RMat = Eigen::MatrixXd;

    // Hermitian eigendecomposition, eigenvalues descending.
    // Each eigenvector is scaled so its largest-magnitude entry is real positive.
    struct Eigh
    {
        RVec values;
        CMat vectors;
    };

    Eigh eigh_desc(const CMat &A);

    CMat hermitian_part(const CMat &A);

    // Unitary DFT, entry (t,k) = exp(-j 2 pi t k / n) / sqrt(n)
    CMat unitary_dft(Eigen::Index n);

    CMat kron(const CMat &A, const CMat &B);

    // Phase-normalize a single column in place (largest entry real positive)
    void normalize_phase(Eigen::Ref<CVec> v);

    // max |A_ij|
    double max_abs(const CMat &A);
}

#endif
