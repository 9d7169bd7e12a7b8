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

#include "core/linalg.hpp"

#include <cmath>
#include <numbers>

namespace rischan
{
    void normalize_phase(Eigen::Ref<CVec> v)
    {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < v.size(); ++i)
        {
            // small slack so near-ties resolve to the lowest index
            double a = std::abs(v(i));
            if (a > best * (1.0 + 1e-10))
            {
                best = a;
                imax = i;
            }
        }
        if (best <= 0.0)
            return;
        cplx ph = std::conj(v(imax)) / std::abs(v(imax));
        v *= ph;
        v(imax) = cplx(std::abs(v(imax)), 0.0);
    }

    Eigh eigh_desc(const CMat &A)
    {
        Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(A));
        const Eigen::Index n = A.rows();
        Eigh out;
        out.values.resize(n);
        out.vectors.resize(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
        {
            out.values(i) = es.eigenvalues()(n - 1 - i);
            out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
            normalize_phase(out.vectors.col(i));
        }
        return out;
    }

    CMat hermitian_part(const CMat &A)
    {
        return 0.5 * (A + A.adjoint());
    }

    CMat unitary_dft(Eigen::Index n)
    {
        CMat F(n, n);
        const double s = 1.0 / std::sqrt(double(n));
        for (Eigen::Index t = 0; t < n; ++t)
            for (Eigen::Index k = 0; k < n; ++k)
            {
                // reduce the exponent mod n to keep the phase argument small
                double ang = -2.0 * std::numbers::pi * double((t * k) % n) / double(n);
                F(t, k) = s * cplx(std::cos(ang), std::sin(ang));
            }
        return F;
    }

    CMat kron(const CMat &A, const CMat &B)
    {
        CMat K(A.rows() * B.rows(), A.cols() * B.cols());
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            for (Eigen::Index j = 0; j < A.cols(); ++j)
                K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        return K;
    }

    double max_abs(const CMat &A)
    {
        return A.size() ? A.cwiseAbs().maxCoeff() : 0.0;
    }
}
