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

#ifndef RISCHAN_CORRMAT_HPP
#define RISCHAN_CORRMAT_HPP

#include "core/geometry.hpp"
#include "core/linalg.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace rischan
{
    inline constexpr double default_rank_fraction = 1.0 - 1e-6;

    struct ScatteringSpec
    {
        enum class Kind
        {
            Isotropic,
            Clustered
        };
        Kind kind = Kind::Isotropic;
        Direction nominal;           // Clustered only
        double sigma_az = 0.0;       // radians
        double sigma_el = 0.0;       // radians
        std::int64_t mc_samples = 100000;

        void validate() const;
        std::string canonical() const; // stable text form, used in cache keys and hashes
    };

    // Hermitian PSD matrix with gain and descending eigendecomposition.
    // The stored matrix is gain-scaled; normalized() divides the gain back out.
    class CorrelationMatrix
    {
    public:
        CorrelationMatrix() = default;

        // gain defaults to trace/N
        static CorrelationMatrix from_matrix(const CMat &R);
        static CorrelationMatrix from_matrix(const CMat &R, double gain);

        // Builds from precomputed eigenpairs (no decomposition performed)
        static CorrelationMatrix from_parts(CMat R, double gain, Eigh eig);

        const CMat &matrix() const { return R_; }
        CMat normalized() const;
        double gain() const { return gain_; }
        const Eigh &eig() const { return *eig_; }
        Eigen::Index size() const { return R_.rows(); }
        double trace() const { return R_.diagonal().real().sum(); }
        int effective_rank(double fraction = default_rank_fraction) const;

        // R^{1/2} factor U*sqrt(max(d,0)) so that L L^H = R
        CMat sqrt_factor() const;

        CorrelationMatrix scaled(double factor) const;

    private:
        CMat R_;
        double gain_ = 0.0;
        std::shared_ptr<const Eigh> eig_;
    };

    struct SubspaceBasis
    {
        CMat basis; // N x r, orthonormal columns
        int rank = 0;
    };

    struct ConservativeSubspace
    {
        SubspaceBasis bs;  // U_g'
        SubspaceBasis ris; // U_hg
        int rank_x = 0;    // bs.rank * ris.rank
    };

    CorrelationMatrix iso_correlation(const ArrayGeometry &geom);

    CorrelationMatrix clustered_correlation(const ArrayGeometry &geom, const ScatteringSpec &spec, double gain,
                                            std::uint64_t seed);

    // Isotropic or clustered depending on spec.kind
    CorrelationMatrix build_correlation(const ArrayGeometry &geom, const ScatteringSpec &spec, double gain,
                                        std::uint64_t seed);

    CorrelationMatrix hadamard(const CorrelationMatrix &a, const CorrelationMatrix &b);

    // Materializes the Kronecker product; the eigenbasis is assembled from the factors
    CorrelationMatrix kron(const CorrelationMatrix &a, const CorrelationMatrix &b);

    int effective_rank(const CorrelationMatrix &r, double fraction = default_rank_fraction);

    // Leading eigenvectors up to the effective rank, dropping eigenvalues below 1e-12*max
    SubspaceBasis leading_subspace(const CorrelationMatrix &r, double fraction = default_rank_fraction);

    ConservativeSubspace conservative_subspace(const ArrayGeometry &bs_geom, const ArrayGeometry &ris_geom,
                                               double fraction = default_rank_fraction);

    // || (I - B B^H) R ||_F / || R ||_F
    double subspace_containment_defect(const CMat &inner, const SubspaceBasis &outer);
    double subspace_containment_defect(const CorrelationMatrix &inner, const SubspaceBasis &outer);

    // Orthogonal complement of a basis inside C^N
    CMat complement_basis(const SubspaceBasis &b);
}

#endif
