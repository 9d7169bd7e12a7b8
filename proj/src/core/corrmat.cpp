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

#include "core/corrmat.hpp"
#include "core/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>

namespace rischan
{
    namespace
    {
        double sinc(double x)
        {
            if (x == 0.0)
                return 1.0;
            const double px = std::numbers::pi * x;
            return std::sin(px) / px;
        }

        double draw_in_range(std::mt19937_64 &gen, std::normal_distribution<double> &nd, double mean, double sd)
        {
            const double h = std::numbers::pi / 2.0;
            for (;;)
            {
                double v = mean + sd * nd(gen);
                if (v >= -h && v <= h)
                    return v;
            }
        }
    }

    void ScatteringSpec::validate() const
    {
        if (kind == Kind::Isotropic)
            return;
        if (!nominal.in_front())
            fail(ErrorCode::InvalidArgument, "nominal direction lies outside the front half-space");
        if (!(sigma_az > 0.0) || !(sigma_el > 0.0))
            fail(ErrorCode::InvalidArgument, "clustered angular spreads must be positive");
        if (mc_samples < 1000)
            fail(ErrorCode::InvalidArgument, "clustered model needs at least 1000 samples");
    }

    std::string ScatteringSpec::canonical() const
    {
        if (kind == Kind::Isotropic)
            return "iso";
        char buf[160];
        std::snprintf(buf, sizeof(buf), "clu(%.17g,%.17g,%.17g,%.17g,%lld)", nominal.azimuth, nominal.elevation,
                      sigma_az, sigma_el, (long long)mc_samples);
        return buf;
    }

    CorrelationMatrix CorrelationMatrix::from_matrix(const CMat &R)
    {
        if (R.rows() != R.cols() || R.rows() == 0)
            fail(ErrorCode::DimensionMismatch, "correlation matrix must be square and nonempty");
        return from_matrix(R, R.diagonal().real().sum() / double(R.rows()));
    }

    CorrelationMatrix CorrelationMatrix::from_matrix(const CMat &R, double gain)
    {
        if (R.rows() != R.cols() || R.rows() == 0)
            fail(ErrorCode::DimensionMismatch, "correlation matrix must be square and nonempty");
        CMat H = hermitian_part(R);
        Eigh e = eigh_desc(H);
        return from_parts(std::move(H), gain, std::move(e));
    }

    CorrelationMatrix CorrelationMatrix::from_parts(CMat R, double gain, Eigh eig)
    {
        CorrelationMatrix c;
        c.R_ = std::move(R);
        c.gain_ = gain;
        c.eig_ = std::make_shared<const Eigh>(std::move(eig));
        return c;
    }

    CMat CorrelationMatrix::normalized() const
    {
        return gain_ > 0.0 ? CMat(R_ / gain_) : R_;
    }

    int CorrelationMatrix::effective_rank(double fraction) const
    {
        const RVec &d = eig_->values;
        const double target = fraction * trace();
        double acc = 0.0;
        for (Eigen::Index i = 0; i < d.size(); ++i)
        {
            acc += std::max(d(i), 0.0);
            if (acc >= target)
                return int(i + 1);
        }
        return int(d.size());
    }

    CMat CorrelationMatrix::sqrt_factor() const
    {
        const Eigh &e = *eig_;
        RVec s = e.values.cwiseMax(0.0).cwiseSqrt();
        return e.vectors * s.asDiagonal();
    }

    CorrelationMatrix CorrelationMatrix::scaled(double factor) const
    {
        Eigh e = *eig_;
        e.values *= factor;
        return from_parts(R_ * factor, gain_ * factor, std::move(e));
    }

    CorrelationMatrix iso_correlation(const ArrayGeometry &geom)
    {
        auto pos = element_positions(geom);
        const Eigen::Index n = geom.size();
        CMat R(n, n);
        for (Eigen::Index m = 0; m < n; ++m)
            for (Eigen::Index l = 0; l < n; ++l)
            {
                double dy = pos[size_t(m)][1] - pos[size_t(l)][1];
                double dz = pos[size_t(m)][2] - pos[size_t(l)][2];
                R(m, l) = sinc(2.0 * std::sqrt(dy * dy + dz * dz));
            }
        return CorrelationMatrix::from_matrix(R, 1.0);
    }

    CorrelationMatrix clustered_correlation(const ArrayGeometry &geom, const ScatteringSpec &spec, double gain,
                                            std::uint64_t seed)
    {
        if (spec.kind != ScatteringSpec::Kind::Clustered)
            fail(ErrorCode::InvalidArgument, "clustered_correlation needs a clustered spec");
        spec.validate();
        if (!(gain >= 0.0))
            fail(ErrorCode::InvalidArgument, "gain must be nonnegative");

        auto pos = element_positions(geom);
        const Eigen::Index n = geom.size();
        const std::int64_t S = spec.mc_samples;
        std::mt19937_64 gen(seed);
        std::normal_distribution<double> nd(0.0, 1.0);

        CMat acc = CMat::Zero(n, n);
        const std::int64_t chunk = 512;
        CMat A(n, chunk);
        for (std::int64_t s0 = 0; s0 < S; s0 += chunk)
        {
            const std::int64_t len = std::min(chunk, S - s0);
            for (std::int64_t j = 0; j < len; ++j)
            {
                Direction d;
                d.azimuth = draw_in_range(gen, nd, spec.nominal.azimuth, spec.sigma_az);
                d.elevation = draw_in_range(gen, nd, spec.nominal.elevation, spec.sigma_el);
                A.col(j) = array_response(pos, d);
            }
            auto blk = A.leftCols(len);
            acc.noalias() += blk * blk.adjoint();
        }
        acc *= gain / double(S);
        acc = hermitian_part(acc);
        for (Eigen::Index k = 0; k < n; ++k)
            acc(k, k) = cplx(gain, 0.0);
        return CorrelationMatrix::from_matrix(acc, gain);
    }

    CorrelationMatrix build_correlation(const ArrayGeometry &geom, const ScatteringSpec &spec, double gain,
                                        std::uint64_t seed)
    {
        if (spec.kind == ScatteringSpec::Kind::Isotropic)
            return iso_correlation(geom).scaled(gain);
        return clustered_correlation(geom, spec, gain, seed);
    }

    CorrelationMatrix hadamard(const CorrelationMatrix &a, const CorrelationMatrix &b)
    {
        if (a.size() != b.size())
            fail(ErrorCode::DimensionMismatch, "hadamard: sizes " + std::to_string(a.size()) + " and " +
                                                   std::to_string(b.size()) + " differ");
        return CorrelationMatrix::from_matrix(a.matrix().cwiseProduct(b.matrix()), a.gain() * b.gain());
    }

    CorrelationMatrix kron(const CorrelationMatrix &a, const CorrelationMatrix &b)
    {
        const Eigen::Index na = a.size(), nb = b.size();
        const Eigen::Index n = na * nb;
        std::vector<double> vals(static_cast<size_t>(n));
        for (Eigen::Index i = 0; i < na; ++i)
            for (Eigen::Index j = 0; j < nb; ++j)
                vals[size_t(i * nb + j)] = a.eig().values(i) * b.eig().values(j);
        std::vector<Eigen::Index> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), Eigen::Index(0));
        std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return vals[size_t(x)] > vals[size_t(y)]; });

        Eigh e;
        e.values.resize(n);
        e.vectors.resize(n, n);
        for (Eigen::Index k = 0; k < n; ++k)
        {
            Eigen::Index idx = order[size_t(k)];
            Eigen::Index i = idx / nb, j = idx % nb;
            e.values(k) = vals[size_t(idx)];
            for (Eigen::Index p = 0; p < na; ++p)
                e.vectors.col(k).segment(p * nb, nb) = a.eig().vectors(p, i) * b.eig().vectors.col(j);
            normalize_phase(e.vectors.col(k));
        }
        return CorrelationMatrix::from_parts(rischan::kron(a.matrix(), b.matrix()), a.gain() * b.gain(), std::move(e));
    }

    int effective_rank(const CorrelationMatrix &r, double fraction)
    {
        return r.effective_rank(fraction);
    }

    SubspaceBasis leading_subspace(const CorrelationMatrix &r, double fraction)
    {
        const RVec &d = r.eig().values;
        int k = r.effective_rank(fraction);
        const double floor = 1e-12 * std::max(d(0), 0.0);
        while (k > 1 && d(k - 1) < floor)
            --k;
        SubspaceBasis b;
        b.rank = k;
        b.basis = r.eig().vectors.leftCols(k);
        return b;
    }

    ConservativeSubspace conservative_subspace(const ArrayGeometry &bs_geom, const ArrayGeometry &ris_geom,
                                               double fraction)
    {
        ConservativeSubspace cs;
        cs.bs = leading_subspace(iso_correlation(bs_geom), fraction);
        auto ris = iso_correlation(ris_geom);
        cs.ris = leading_subspace(hadamard(ris, ris), fraction);
        cs.rank_x = cs.bs.rank * cs.ris.rank;
        return cs;
    }

    double subspace_containment_defect(const CMat &inner, const SubspaceBasis &outer)
    {
        if (inner.rows() != outer.basis.rows())
            fail(ErrorCode::DimensionMismatch, "containment check: dimension mismatch");
        const double nr = inner.norm();
        if (nr == 0.0)
            return 0.0;
        CMat resid = inner - outer.basis * (outer.basis.adjoint() * inner);
        return resid.norm() / nr;
    }

    double subspace_containment_defect(const CorrelationMatrix &inner, const SubspaceBasis &outer)
    {
        return subspace_containment_defect(inner.matrix(), outer);
    }

    CMat complement_basis(const SubspaceBasis &b)
    {
        const Eigen::Index n = b.basis.rows();
        CMat P = CMat::Identity(n, n) - b.basis * b.basis.adjoint();
        Eigh e = eigh_desc(P);
        return e.vectors.leftCols(n - b.rank);
    }
}
