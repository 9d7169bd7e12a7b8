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

#include "core/corr_cache.hpp"
#include "core/corrmat.hpp"
#include "core/error.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>

using namespace rischan;
using namespace rischan::testing;

namespace
{
    ScatteringSpec cluster(double az, double el, double sigma, std::int64_t samples = 100000)
    {
        ScatteringSpec s;
        s.kind = ScatteringSpec::Kind::Clustered;
        s.nominal = {az, el};
        s.sigma_az = s.sigma_el = sigma;
        s.mc_samples = samples;
        return s;
    }

    double min_eig_ratio(const CorrelationMatrix &r)
    {
        return r.eig().values.minCoeff() / r.eig().values.maxCoeff();
    }
}

TEST_CASE("iso_correlation oracles")
{
    auto r3 = iso_correlation({3, 2, 0.3, 0.4});
    CHECK((r3.matrix().diagonal().array() - cplx(1, 0)).abs().maxCoeff() == 0.0);
    CHECK(r3.gain() == 1.0);

    auto half = iso_correlation({2, 1, 0.5, 0.5});
    CHECK(std::abs(half.matrix()(0, 1)) < 1e-16);

    auto quarter = iso_correlation({2, 1, 0.25, 0.25});
    CHECK(quarter.matrix()(0, 1).real() == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-14));
    CHECK(quarter.matrix()(0, 1).imag() == 0.0);
}

TEST_CASE("CorrelationMatrix invariants")
{
    auto r = iso_correlation({6, 6, 0.125, 0.125});
    const CMat &R = r.matrix();
    CHECK(max_abs(R - R.adjoint()) <= 1e-12 * max_abs(R));
    CHECK(min_eig_ratio(r) >= -1e-10);
    const RVec &d = r.eig().values;
    for (Eigen::Index i = 1; i < d.size(); ++i)
        CHECK(d(i) <= d(i - 1));
    CHECK(rel(r.trace(), r.gain() * double(r.size())) < 1e-8);
    // eigenvector phase convention: largest entry real positive
    for (Eigen::Index k = 0; k < 5; ++k)
    {
        const RVec mag = r.eig().vectors.col(k).cwiseAbs();
        Eigen::Index imax = 0;
        while (mag(imax) < mag.maxCoeff() * (1.0 - 1e-9))
            ++imax;
        CHECK(r.eig().vectors(imax, k).imag() == 0.0);
        CHECK(r.eig().vectors(imax, k).real() > 0.0);
    }
}

TEST_CASE("clustered_correlation")
{
    const ArrayGeometry g{4, 4, 0.125, 0.125};
    const double pi = std::numbers::pi;

    SUBCASE("narrow cluster collapses to a rank-one matrix")
    {
        auto s = cluster(pi / 4, 0.0, 1e-9, 2000);
        auto r = clustered_correlation(g, s, 2.5, 1);
        CVec a = array_response(g, s.nominal);
        CHECK(max_abs(r.matrix() - 2.5 * a * a.adjoint()) < 1e-6);
        CHECK(r.effective_rank() == 1);
    }
    SUBCASE("diagonal equals the gain")
    {
        auto r = clustered_correlation(g, cluster(-pi / 4, -pi / 6, pi / 36), 0.7, 3);
        CHECK((r.matrix().diagonal().real().array() - 0.7).abs().maxCoeff() <= 0.007);
        CHECK(r.gain() == 0.7);
    }
    SUBCASE("two seeds agree to Monte-Carlo accuracy")
    {
        auto s = cluster(pi / 4, 0.0, pi / 36);
        auto a = clustered_correlation(g, s, 1.0, 11);
        auto b = clustered_correlation(g, s, 1.0, 12);
        CHECK((a.matrix() - b.matrix()).norm() / a.matrix().norm() <= 0.02);
    }
    SUBCASE("deterministic under a fixed seed")
    {
        auto s = cluster(0.1, 0.2, 0.05, 5000);
        auto a = clustered_correlation(g, s, 1.0, 42);
        auto b = clustered_correlation(g, s, 1.0, 42);
        CHECK(a.matrix() == b.matrix());
    }
    SUBCASE("angles stay in the front half-space near the edge")
    {
        // a wide cluster at the boundary still yields a valid PSD matrix
        auto r = clustered_correlation(g, cluster(pi / 2, 0.0, 0.5, 5000), 1.0, 4);
        CHECK(min_eig_ratio(r) >= -1e-10);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(clustered_correlation(g, cluster(2.0, 0.0, 0.1), 1.0, 1), Error);
        CHECK_THROWS_AS(clustered_correlation(g, cluster(0.0, 0.0, 0.0), 1.0, 1), Error);
        CHECK_THROWS_AS(clustered_correlation(g, cluster(0.0, 0.0, 0.1, 10), 1.0, 1), Error);
        CHECK_THROWS_AS(clustered_correlation(g, ScatteringSpec{}, 1.0, 1), Error);
    }
}

TEST_CASE("hadamard")
{
    Rng rng(5);
    auto b = random_psd(8, rng);
    auto I = CorrelationMatrix::from_matrix(CMat::Identity(8, 8));
    auto ones = CorrelationMatrix::from_matrix(CMat::Ones(8, 8));

    CMat diag_b = b.matrix().diagonal().asDiagonal();
    CHECK(max_abs(hadamard(I, b).matrix() - diag_b) == 0.0);
    CHECK(max_abs(hadamard(ones, b).matrix() - b.matrix()) == 0.0);

    for (int rep = 0; rep < 10; ++rep)
    {
        auto x = random_psd(8, rng, 3), y = random_psd(8, rng, 2);
        auto h = hadamard(x, y);
        CHECK(min_eig_ratio(h) >= -1e-10);
        CHECK(h.gain() == doctest::Approx(x.gain() * y.gain()));
    }
    CHECK_THROWS_AS(hadamard(I, random_psd(4, rng)), Error);
}

TEST_CASE("kron")
{
    Rng rng(6);
    auto r = random_psd(3, rng);
    auto I2 = CorrelationMatrix::from_matrix(CMat::Identity(2, 2));
    auto k = kron(I2, r);
    CHECK(max_abs(k.matrix().block(0, 0, 3, 3) - r.matrix()) == 0.0);
    CHECK(max_abs(k.matrix().block(3, 3, 3, 3) - r.matrix()) == 0.0);
    CHECK(max_abs(k.matrix().block(0, 3, 3, 3)) == 0.0);

    auto a = iso_correlation({2, 2, 0.25, 0.25});
    auto b = iso_correlation({3, 3, 0.125, 0.125});
    auto ab = kron(a, b);
    std::vector<double> want;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j)
            want.push_back(a.eig().values(i) * b.eig().values(j));
    std::sort(want.rbegin(), want.rend());
    for (size_t i = 0; i < want.size(); ++i)
        CHECK(ab.eig().values(Eigen::Index(i)) == doctest::Approx(want[i]).epsilon(1e-12));
    CHECK(ab.trace() == doctest::Approx(a.trace() * b.trace()).epsilon(1e-14));

    // the assembled eigenbasis diagonalizes the product
    CMat D = ab.eig().vectors.adjoint() * ab.matrix() * ab.eig().vectors;
    CMat want_d = ab.eig().values.cast<cplx>().asDiagonal();
    CHECK(max_abs(D - want_d) < 1e-12);
    CHECK(min_eig_ratio(ab) >= -1e-10);
}

TEST_CASE("effective_rank")
{
    CHECK(effective_rank(CorrelationMatrix::from_matrix(CMat::Identity(4, 4))) == 4);
    CVec a = array_response({4, 4, 0.125, 0.125}, {0.4, 0.1});
    CHECK(effective_rank(CorrelationMatrix::from_matrix(a * a.adjoint())) == 1);

    auto r256 = iso_correlation({16, 16, 0.125, 0.125});
    CHECK(effective_rank(hadamard(r256, r256)) == 118);
    auto r256d = iso_correlation({16, 16, 0.0625, 0.0625});
    CHECK(effective_rank(hadamard(r256d, r256d)) == 51);

    SUBCASE("monotone in the fraction")
    {
        auto r = iso_correlation({8, 8, 0.1, 0.15});
        int prev = 0;
        for (double f = 0.05; f < 1.0; f += 0.05)
        {
            int k = effective_rank(r, f);
            CHECK(k >= prev);
            prev = k;
        }
        CHECK(effective_rank(r, 1.0 - 1e-6) >= prev);
    }
}

TEST_CASE("conservative_subspace")
{
    auto one = conservative_subspace({1, 1, 0.5, 0.5}, {2, 2, 0.5, 0.5});
    CHECK(one.bs.rank == 1);
    CHECK(std::abs(one.bs.basis(0, 0) - cplx(1, 0)) < 1e-15);
    CHECK(one.ris.rank == 4);
    CHECK(one.rank_x == 4);

    auto cs = conservative_subspace(desk_bs, desk_ris);
    CHECK(cs.bs.rank == 4);
    CHECK(cs.ris.rank == 15);
    CHECK(cs.rank_x == 60);
    for (const auto *b : {&cs.bs, &cs.ris})
    {
        CMat G = b->basis.adjoint() * b->basis;
        CHECK(max_abs(G - CMat::Identity(b->rank, b->rank)) <= 1e-10);
    }
}

TEST_CASE("subspace_containment_defect")
{
    auto r = iso_correlation({4, 4, 0.25, 0.25});
    CHECK(subspace_containment_defect(r, leading_subspace(r, 1.0)) <= 1e-10);

    // clustered channels sit inside the conservative basis
    const double pi = std::numbers::pi;
    auto cs = conservative_subspace(desk_bs, desk_ris);
    auto Rh = clustered_correlation(desk_ris, cluster(pi / 4, 0.0, pi / 36), 1.0, 1);
    auto Rg = clustered_correlation(desk_ris, cluster(-pi / 4, -pi / 6, pi / 36), 1.0, 2);
    CHECK(subspace_containment_defect(hadamard(Rh, Rg), cs.ris) <= 1e-3);
    for (int seed = 0; seed < 4; ++seed)
    {
        auto Ra = clustered_correlation(desk_ris, cluster(-0.6 + 0.4 * seed, 0.3 - 0.2 * seed, 0.08, 20000), 1.0, seed);
        auto Rb = clustered_correlation(desk_ris, cluster(0.5 - 0.3 * seed, -0.1 * seed, 0.05, 20000), 1.0, 10 + seed);
        CHECK(subspace_containment_defect(hadamard(Ra, Rb), cs.ris) <= 1e-3);
    }

    // rank-one matrix along a direction the truncated basis drops
    SubspaceBasis lead = leading_subspace(r, 0.9);
    CMat comp = complement_basis(lead);
    CVec v = comp.col(0);
    CHECK(subspace_containment_defect(CMat(v * v.adjoint()), lead) > 0.5);

    CHECK_THROWS_AS(subspace_containment_defect(CMat::Identity(3, 3), lead), Error);
}

TEST_CASE("correlation cache round-trips bit for bit")
{
    const auto dir = std::filesystem::temp_directory_path() / "rischan_cache_test";
    std::filesystem::remove_all(dir);
    CorrelationCache cache(dir);
    auto spec = cluster(0.3, -0.2, 0.06, 3000);
    auto fresh = build_correlation(desk_ris, spec, 0.25, 77);
    auto first = cache.get_or_build(desk_ris, spec, 0.25, 77);
    REQUIRE(std::filesystem::exists(cache.file_for(correlation_cache_key(desk_ris, spec, 0.25, 77))));
    auto second = cache.get_or_build(desk_ris, spec, 0.25, 77);
    CHECK(first.matrix() == fresh.matrix());
    CHECK(second.matrix() == fresh.matrix());
    CHECK(second.gain() == fresh.gain());
    CHECK(second.eig().values == fresh.eig().values);
    CHECK(second.eig().vectors == fresh.eig().vectors);

    // another key misses
    CHECK_FALSE(cache.load(correlation_cache_key(desk_ris, spec, 0.25, 78)).has_value());

    // a damaged file is ignored and rebuilt
    const auto path = cache.file_for(correlation_cache_key(desk_ris, spec, 0.25, 77));
    std::filesystem::resize_file(path, 40);
    CHECK_FALSE(cache.load(correlation_cache_key(desk_ris, spec, 0.25, 77)).has_value());
    CHECK(cache.get_or_build(desk_ris, spec, 0.25, 77).matrix() == fresh.matrix());
    std::filesystem::remove_all(dir);
}
