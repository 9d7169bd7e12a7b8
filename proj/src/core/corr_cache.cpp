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
#include "core/error.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

namespace rischan
{
    namespace
    {
        constexpr char magic[8] = {'R', 'I', 'S', 'C', 'M', 'A', 'T', '\0'};
        constexpr std::uint32_t format_version = 1;

        static_assert(std::endian::native == std::endian::little, "cache format assumes a little-endian host");

        template <typename T>
        void put(std::ostream &os, T v) { os.write(reinterpret_cast<const char *>(&v), sizeof(T)); }

        template <typename T>
        bool get(std::istream &is, T &v) { return bool(is.read(reinterpret_cast<char *>(&v), sizeof(T))); }
    }

    std::uint64_t fnv1a64(const std::string &s)
    {
        std::uint64_t h = 14695981039346656037ull;
        for (unsigned char c : s)
        {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

    std::string correlation_cache_key(const ArrayGeometry &geom, const ScatteringSpec &spec, double gain,
                                      std::uint64_t seed)
    {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "upa(%d,%d,%.17g,%.17g)|gain=%.17g|seed=%llu|", geom.rows_h, geom.rows_v,
                      geom.spacing_h, geom.spacing_v, gain, (unsigned long long)seed);
        return std::string(buf) + spec.canonical();
    }

    std::filesystem::path CorrelationCache::file_for(const std::string &key) const
    {
        char name[40];
        std::snprintf(name, sizeof(name), "%016llx.rcm", (unsigned long long)fnv1a64(key));
        return dir_ / name;
    }

    std::optional<CorrelationMatrix> CorrelationCache::load(const std::string &key) const
    {
        if (!enabled())
            return std::nullopt;
        std::ifstream is(file_for(key), std::ios::binary);
        if (!is)
            return std::nullopt;
        char m[8];
        std::uint32_t ver = 0, reserved = 0, klen = 0;
        std::uint64_t khash = 0, n = 0;
        double gain = 0.0;
        if (!is.read(m, 8) || std::memcmp(m, magic, 8) != 0)
            return std::nullopt;
        if (!get(is, ver) || ver != format_version || !get(is, reserved) || !get(is, khash) || !get(is, klen))
            return std::nullopt;
        std::string stored(klen, '\0');
        if (!is.read(stored.data(), klen) || stored != key || khash != fnv1a64(key))
            return std::nullopt;
        if (!get(is, n) || !get(is, gain) || n == 0 || n > (1u << 16))
            return std::nullopt;
        std::vector<double> buf(static_cast<size_t>(2 * n * n));
        if (!is.read(reinterpret_cast<char *>(buf.data()), std::streamsize(buf.size() * sizeof(double))))
            return std::nullopt;
        CMat R(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < n; ++j)
            {
                size_t o = size_t(2 * (i * n + j));
                R(Eigen::Index(i), Eigen::Index(j)) = cplx(buf[o], buf[o + 1]);
            }
        return CorrelationMatrix::from_matrix(R, gain);
    }

    void CorrelationCache::store(const std::string &key, const CorrelationMatrix &r) const
    {
        if (!enabled())
            return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec)
            fail(ErrorCode::Io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
        auto final_path = file_for(key);
        auto tmp = final_path;
        tmp += ".tmp";
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os)
                fail(ErrorCode::Io, "cannot write cache file " + tmp.string());
            os.write(magic, 8);
            put<std::uint32_t>(os, format_version);
            put<std::uint32_t>(os, 0);
            put<std::uint64_t>(os, fnv1a64(key));
            put<std::uint32_t>(os, std::uint32_t(key.size()));
            os.write(key.data(), std::streamsize(key.size()));
            const auto n = std::uint64_t(r.size());
            put<std::uint64_t>(os, n);
            put<double>(os, r.gain());
            for (Eigen::Index i = 0; i < r.size(); ++i)
                for (Eigen::Index j = 0; j < r.size(); ++j)
                {
                    put<double>(os, r.matrix()(i, j).real());
                    put<double>(os, r.matrix()(i, j).imag());
                }
            if (!os)
                fail(ErrorCode::Io, "short write on cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, final_path, ec);
        if (ec)
            fail(ErrorCode::Io, "cannot finalize cache file " + final_path.string() + ": " + ec.message());
    }

    CorrelationMatrix CorrelationCache::get_or_build(const ArrayGeometry &geom, const ScatteringSpec &spec,
                                                     double gain, std::uint64_t seed) const
    {
        // isotropic matrices are cheap and deterministic; only cache the MC ones
        if (!enabled() || spec.kind == ScatteringSpec::Kind::Isotropic)
            return build_correlation(geom, spec, gain, seed);
        const std::string key = correlation_cache_key(geom, spec, gain, seed);
        if (auto hit = load(key))
            return *hit;
        auto r = build_correlation(geom, spec, gain, seed);
        store(key, r);
        return r;
    }
}
