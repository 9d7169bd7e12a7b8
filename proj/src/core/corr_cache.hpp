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

#ifndef RISCHAN_CORR_CACHE_HPP
#define RISCHAN_CORR_CACHE_HPP

#include "core/corrmat.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace rischan
{
    std::uint64_t fnv1a64(const std::string &s);

    std::string correlation_cache_key(const ArrayGeometry &geom, const ScatteringSpec &spec, double gain,
                                      std::uint64_t seed);

    // On-disk store of correlation matrices. Layout is described in docs/cache-format.md.
    // An empty directory disables the cache.
    class CorrelationCache
    {
    public:
        CorrelationCache() = default;
        explicit CorrelationCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

        bool enabled() const { return !dir_.empty(); }

        CorrelationMatrix get_or_build(const ArrayGeometry &geom, const ScatteringSpec &spec, double gain,
                                       std::uint64_t seed) const;

        std::optional<CorrelationMatrix> load(const std::string &key) const;
        void store(const std::string &key, const CorrelationMatrix &r) const;
        std::filesystem::path file_for(const std::string &key) const;

    private:
        std::filesystem::path dir_;
    };
}

#endif
