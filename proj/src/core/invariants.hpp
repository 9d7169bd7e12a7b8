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

#ifndef RISCHAN_INVARIANTS_HPP
#define RISCHAN_INVARIANTS_HPP

#include "core/channel.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rischan
{
    struct InvariantResult
    {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    // Reference-scenario angles with unit gains on the given arrays
    ScenarioConfig reference_scenario(const ArrayGeometry &bs, const ArrayGeometry &ris, std::int64_t mc_samples,
                                   std::uint64_t seed);

    // Quick self-check of the library invariants at desk scale
    std::vector<InvariantResult> run_invariants(const std::function<void(const InvariantResult &)> &on_result = {});
}

#endif
