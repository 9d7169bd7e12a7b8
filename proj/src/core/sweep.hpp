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

#ifndef RISCHAN_SWEEP_HPP
#define RISCHAN_SWEEP_HPP

#include "core/config.hpp"

#include <string>
#include <vector>

namespace rischan
{
    struct SweepRow
    {
        double axis = 0.0;
        std::string estimator;
        std::string design;
        std::string emi_mode;
        double nmse_db_closed = 0.0; // nan where undefined
        double nmse_db_mc = 0.0;     // nan without trials
        double stderr_db = 0.0;
        std::int64_t trials = 0;
        double seconds = 0.0;
        std::string error; // empty on success
    };

    struct SweepTable
    {
        std::vector<SweepRow> rows;
        std::uint64_t seed = 0;
        std::string config_hash;
        double wall_seconds = 0.0;
    };

    // Aggregate per-trial squared errors: returns (nmse_db, stderr_db)
    std::pair<double, double> aggregate_nmse_db(const std::vector<double> &sq_errors, double trace_rx);

    SweepTable run_sweep(const SweepSpec &spec);
}

#endif
