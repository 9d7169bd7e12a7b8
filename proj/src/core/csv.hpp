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

#ifndef RISCHAN_CSV_HPP
#define RISCHAN_CSV_HPP

#include "core/sweep.hpp"

#include <string>
#include <vector>

namespace rischan
{
    inline constexpr const char *csv_header = "axis,estimator,design,emi_mode,nmse_db_closed,nmse_db_mc,stderr_db,trials,seconds";

    const char *code_version();

    std::string format_csv(const SweepTable &table);
    std::string format_manifest(const SweepTable &table);

    // Writes <path> and <path>.manifest.json
    void emit_csv(const SweepTable &table, const std::string &path);

    std::vector<SweepRow> parse_csv(const std::string &text);
}

#endif
