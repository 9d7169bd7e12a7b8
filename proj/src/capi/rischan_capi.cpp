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

#include "rischan/rischan.h"

#include "core/config.hpp"
#include "core/corrmat.hpp"
#include "core/csv.hpp"
#include "core/error.hpp"
#include "core/invariants.hpp"
#include "core/sweep.hpp"

#include <new>
#include <string>

struct rischan_config
{
    rischan::SweepSpec spec;
};

struct rischan_table
{
    rischan::SweepTable table;
};

namespace
{
    thread_local std::string last_error;

    rischan_status map_code(rischan::ErrorCode c)
    {
        using rischan::ErrorCode;
        switch (c)
        {
        case ErrorCode::InvalidArgument: return RISCHAN_INVALID_ARGUMENT;
        case ErrorCode::DimensionMismatch: return RISCHAN_DIMENSION;
        case ErrorCode::RankDeficient: return RISCHAN_RANK;
        case ErrorCode::Singular: return RISCHAN_SINGULAR;
        case ErrorCode::Config: return RISCHAN_CONFIG;
        case ErrorCode::Io: return RISCHAN_IO;
        case ErrorCode::Infeasible: return RISCHAN_INFEASIBLE;
        }
        return RISCHAN_INTERNAL;
    }

    template <typename Fn>
    rischan_status guard(Fn &&fn)
    {
        try
        {
            last_error.clear();
            fn();
            return RISCHAN_OK;
        }
        catch (const rischan::Error &e)
        {
            last_error = e.what();
            return map_code(e.code());
        }
        catch (const std::bad_alloc &)
        {
            last_error = "out of memory";
            return RISCHAN_INTERNAL;
        }
        catch (const std::exception &e)
        {
            last_error = e.what();
            return RISCHAN_INTERNAL;
        }
        catch (...)
        {
            last_error = "unknown error";
            return RISCHAN_INTERNAL;
        }
    }

    rischan_status null_arg(const char *what)
    {
        last_error = std::string("null argument: ") + what;
        return RISCHAN_INVALID_ARGUMENT;
    }

    rischan::Profile profile_of(const char *p)
    {
        if (!p)
            return rischan::Profile::Paper;
        auto pr = rischan::parse_profile(p);
        if (!pr)
            rischan::fail(rischan::ErrorCode::InvalidArgument, std::string("unknown profile '") + p + "'");
        return *pr;
    }
}

extern "C" {

const char *rischan_version(void) { return rischan::code_version(); }

const char *rischan_status_name(rischan_status s)
{
    switch (s)
    {
    case RISCHAN_OK: return "ok";
    case RISCHAN_INVALID_ARGUMENT: return "invalid_argument";
    case RISCHAN_DIMENSION: return "dimension";
    case RISCHAN_RANK: return "rank";
    case RISCHAN_SINGULAR: return "singular";
    case RISCHAN_CONFIG: return "config";
    case RISCHAN_IO: return "io";
    case RISCHAN_INFEASIBLE: return "infeasible";
    case RISCHAN_INTERNAL: return "internal";
    }
    return "unknown";
}

const char *rischan_last_error(void) { return last_error.c_str(); }

rischan_status rischan_config_load(const char *path, const char *profile, rischan_config **out)
{
    if (!path)
        return null_arg("path");
    if (!out)
        return null_arg("out");
    *out = nullptr;
    return guard([&] { *out = new rischan_config{rischan::load_config(path, profile_of(profile))}; });
}

rischan_status rischan_config_load_string(const char *text, const char *profile, rischan_config **out)
{
    if (!text)
        return null_arg("text");
    if (!out)
        return null_arg("out");
    *out = nullptr;
    return guard([&] { *out = new rischan_config{rischan::load_config_string(text, profile_of(profile))}; });
}

rischan_status rischan_config_set_seed(rischan_config *cfg, uint64_t seed)
{
    if (!cfg)
        return null_arg("cfg");
    return guard([&] { cfg->spec.base.seed = seed; });
}

rischan_status rischan_config_set_trials(rischan_config *cfg, int64_t trials)
{
    if (!cfg)
        return null_arg("cfg");
    return guard([&] {
        if (trials < 0)
            rischan::fail(rischan::ErrorCode::InvalidArgument, "trial count must be nonnegative");
        cfg->spec.base.trials = trials;
    });
}

rischan_status rischan_config_set_timing(rischan_config *cfg, int enabled)
{
    if (!cfg)
        return null_arg("cfg");
    return guard([&] { cfg->spec.record_timing = enabled != 0; });
}

rischan_status rischan_config_output(const rischan_config *cfg, const char **path)
{
    if (!cfg)
        return null_arg("cfg");
    if (!path)
        return null_arg("path");
    *path = cfg->spec.output.c_str();
    return guard([] {});
}

void rischan_config_free(rischan_config *cfg) { delete cfg; }

rischan_status rischan_ranks_of(const rischan_config *cfg, rischan_ranks *out)
{
    if (!cfg)
        return null_arg("cfg");
    if (!out)
        return null_arg("out");
    return guard([&] {
        const auto &b = cfg->spec.base;
        auto cs = rischan::conservative_subspace(b.bs, b.ris, b.rank_fraction);
        *out = {cs.bs.rank, cs.ris.rank, cs.rank_x};
    });
}

rischan_status rischan_run(const rischan_config *cfg, rischan_table **out)
{
    if (!cfg)
        return null_arg("cfg");
    if (!out)
        return null_arg("out");
    *out = nullptr;
    return guard([&] { *out = new rischan_table{rischan::run_sweep(cfg->spec)}; });
}

size_t rischan_table_rows(const rischan_table *table) { return table ? table->table.rows.size() : 0; }

rischan_status rischan_table_row(const rischan_table *table, size_t index, rischan_row *row)
{
    if (!table)
        return null_arg("table");
    if (!row)
        return null_arg("row");
    if (index >= table->table.rows.size())
    {
        last_error = "row index out of range";
        return RISCHAN_INVALID_ARGUMENT;
    }
    const auto &r = table->table.rows[index];
    *row = {r.axis, r.estimator.c_str(), r.design.c_str(), r.emi_mode.c_str(), r.nmse_db_closed, r.nmse_db_mc,
            r.stderr_db, r.trials, r.seconds, r.error.c_str()};
    return guard([] {});
}

rischan_status rischan_table_write_csv(const rischan_table *table, const char *path)
{
    if (!table)
        return null_arg("table");
    if (!path)
        return null_arg("path");
    return guard([&] { rischan::emit_csv(table->table, path); });
}

void rischan_table_free(rischan_table *table) { delete table; }

rischan_status rischan_check(rischan_check_callback cb, void *user, int *failures)
{
    return guard([&] {
        int bad = 0;
        rischan::run_invariants([&](const rischan::InvariantResult &r) {
            bad += r.pass ? 0 : 1;
            if (cb)
                cb(r.name.c_str(), r.pass ? 1 : 0, r.detail.c_str(), user);
        });
        if (failures)
            *failures = bad;
    });
}

} // extern "C"
