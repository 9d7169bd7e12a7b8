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

// rischan command-line driver. Talks to the simulator only through the C API.

#include <rischan/rischan.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace
{
    int report(const std::string &kind, const std::string &message, int code = 1)
    {
        nlohmann::json j{{"error", kind}, {"message", message}};
        std::cerr << j.dump() << std::endl;
        return code;
    }

    int report_status(rischan_status s)
    {
        return report(rischan_status_name(s), rischan_last_error(), int(s) == 0 ? 1 : int(s));
    }

    struct ConfigHandle
    {
        rischan_config *p = nullptr;
        ~ConfigHandle() { rischan_config_free(p); }
    };

    struct TableHandle
    {
        rischan_table *p = nullptr;
        ~TableHandle() { rischan_table_free(p); }
    };
}

int main(int argc, char **argv)
{
    CLI::App app{"RIS-aided channel estimation simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rischan_version()));

    std::string config_path, out_path, profile = "desk";
    std::uint64_t seed = 0;
    std::int64_t trials = -1;
    bool timing = false;

    auto *run = app.add_subcommand("run", "run a configured sweep and write CSV plus manifest");
    run->add_option("--config", config_path, "config file")->required();
    auto *out_opt = run->add_option("--out", out_path, "output CSV path");
    auto *seed_opt = run->add_option("--seed", seed, "master seed");
    run->add_option("--trials", trials, "Monte-Carlo trials per cell")->check(CLI::NonNegativeNumber);
    run->add_option("--profile", profile, "defaults for absent keys")->check(CLI::IsMember({"desk", "paper"}));
    run->add_flag("--timing", timing, "record per-row wall time in the seconds column");

    auto *rank = app.add_subcommand("rank", "print effective ranks r_g', r_hg, r_x");
    rank->add_option("--config", config_path, "config file")->required();
    rank->add_option("--profile", profile, "defaults for absent keys")->check(CLI::IsMember({"desk", "paper"}));

    auto *check = app.add_subcommand("check", "run the invariant suite");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        return report("usage", e.what(), 2);
    }

    if (*check)
    {
        int failures = 0;
        auto cb = [](const char *name, int passed, const char *detail, void *) {
            std::printf("%s  %s  (%s)\n", passed ? "PASS" : "FAIL", name, detail);
        };
        rischan_status s = rischan_check(cb, nullptr, &failures);
        if (s != RISCHAN_OK)
            return report_status(s);
        if (failures > 0)
            return report("check", std::to_string(failures) + " invariant(s) failed");
        return 0;
    }

    ConfigHandle cfg;
    if (rischan_status s = rischan_config_load(config_path.c_str(), profile.c_str(), &cfg.p); s != RISCHAN_OK)
        return report_status(s);

    if (*rank)
    {
        rischan_ranks r{};
        if (rischan_status s = rischan_ranks_of(cfg.p, &r); s != RISCHAN_OK)
            return report_status(s);
        std::printf("r_gp %d\nr_hg %d\nr_x %d\n", r.bs, r.ris, r.total);
        return 0;
    }

    if (*seed_opt)
        rischan_config_set_seed(cfg.p, seed);
    if (trials >= 0)
        rischan_config_set_trials(cfg.p, trials);
    if (timing)
        rischan_config_set_timing(cfg.p, 1);
    if (!*out_opt)
    {
        const char *p = nullptr;
        rischan_config_output(cfg.p, &p);
        out_path = p ? p : "";
    }
    if (out_path.empty())
        return report("usage", "no output path: pass --out or set output in [sweep]", 2);

    TableHandle table;
    if (rischan_status s = rischan_run(cfg.p, &table.p); s != RISCHAN_OK)
        return report_status(s);
    if (rischan_status s = rischan_table_write_csv(table.p, out_path.c_str()); s != RISCHAN_OK)
        return report_status(s);

    size_t failed = 0;
    for (size_t i = 0; i < rischan_table_rows(table.p); ++i)
    {
        rischan_row row{};
        rischan_table_row(table.p, i, &row);
        if (row.error && *row.error)
            ++failed;
    }
    std::fprintf(stderr, "wrote %zu rows to %s (%zu with errors, see manifest)\n", rischan_table_rows(table.p),
                 out_path.c_str(), failed);
    return 0;
}
