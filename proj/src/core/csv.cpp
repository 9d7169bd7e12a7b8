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

#include "core/csv.hpp"
#include "core/error.hpp"

#include <json.hpp>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#ifndef RISCHAN_VERSION_STRING
#define RISCHAN_VERSION_STRING "unknown"
#endif

namespace rischan
{
    const char *code_version() { return RISCHAN_VERSION_STRING; }

    namespace
    {
        std::string num(double v)
        {
            if (std::isnan(v))
                return "nan";
            if (std::isinf(v))
                return v > 0 ? "inf" : "-inf";
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.9g", v);
            return buf;
        }

        double parse_num(const std::string &s)
        {
            if (s == "nan")
                return std::numeric_limits<double>::quiet_NaN();
            if (s == "inf")
                return std::numeric_limits<double>::infinity();
            if (s == "-inf")
                return -std::numeric_limits<double>::infinity();
            size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size())
                throw std::invalid_argument(s);
            return v;
        }

        void write_file(const std::string &path, const std::string &content)
        {
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            if (!f)
                fail(ErrorCode::Io, "cannot open '" + path + "' for writing: " + std::strerror(errno));
            f << content;
            f.close();
            if (!f)
                fail(ErrorCode::Io, "write to '" + path + "' failed: " + std::strerror(errno));
        }
    }

    std::string format_csv(const SweepTable &table)
    {
        std::string out = csv_header;
        out += '\n';
        for (const auto &r : table.rows)
        {
            out += num(r.axis) + ',' + r.estimator + ',' + r.design + ',' + r.emi_mode + ',' + num(r.nmse_db_closed) +
                   ',' + num(r.nmse_db_mc) + ',' + num(r.stderr_db) + ',' + std::to_string(r.trials) + ',' +
                   num(r.seconds) + '\n';
        }
        return out;
    }

    std::string format_manifest(const SweepTable &table)
    {
        nlohmann::ordered_json j;
        j["config_hash"] = table.config_hash;
        j["seed"] = table.seed;
        j["code_version"] = code_version();
        j["wall_time_s"] = table.wall_seconds;
        j["rows"] = table.rows.size();
        auto errs = nlohmann::ordered_json::array();
        for (const auto &r : table.rows)
            if (!r.error.empty())
                errs.push_back({{"axis", r.axis},
                                {"estimator", r.estimator},
                                {"design", r.design},
                                {"emi_mode", r.emi_mode},
                                {"message", r.error}});
        j["errors"] = errs;
        return j.dump(2) + "\n";
    }

    void emit_csv(const SweepTable &table, const std::string &path)
    {
        write_file(path, format_csv(table));
        write_file(path + ".manifest.json", format_manifest(table));
    }

    std::vector<SweepRow> parse_csv(const std::string &text)
    {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line) || line != csv_header)
            fail(ErrorCode::Io, "CSV header does not match the expected columns");
        std::vector<SweepRow> rows;
        int ln = 1;
        while (std::getline(in, line))
        {
            ++ln;
            if (line.empty())
                continue;
            std::vector<std::string> f;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                f.push_back(cell);
            if (f.size() != 9)
                fail(ErrorCode::Io, "CSV line " + std::to_string(ln) + " has " + std::to_string(f.size()) + " fields");
            try
            {
                SweepRow r;
                r.axis = parse_num(f[0]);
                r.estimator = f[1];
                r.design = f[2];
                r.emi_mode = f[3];
                r.nmse_db_closed = parse_num(f[4]);
                r.nmse_db_mc = parse_num(f[5]);
                r.stderr_db = parse_num(f[6]);
                r.trials = std::stoll(f[7]);
                r.seconds = parse_num(f[8]);
                rows.push_back(std::move(r));
            }
            catch (const std::exception &)
            {
                fail(ErrorCode::Io, "CSV line " + std::to_string(ln) + " has a malformed number");
            }
        }
        return rows;
    }
}
