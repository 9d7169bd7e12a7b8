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

#include "core/config.hpp"
#include "core/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

namespace rischan
{
    const char *axis_name(SweepAxis a)
    {
        switch (a)
        {
        case SweepAxis::SirDb: return "sir_db";
        case SweepAxis::N: return "n";
        case SweepAxis::M: return "m";
        case SweepAxis::Spacing: return "spacing";
        case SweepAxis::Bits: return "bits";
        case SweepAxis::PilotLen: return "pilot_len";
        }
        return "?";
    }

    const char *estimator_name(EstimatorKind e)
    {
        switch (e)
        {
        case EstimatorKind::Lmmse: return "lmmse";
        case EstimatorKind::Rsls: return "rsls";
        case EstimatorKind::Ls: return "ls";
        case EstimatorKind::Crlb: return "crlb";
        }
        return "?";
    }

    const char *design_name(PhiDesign d)
    {
        switch (d)
        {
        case PhiDesign::LmmseOpt: return "lmmse-opt";
        case PhiDesign::LmmseOptNoEmi: return "lmmse-opt-noemi";
        case PhiDesign::LmmseBound: return "lmmse-bound";
        case PhiDesign::RslsOpt: return "rsls-opt";
        case PhiDesign::RslsBound: return "rsls-bound";
        case PhiDesign::RslsMm: return "rsls-mm";
        case PhiDesign::Dft: return "dft";
        case PhiDesign::Random: return "random";
        }
        return "?";
    }

    const char *profile_name(Profile p) { return p == Profile::Desk ? "desk" : "paper"; }

    std::optional<Profile> parse_profile(const std::string &s)
    {
        if (s == "desk")
            return Profile::Desk;
        if (s == "paper")
            return Profile::Paper;
        return std::nullopt;
    }

    bool pair_valid(EstimatorKind e, PhiDesign d)
    {
        const bool lmmse_family = d == PhiDesign::LmmseOpt || d == PhiDesign::LmmseOptNoEmi || d == PhiDesign::LmmseBound;
        const bool rsls_family = d == PhiDesign::RslsOpt || d == PhiDesign::RslsBound || d == PhiDesign::RslsMm;
        if (lmmse_family)
            return e == EstimatorKind::Lmmse;
        if (rsls_family)
            return e == EstimatorKind::Rsls || e == EstimatorKind::Crlb;
        return true;
    }

    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

    double path_gain(double distance_m, double exponent, double ref_loss_db)
    {
        if (!(distance_m > 0.0))
            fail(ErrorCode::InvalidArgument, "path-loss distance must be positive");
        return db_to_linear(ref_loss_db) * std::pow(distance_m, -exponent);
    }

    double ris_area_factor(double spacing_h, double spacing_v)
    {
        return 4.0 * std::numbers::pi * spacing_h * spacing_v;
    }

    namespace
    {
        std::string trim(const std::string &s)
        {
            size_t a = 0, b = s.size();
            while (a < b && std::isspace((unsigned char)s[a]))
                ++a;
            while (b > a && std::isspace((unsigned char)s[b - 1]))
                --b;
            return s.substr(a, b - a);
        }

        std::string lower(std::string s)
        {
            for (auto &c : s)
                c = char(std::tolower((unsigned char)c));
            return s;
        }

        std::vector<std::string> split_list(const std::string &s)
        {
            std::vector<std::string> out;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ','))
            {
                item = trim(item);
                if (!item.empty())
                    out.push_back(item);
            }
            return out;
        }

        bool parse_double_exact(const std::string &s, double &out)
        {
            if (s.empty())
                return false;
            const std::string l = lower(s);
            if (l == "inf" || l == "+inf")
            {
                out = std::numeric_limits<double>::infinity();
                return true;
            }
            if (l == "-inf")
            {
                out = -std::numeric_limits<double>::infinity();
                return true;
            }
            size_t pos = 0;
            try
            {
                out = std::stod(s, &pos);
            }
            catch (...)
            {
                return false;
            }
            return pos == s.size() && std::isfinite(out);
        }

        // number or "a/b"
        double parse_number(const std::string &raw)
        {
            const std::string s = trim(raw);
            double v = 0.0;
            if (parse_double_exact(s, v))
                return v;
            auto slash = s.find('/');
            if (slash != std::string::npos)
            {
                double a = 0.0, b = 0.0;
                if (parse_double_exact(trim(s.substr(0, slash)), a) && parse_double_exact(trim(s.substr(slash + 1)), b) &&
                    b != 0.0)
                    return a / b;
            }
            throw std::invalid_argument("not a number: '" + s + "'");
        }

        long long parse_int(const std::string &raw)
        {
            const std::string s = trim(raw);
            size_t pos = 0;
            long long v = 0;
            try
            {
                v = std::stoll(s, &pos);
            }
            catch (...)
            {
                pos = 0;
            }
            if (s.empty() || pos != s.size())
                throw std::invalid_argument("not an integer: '" + s + "'");
            return v;
        }

        bool parse_bool(const std::string &raw)
        {
            const std::string s = lower(trim(raw));
            if (s == "true" || s == "yes" || s == "1" || s == "on")
                return true;
            if (s == "false" || s == "no" || s == "0" || s == "off")
                return false;
            throw std::invalid_argument("not a boolean: '" + raw + "'");
        }

        ScatteringSpec clustered(double az, double el)
        {
            ScatteringSpec s;
            s.kind = ScatteringSpec::Kind::Clustered;
            s.nominal = {az, el};
            s.sigma_az = s.sigma_el = std::numbers::pi / 36.0;
            return s;
        }

        bool is_square(double v, int &root)
        {
            if (!(v >= 1.0) || v != std::floor(v))
                return false;
            root = int(std::llround(std::sqrt(v)));
            return (long long)root * root == (long long)v;
        }

        std::string fmt(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            return buf;
        }
    }

    double parse_angle(const std::string &raw)
    {
        std::string s = lower(trim(raw));
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
        if (s.size() > 3 && s.compare(s.size() - 3, 3, "deg") == 0)
            return parse_number(s.substr(0, s.size() - 3)) * std::numbers::pi / 180.0;
        auto p = s.find("pi");
        if (p == std::string::npos)
            return parse_number(s);
        std::string coef = s.substr(0, p);
        std::string rest = s.substr(p + 2);
        if (!coef.empty() && coef.back() == '*')
            coef.pop_back();
        double c = 1.0;
        if (coef == "-")
            c = -1.0;
        else if (coef == "+" || coef.empty())
            c = 1.0;
        else
            c = parse_number(coef);
        double d = 1.0;
        if (!rest.empty())
        {
            if (rest[0] != '/')
                throw std::invalid_argument("bad angle: '" + raw + "'");
            d = parse_number(rest.substr(1));
            if (d == 0.0)
                throw std::invalid_argument("bad angle: '" + raw + "'");
        }
        return c * std::numbers::pi / d;
    }

    SweepSpec default_spec(Profile profile)
    {
        SweepSpec s;
        s.profile = profile;
        ScenarioConfig &b = s.base;
        const double pi = std::numbers::pi;
        b.h.scatter = clustered(pi / 4.0, 0.0);
        b.gp.scatter = clustered(pi / 4.0, 0.0);
        b.g.scatter = clustered(-pi / 4.0, -pi / 6.0);
        b.w.scatter = clustered(0.0, -pi / 12.0);
        b.power = 0.2;
        b.seed = 1;
        b.trials = 2000;
        b.mc_samples = 100000;
        if (profile == Profile::Paper)
        {
            b.bs = {4, 4, 0.25, 0.25};
            b.ris = {16, 16, 0.125, 0.125};
            b.pilot_len = 128;
        }
        else
        {
            b.bs = {2, 2, 0.25, 0.25};
            b.ris = {4, 4, 0.125, 0.125};
            b.pilot_len = 8;
        }
        return s;
    }

    ScenarioConfig SweepSpec::cell(double v) const
    {
        ScenarioConfig c = base;
        double sir = sir_db;
        int root = 0;
        switch (axis)
        {
        case SweepAxis::SirDb: sir = v; break;
        case SweepAxis::N:
            if (!is_square(v, root))
                fail(ErrorCode::Config, "axis value " + fmt(v) + " for n is not a perfect square");
            c.ris.rows_h = c.ris.rows_v = root;
            break;
        case SweepAxis::M:
            if (!is_square(v, root))
                fail(ErrorCode::Config, "axis value " + fmt(v) + " for m is not a perfect square");
            c.bs.rows_h = c.bs.rows_v = root;
            break;
        case SweepAxis::Spacing: c.ris.spacing_h = c.ris.spacing_v = v; break;
        case SweepAxis::Bits: break;
        case SweepAxis::PilotLen: c.pilot_len = int(v); break;
        }

        const PathlossSpec &pl = pathloss;
        const double area = pl.ris_area_factor ? ris_area_factor(c.ris.spacing_h, c.ris.spacing_v) : 1.0;
        c.h.gain = pl.gain_h.value_or(path_gain(pl.ris_ue_distance_m, pl.exponent, pl.ref_loss_db) * area);
        c.g.gain = pl.gain_g.value_or(path_gain(pl.bs_ris_distance_m, pl.exponent, pl.ref_loss_db) * area);
        c.gp.gain = pl.gain_gp.value_or(1.0);
        // EMI arrives at the RIS with the same large-scale gain as the UE signal, so SIR = rho / sigma_w^2
        c.w.gain = pl.gain_w.value_or(c.h.gain);

        if (snr_db)
            c.noise_var = c.power / db_to_linear(*snr_db);
        else if (noise_dbm)
            c.noise_var = dbm_to_watt(*noise_dbm);
        else
            c.noise_var = dbm_to_watt(noise_density_dbm_hz + 10.0 * std::log10(bandwidth_hz));
        c.emi_var = std::isinf(sir) && sir > 0.0 ? 0.0 : c.power / db_to_linear(sir);
        return c;
    }

    void SweepSpec::validate() const
    {
        if (values.empty())
            fail(ErrorCode::Config, "sweep has no axis values");
        if (estimators.empty() || designs.empty())
            fail(ErrorCode::Config, "sweep needs at least one estimator and one design");
        if (emi_modes.empty())
            fail(ErrorCode::Config, "sweep needs at least one EMI mode");
        bool any = false;
        for (auto e : estimators)
            for (auto d : designs)
                any = any || pair_valid(e, d);
        if (!any)
            fail(ErrorCode::Config, "no estimator/design pair is compatible");
        if (mm_iters < 0 || bits < 0 || bits > 30 || threads < 0)
            fail(ErrorCode::Config, "mm_iters, bits and threads must be nonnegative (bits <= 30)");
        for (double v : values)
        {
            ScenarioConfig c = cell(v);
            try
            {
                c.validate();
            }
            catch (const Error &e)
            {
                fail(ErrorCode::Config, std::string("axis value ") + fmt(v) + ": " + e.what());
            }
            if (axis == SweepAxis::Bits && (v < 0 || v != std::floor(v) || v > 30))
                fail(ErrorCode::Config, "bits axis values must be integers in 0..30");
            if (axis == SweepAxis::PilotLen && v != std::floor(v))
                fail(ErrorCode::Config, "pilot_len axis values must be integers");
            if (std::find(estimators.begin(), estimators.end(), EstimatorKind::Ls) != estimators.end() &&
                c.pilot_len < c.ris.size())
                fail(ErrorCode::Config, "LS needs pilot_len >= N (pilot_len = " + std::to_string(c.pilot_len) +
                                            ", N = " + std::to_string(c.ris.size()) + ")");
        }
    }

    std::string SweepSpec::canonical() const
    {
        std::ostringstream o;
        const auto &b = base;
        auto geo = [&](const ArrayGeometry &g) {
            return std::to_string(g.rows_h) + "x" + std::to_string(g.rows_v) + "@" + fmt(g.spacing_h) + "," +
                   fmt(g.spacing_v);
        };
        o << "bs=" << geo(b.bs) << ";ris=" << geo(b.ris) << ";tau=" << b.pilot_len << ";power=" << fmt(b.power)
          << ";seed=" << b.seed << ";trials=" << b.trials << ";mc=" << b.mc_samples
          << ";frac=" << fmt(b.rank_fraction) << ";h=" << b.h.scatter.canonical() << ";g=" << b.g.scatter.canonical()
          << ";gp=" << b.gp.scatter.canonical() << ";w=" << b.w.scatter.canonical();
        const auto &p = pathloss;
        o << ";pl=" << fmt(p.ref_loss_db) << "," << fmt(p.exponent) << "," << fmt(p.bs_ris_distance_m) << ","
          << fmt(p.ris_ue_distance_m) << "," << p.ris_area_factor;
        for (auto *g : {&p.gain_h, &p.gain_g, &p.gain_gp, &p.gain_w})
            o << "," << (*g ? fmt(**g) : std::string("-"));
        o << ";bw=" << fmt(bandwidth_hz) << ";n0=" << fmt(noise_density_dbm_hz)
          << ";noise_dbm=" << (noise_dbm ? fmt(*noise_dbm) : "-") << ";snr=" << (snr_db ? fmt(*snr_db) : "-")
          << ";sir=" << fmt(sir_db) << ";axis=" << axis_name(axis) << ";values=";
        for (double v : values)
            o << fmt(v) << ",";
        o << ";est=";
        for (auto e : estimators)
            o << estimator_name(e) << ",";
        o << ";des=";
        for (auto d : designs)
            o << design_name(d) << ",";
        o << ";emi=";
        for (auto m : emi_modes)
            o << emi_mode_name(m) << ",";
        o << ";mm=" << mm_iters << ";bits=" << bits;
        return o.str();
    }

    SweepSpec load_config_string(const std::string &text, Profile profile, const std::string &origin)
    {
        SweepSpec s = default_spec(profile);
        std::istringstream in(text);
        std::string line, section;
        int lineno = 0;
        int est_line = 0;
        std::map<std::string, int> seen;

        auto where = [&](int ln) { return origin + ":" + std::to_string(ln) + ": "; };

        using Setter = std::function<void(const std::string &)>;
        auto corr_keys = [&](LinkSpec &link) {
            std::map<std::string, Setter> m;
            m["model"] = [&link](const std::string &v) {
                const std::string l = lower(v);
                if (l == "isotropic" || l == "iso")
                    link.scatter.kind = ScatteringSpec::Kind::Isotropic;
                else if (l == "clustered")
                    link.scatter.kind = ScatteringSpec::Kind::Clustered;
                else
                    throw std::invalid_argument("model must be isotropic or clustered");
            };
            m["azimuth"] = [&link](const std::string &v) { link.scatter.nominal.azimuth = parse_angle(v); };
            m["elevation"] = [&link](const std::string &v) { link.scatter.nominal.elevation = parse_angle(v); };
            m["sigma_az"] = [&link](const std::string &v) { link.scatter.sigma_az = parse_angle(v); };
            m["sigma_el"] = [&link](const std::string &v) { link.scatter.sigma_el = parse_angle(v); };
            m["sigma"] = [&link](const std::string &v) { link.scatter.sigma_az = link.scatter.sigma_el = parse_angle(v); };
            return m;
        };

        ScenarioConfig &b = s.base;
        PathlossSpec &pl = s.pathloss;
        std::map<std::string, std::map<std::string, Setter>> table;
        auto &sc = table["scenario"];
        sc["bs_rows_h"] = [&](const std::string &v) { b.bs.rows_h = int(parse_int(v)); };
        sc["bs_rows_v"] = [&](const std::string &v) { b.bs.rows_v = int(parse_int(v)); };
        sc["bs_spacing"] = [&](const std::string &v) { b.bs.spacing_h = b.bs.spacing_v = parse_number(v); };
        sc["ris_rows_h"] = [&](const std::string &v) { b.ris.rows_h = int(parse_int(v)); };
        sc["ris_rows_v"] = [&](const std::string &v) { b.ris.rows_v = int(parse_int(v)); };
        sc["ris_spacing"] = [&](const std::string &v) { b.ris.spacing_h = b.ris.spacing_v = parse_number(v); };
        sc["pilot_len"] = [&](const std::string &v) { b.pilot_len = int(parse_int(v)); };
        sc["power_w"] = [&](const std::string &v) { b.power = parse_number(v); };
        sc["bandwidth_hz"] = [&](const std::string &v) { s.bandwidth_hz = parse_number(v); };
        sc["noise_density_dbm_hz"] = [&](const std::string &v) { s.noise_density_dbm_hz = parse_number(v); };
        sc["noise_dbm"] = [&](const std::string &v) { s.noise_dbm = parse_number(v); };
        sc["snr_db"] = [&](const std::string &v) { s.snr_db = parse_number(v); };
        sc["sir_db"] = [&](const std::string &v) {
            double x = 0.0;
            if (!parse_double_exact(trim(v), x) || (std::isinf(x) && x < 0))
                throw std::invalid_argument("sir_db must be a number or inf");
            s.sir_db = x;
        };
        sc["emi_mode"] = [&](const std::string &v) {
            s.emi_modes.clear();
            for (auto &t : split_list(lower(v)))
            {
                if (t == "slow")
                    s.emi_modes.push_back(EmiMode::Slow);
                else if (t == "fast")
                    s.emi_modes.push_back(EmiMode::Fast);
                else
                    throw std::invalid_argument("emi_mode entries must be slow or fast");
            }
        };
        sc["seed"] = [&](const std::string &v) { b.seed = std::uint64_t(parse_int(v)); };
        sc["trials"] = [&](const std::string &v) { b.trials = parse_int(v); };
        sc["mc_samples"] = [&](const std::string &v) { b.mc_samples = parse_int(v); };
        sc["effective_rank_fraction"] = [&](const std::string &v) {
            b.rank_fraction = parse_number(v);
            if (!(b.rank_fraction > 0.0 && b.rank_fraction <= 1.0))
                throw std::invalid_argument("effective_rank_fraction must lie in (0, 1]");
        };
        sc["mm_iters"] = [&](const std::string &v) { s.mm_iters = int(parse_int(v)); };
        sc["bits"] = [&](const std::string &v) { s.bits = int(parse_int(v)); };
        sc["threads"] = [&](const std::string &v) { s.threads = int(parse_int(v)); };
        sc["cache_dir"] = [&](const std::string &v) { s.cache_dir = v; };
        sc["record_timing"] = [&](const std::string &v) { s.record_timing = parse_bool(v); };

        auto &p = table["pathloss"];
        p["ref_loss_db"] = [&](const std::string &v) { pl.ref_loss_db = parse_number(v); };
        p["exponent"] = [&](const std::string &v) { pl.exponent = parse_number(v); };
        p["bs_ris_distance_m"] = [&](const std::string &v) { pl.bs_ris_distance_m = parse_number(v); };
        p["ris_ue_distance_m"] = [&](const std::string &v) { pl.ris_ue_distance_m = parse_number(v); };
        p["ris_area_factor"] = [&](const std::string &v) { pl.ris_area_factor = parse_bool(v); };
        p["gain_h"] = [&](const std::string &v) { pl.gain_h = parse_number(v); };
        p["gain_g"] = [&](const std::string &v) { pl.gain_g = parse_number(v); };
        p["gain_gp"] = [&](const std::string &v) { pl.gain_gp = parse_number(v); };
        p["gain_w"] = [&](const std::string &v) { pl.gain_w = parse_number(v); };

        table["corr.h"] = corr_keys(b.h);
        table["corr.g"] = corr_keys(b.g);
        table["corr.gp"] = corr_keys(b.gp);
        table["corr.w"] = corr_keys(b.w);

        auto &sw = table["sweep"];
        sw["axis"] = [&](const std::string &v) {
            const std::string l = lower(trim(v));
            if (l == "sir_db") s.axis = SweepAxis::SirDb;
            else if (l == "n") s.axis = SweepAxis::N;
            else if (l == "m") s.axis = SweepAxis::M;
            else if (l == "spacing") s.axis = SweepAxis::Spacing;
            else if (l == "bits") s.axis = SweepAxis::Bits;
            else if (l == "pilot_len") s.axis = SweepAxis::PilotLen;
            else throw std::invalid_argument("axis must be one of sir_db, n, m, spacing, bits, pilot_len");
        };
        sw["values"] = [&](const std::string &v) {
            s.values.clear();
            for (auto &t : split_list(v))
                s.values.push_back(parse_number(t));
            if (s.values.empty())
                throw std::invalid_argument("values list is empty");
        };
        sw["estimators"] = [&](const std::string &v) {
            s.estimators.clear();
            for (auto &t : split_list(lower(v)))
            {
                if (t == "lmmse") s.estimators.push_back(EstimatorKind::Lmmse);
                else if (t == "rsls") s.estimators.push_back(EstimatorKind::Rsls);
                else if (t == "ls") s.estimators.push_back(EstimatorKind::Ls);
                else if (t == "crlb") s.estimators.push_back(EstimatorKind::Crlb);
                else throw std::invalid_argument("unknown estimator '" + t + "'");
            }
            est_line = lineno;
        };
        sw["designs"] = [&](const std::string &v) {
            s.designs.clear();
            for (auto &t : split_list(lower(v)))
            {
                if (t == "lmmse-opt") s.designs.push_back(PhiDesign::LmmseOpt);
                else if (t == "lmmse-opt-noemi") s.designs.push_back(PhiDesign::LmmseOptNoEmi);
                else if (t == "lmmse-bound") s.designs.push_back(PhiDesign::LmmseBound);
                else if (t == "rsls-opt") s.designs.push_back(PhiDesign::RslsOpt);
                else if (t == "rsls-bound") s.designs.push_back(PhiDesign::RslsBound);
                else if (t == "rsls-mm") s.designs.push_back(PhiDesign::RslsMm);
                else if (t == "dft") s.designs.push_back(PhiDesign::Dft);
                else if (t == "random") s.designs.push_back(PhiDesign::Random);
                else throw std::invalid_argument("unknown design '" + t + "'");
            }
        };
        sw["output"] = [&](const std::string &v) { s.output = v; };

        while (std::getline(in, line))
        {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            if (line.front() == '[')
            {
                if (line.back() != ']')
                    fail(ErrorCode::Config, where(lineno) + "unterminated section header");
                section = lower(trim(line.substr(1, line.size() - 2)));
                if (!table.count(section))
                    fail(ErrorCode::Config, where(lineno) + "unknown section [" + section + "]");
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos)
                fail(ErrorCode::Config, where(lineno) + "expected key = value");
            const std::string key = lower(trim(line.substr(0, eq)));
            const std::string val = trim(line.substr(eq + 1));
            if (section.empty())
                fail(ErrorCode::Config, where(lineno) + "key '" + key + "' appears before any section header");
            auto &keys = table[section];
            auto it = keys.find(key);
            if (it == keys.end())
                fail(ErrorCode::Config, where(lineno) + "unknown key '" + key + "' in [" + section + "]");
            const std::string full = section + "." + key;
            if (seen.count(full))
                fail(ErrorCode::Config, where(lineno) + "duplicate key '" + key + "' in [" + section +
                                            "] (first set on line " + std::to_string(seen[full]) + ")");
            seen[full] = lineno;
            try
            {
                it->second(val);
            }
            catch (const std::exception &e)
            {
                fail(ErrorCode::Config, where(lineno) + "key '" + key + "': " + e.what());
            }
        }

        try
        {
            s.validate();
        }
        catch (const Error &e)
        {
            const std::string msg = e.what();
            const int ln = msg.rfind("LS needs", 0) == 0 && est_line ? est_line : 0;
            fail(ErrorCode::Config, (ln ? where(ln) + "key 'estimators': " : origin + ": ") + msg);
        }
        return s;
    }

    SweepSpec load_config(const std::string &path, Profile profile)
    {
        std::ifstream f(path);
        if (!f)
            fail(ErrorCode::Io, "cannot open config file '" + path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        return load_config_string(ss.str(), profile, path);
    }
}
