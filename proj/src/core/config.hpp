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

#ifndef RISCHAN_CONFIG_HPP
#define RISCHAN_CONFIG_HPP

#include "core/channel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rischan
{
    enum class Profile
    {
        Desk,
        Paper
    };

    enum class SweepAxis
    {
        SirDb,
        N,
        M,
        Spacing,
        Bits,
        PilotLen
    };

    enum class EstimatorKind
    {
        Lmmse,
        Rsls,
        Ls,
        Crlb
    };

    enum class PhiDesign
    {
        LmmseOpt,
        LmmseOptNoEmi,
        LmmseBound,
        RslsOpt,
        RslsBound,
        RslsMm,
        Dft,
        Random
    };

    const char *axis_name(SweepAxis a);
    const char *estimator_name(EstimatorKind e);
    const char *design_name(PhiDesign d);
    const char *profile_name(Profile p);
    std::optional<Profile> parse_profile(const std::string &s);

    // Estimators pair with designs of their own family; baselines pair with all
    bool pair_valid(EstimatorKind e, PhiDesign d);

    struct PathlossSpec
    {
        double ref_loss_db = -35.0;
        double exponent = 3.0;
        double bs_ris_distance_m = 10.0;
        double ris_ue_distance_m = 40.0;
        bool ris_area_factor = true;
        std::optional<double> gain_h, gain_g, gain_gp, gain_w; // linear overrides
    };

    struct SweepSpec
    {
        ScenarioConfig base;
        PathlossSpec pathloss;
        double bandwidth_hz = 1e5;
        double noise_density_dbm_hz = -174.0;
        std::optional<double> noise_dbm;
        std::optional<double> snr_db;
        double sir_db = 5.0; // +inf disables EMI

        SweepAxis axis = SweepAxis::SirDb;
        std::vector<double> values{-5.0, 0.0, 5.0, 10.0, 15.0};
        std::vector<EstimatorKind> estimators{EstimatorKind::Lmmse, EstimatorKind::Rsls};
        std::vector<PhiDesign> designs{PhiDesign::LmmseOpt, PhiDesign::LmmseBound, PhiDesign::RslsOpt,
                                       PhiDesign::RslsBound, PhiDesign::RslsMm, PhiDesign::Random};
        std::vector<EmiMode> emi_modes{EmiMode::Slow};
        int mm_iters = 50;
        int bits = 0; // 0 keeps continuous phases
        int threads = 0; // 0 uses the hardware concurrency
        std::string cache_dir;
        bool record_timing = false;
        std::string output;
        Profile profile = Profile::Paper;

        // Fully resolved text form; hashed into the run manifest
        std::string canonical() const;

        // Scenario at one axis value, with gains and variances resolved
        ScenarioConfig cell(double axis_value) const;

        void validate() const;
    };

    SweepSpec default_spec(Profile profile);

    SweepSpec load_config(const std::string &path, Profile profile = Profile::Paper);
    SweepSpec load_config_string(const std::string &text, Profile profile = Profile::Paper,
                                 const std::string &origin = "<string>");

    double path_gain(double distance_m, double exponent, double ref_loss_db);
    // A / (lambda^2 / 4 pi) for an element of spacing_h x spacing_v wavelengths
    double ris_area_factor(double spacing_h, double spacing_v);

    double db_to_linear(double db);
    double dbm_to_watt(double dbm);

    // Angle text: plain radians, "pi/4", "-pi/6", "0.5*pi", "30deg"
    double parse_angle(const std::string &s);
}

#endif
