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

#ifndef RISCHAN_GEOMETRY_HPP
#define RISCHAN_GEOMETRY_HPP

#include "core/linalg.hpp"

#include <array>
#include <vector>

namespace rischan
{
    // Uniform planar array in the yz-plane. Spacings are in wavelengths.
    struct ArrayGeometry
    {
        int rows_h = 1;         // elements along y
        int rows_v = 1;         // elements along z
        double spacing_h = 0.5; // wavelengths
        double spacing_v = 0.5;

        Eigen::Index size() const { return Eigen::Index(rows_h) * rows_v; }
        void validate() const;
        bool operator==(const ArrayGeometry &) const = default;
    };

    // Angles in radians, both within [-pi/2, pi/2]
    struct Direction
    {
        double azimuth = 0.0;
        double elevation = 0.0;
        bool in_front() const;
    };

    using Position = std::array<double, 3>;

    // Element k = v * rows_h + h sits at (0, h*spacing_h, v*spacing_v)
    std::vector<Position> element_positions(const ArrayGeometry &geom);

    CVec array_response(const ArrayGeometry &geom, const Direction &dir);

    // Same, but for an explicit position list (used for grid-symmetry checks)
    CVec array_response(const std::vector<Position> &pos, const Direction &dir);
}

#endif
