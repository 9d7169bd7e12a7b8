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

#include "core/geometry.hpp"
#include "core/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rischan
{
    void ArrayGeometry::validate() const
    {
        if (rows_h < 1 || rows_v < 1)
            fail(ErrorCode::InvalidArgument, "array needs at least one element per axis (got " +
                                                 std::to_string(rows_h) + "x" + std::to_string(rows_v) + ")");
        if (!(spacing_h > 0.0) || !(spacing_v > 0.0) || !std::isfinite(spacing_h) || !std::isfinite(spacing_v))
            fail(ErrorCode::InvalidArgument, "element spacing must be positive");
    }

    bool Direction::in_front() const
    {
        const double h = std::numbers::pi / 2.0;
        return std::isfinite(azimuth) && std::isfinite(elevation) &&
               azimuth >= -h && azimuth <= h && elevation >= -h && elevation <= h;
    }

    std::vector<Position> element_positions(const ArrayGeometry &geom)
    {
        geom.validate();
        std::vector<Position> pos;
        pos.reserve(size_t(geom.size()));
        for (int v = 0; v < geom.rows_v; ++v)
            for (int h = 0; h < geom.rows_h; ++h)
                pos.push_back({0.0, h * geom.spacing_h, v * geom.spacing_v});
        return pos;
    }

    CVec array_response(const std::vector<Position> &pos, const Direction &dir)
    {
        const double ce = std::cos(dir.elevation);
        const double u[3] = {ce * std::cos(dir.azimuth), ce * std::sin(dir.azimuth), std::sin(dir.elevation)};
        CVec a(Eigen::Index(pos.size()));
        for (size_t k = 0; k < pos.size(); ++k)
        {
            double ph = 2.0 * std::numbers::pi * (pos[k][0] * u[0] + pos[k][1] * u[1] + pos[k][2] * u[2]);
            a(Eigen::Index(k)) = cplx(std::cos(ph), std::sin(ph));
        }
        return a;
    }

    CVec array_response(const ArrayGeometry &geom, const Direction &dir)
    {
        return array_response(element_positions(geom), dir);
    }
}
