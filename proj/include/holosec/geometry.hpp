// SPDX-License-Identifier: Apache-2.0
//
// holosec - secrecy-rate optimization for holographic-surface downlinks
// Copyright (C) 2026 The holosec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include <json.hpp>

#include "holosec/config.hpp"
#include "holosec/types.hpp"

namespace holosec {

struct WaveNumbers {
    double free_space; // |k_f|, rad/m
    double surface;    // |k_s| = sqrt(eps_r) |k_f|, rad/m
};

/// Surface layout in the local frame: the grid lies in z = 0 and is centered
/// on the origin; boresight is +z.
struct RhsGeometry {
    std::vector<Vec3> element_positions; // M entries, row-major
    std::vector<Vec3> feed_positions;    // R entries
    WaveNumbers k{};
    double spacing = 0.0;
    CMatrix phi; // M x R, unit modulus

    Eigen::Index num_elements() const { return static_cast<Eigen::Index>(element_positions.size()); }
    Eigen::Index num_feeds() const { return static_cast<Eigen::Index>(feed_positions.size()); }
};

WaveNumbers wave_numbers(double frequency, double relative_permittivity);

/// sqrt(M) x sqrt(M) grid with the given pitch. Element m = row * side + col
/// sits at ((col - (side-1)/2) d, (row - (side-1)/2) d, 0).
std::vector<Vec3> build_grid(int num_elements, double spacing);

/// R feeds evenly spaced along the lower (-y) edge of the grid.
std::vector<Vec3> build_feeds(int num_feeds, int grid_side, double spacing);

/// phi(m,k) = exp(-j |k_s| d_mk), d_mk the in-plane distance from feed k to element m.
CMatrix reference_phase_matrix(const std::vector<Vec3>& elements,
                               const std::vector<Vec3>& feeds, double surface_wave_number);

/// W = diag(w) phi. Throws std::invalid_argument if any w_m is outside [0, 1].
CMatrix assemble_holographic(const RVector& w, const CMatrix& phi);

RhsGeometry make_geometry(const ValidatedConfig& config);

nlohmann::json geometry_to_json(const RhsGeometry& g);

} // namespace holosec
