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

#include "holosec/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace holosec {

WaveNumbers wave_numbers(double frequency, double relative_permittivity)
{
    if (!(frequency > 0.0) || !std::isfinite(frequency))
        throw ConfigError("frequency must be positive");
    if (!(relative_permittivity >= 1.0))
        throw ConfigError("relative permittivity must be >= 1");
    const double kf = 2.0 * kPi * frequency / kSpeedOfLight;
    return {kf, std::sqrt(relative_permittivity) * kf};
}

std::vector<Vec3> build_grid(int num_elements, double spacing)
{
    const int side = perfect_square_root(num_elements);
    if (side <= 0)
        throw ConfigError("element count must be a positive perfect square");
    if (!(spacing > 0.0))
        throw ConfigError("element spacing must be positive");

    const double offset = 0.5 * (side - 1);
    std::vector<Vec3> pos;
    pos.reserve(static_cast<std::size_t>(num_elements));
    for (int row = 0; row < side; ++row)
        for (int col = 0; col < side; ++col)
            pos.emplace_back((col - offset) * spacing, (row - offset) * spacing, 0.0);
    return pos;
}

std::vector<Vec3> build_feeds(int num_feeds, int grid_side, double spacing)
{
    if (num_feeds < 1)
        throw ConfigError("need at least one feed");
    const double width = grid_side * spacing;
    const double edge_y = -0.5 * width;
    std::vector<Vec3> feeds;
    feeds.reserve(static_cast<std::size_t>(num_feeds));
    for (int k = 0; k < num_feeds; ++k)
        feeds.emplace_back(-0.5 * width + (k + 0.5) * width / num_feeds, edge_y, 0.0);
    return feeds;
}

CMatrix reference_phase_matrix(const std::vector<Vec3>& elements,
                               const std::vector<Vec3>& feeds, double surface_wave_number)
{
    if (feeds.empty())
        throw std::invalid_argument("reference_phase_matrix: no feeds");
    const auto M = static_cast<Eigen::Index>(elements.size());
    const auto R = static_cast<Eigen::Index>(feeds.size());
    CMatrix phi(M, R);
    for (Eigen::Index m = 0; m < M; ++m) {
        for (Eigen::Index k = 0; k < R; ++k) {
            const Eigen::Vector2d d = (elements[m] - feeds[k]).head<2>();
            phi(m, k) = std::polar(1.0, -surface_wave_number * d.norm());
        }
    }
    return phi;
}

CMatrix assemble_holographic(const RVector& w, const CMatrix& phi)
{
    if (w.size() != phi.rows())
        throw std::invalid_argument("assemble_holographic: size mismatch");
    for (Eigen::Index m = 0; m < w.size(); ++m)
        if (!(w[m] >= 0.0 && w[m] <= 1.0))
            throw std::invalid_argument("assemble_holographic: weight outside [0, 1]");
    return w.cast<cplx>().asDiagonal() * phi;
}

RhsGeometry make_geometry(const ValidatedConfig& config)
{
    RhsGeometry g;
    g.spacing = config.spacing;
    g.k = wave_numbers(config.raw.carrier_frequency, config.raw.relative_permittivity);
    g.element_positions = build_grid(config.raw.num_elements, config.spacing);
    g.feed_positions = build_feeds(config.raw.num_rf_chains, config.grid_side, config.spacing);
    g.phi = reference_phase_matrix(g.element_positions, g.feed_positions, g.k.surface);
    return g;
}

nlohmann::json geometry_to_json(const RhsGeometry& g)
{
    auto points = [](const std::vector<Vec3>& ps) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : ps)
            arr.push_back({p.x(), p.y(), p.z()});
        return arr;
    };
    nlohmann::json phi = nlohmann::json::array();
    for (Eigen::Index m = 0; m < g.phi.rows(); ++m) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < g.phi.cols(); ++k)
            row.push_back({g.phi(m, k).real(), g.phi(m, k).imag()});
        phi.push_back(row);
    }
    return {
        {"spacing", g.spacing},
        {"k_free_space", g.k.free_space},
        {"k_surface", g.k.surface},
        {"element_positions", points(g.element_positions)},
        {"feed_positions", points(g.feed_positions)},
        {"phi", phi},
    };
}

} // namespace holosec
