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

#include <cstdint>
#include <random>

#include <json.hpp>

#include "holosec/config.hpp"
#include "holosec/geometry.hpp"
#include "holosec/types.hpp"

namespace holosec {

using Rng = std::mt19937_64;

/// World-frame positions. The surface lies in the plane z = altitude with
/// boresight along +z; Bob sits on boresight.
struct ScenarioGeometry {
    Vec3 rhs_center;
    Vec3 bob_position;
    double eve_disk_radius = 0.0;
    Vec3 eve_position;
};

struct ChannelMeta {
    double distance_bob = 0.0; // m
    double distance_eve = 0.0; // m
    double rician_factor = 0.0;
    double gain_bob = 0.0;     // linear
    double gain_eve = 0.0;     // linear
    std::uint64_t seed = 0;
    Vec3 eve_position = Vec3::Zero();
};

struct ChannelRealization {
    CVector h_b; // surface -> Bob
    CVector g_e; // surface -> Eve
    ChannelMeta meta;
};

/// Rician factors at or above this are treated as pure line of sight.
inline constexpr double kPureLosRicianFactor = 1e12;

/// Entry m = exp(j |k_f| (r_m . u)), u the unit vector from the surface center
/// to the target. `elements` are in the local (center-relative) frame.
CVector los_steering(const std::vector<Vec3>& elements, double free_space_wave_number,
                     const Vec3& rhs_center, const Vec3& target);

/// (lambda / 4 pi)^2 * d^-exponent. Throws ConfigError for d < 1 m.
double path_loss_gain(double distance, double exponent, double wavelength);

/// sqrt(gain) (sqrt(K/(K+1)) los + sqrt(1/(K+1)) n) with n ~ CN(0, I).
/// Always consumes 2M normal draws so streams stay aligned across K.
CVector rician_channel(const CVector& los, double rician_factor, double gain, Rng& rng);

/// Uniform in the disk of the given radius around Bob, in the plane
/// orthogonal to boresight.
Vec3 sample_eve_position(const Vec3& bob_position, double radius, Rng& rng);

ScenarioGeometry make_scenario(const ValidatedConfig& config);

/// Samples Eve's position, then Bob's and Eve's channels, from one stream seeded by `seed`.
ChannelRealization draw_channels(const ValidatedConfig& config, const RhsGeometry& geometry,
                                 std::uint64_t seed);

nlohmann::json channels_to_json(const ChannelRealization& ch);
ChannelRealization channels_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const CVector& v);
CVector vector_from_json(const nlohmann::json& j);

} // namespace holosec
