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
#include <string>

#include <json.hpp>

#include "holosec/types.hpp"

namespace holosec {

enum class AnPowerPolicy {
    Residual, // AN gets whatever the scaled beamformer leaves over
    FixedFraction  // AN gets an_fraction * P_t, signal the rest
};

/// All run parameters. Powers are in dBm here and converted once by validate().
struct SystemConfig {
    double carrier_frequency = 30e9;        // Hz
    double element_spacing = 0.0;           // m; 0 selects lambda/3
    int num_elements = 25;                  // M, must be a perfect square
    int num_rf_chains = 2;                  // R
    double transmit_power_dbm = 25.0;
    double noise_power_bob_dbm = -75.0;
    double noise_power_eve_dbm = -75.0;
    double relative_permittivity = 3.0;
    double rician_factor = 0.0;
    double pathloss_exponent_bob = 2.2;
    double pathloss_exponent_eve = 2.5;
    double learning_rate = 0.01;
    double inner_tolerance = 1e-5;
    double outer_tolerance = 1e-5;
    int max_inner_iters = 500;
    int max_outer_iters = 100;
    std::uint64_t rng_seed = 1;
    AnPowerPolicy an_power_policy = AnPowerPolicy::Residual;
    double an_fraction = 0.0; // rho, only read under FixedFraction

    // Scenario layout.
    double rhs_altitude = 50.0;   // m
    double bob_range = 100.0;     // m, along boresight
    double eve_disk_radius = 5.0; // m
};

/// A config whose invariants have been checked, with derived quantities cached.
struct ValidatedConfig {
    SystemConfig raw;
    double wavelength = 0.0;       // m
    double spacing = 0.0;          // m, resolved element spacing
    int grid_side = 0;             // sqrt(M)
    double transmit_power = 0.0;   // W
    double noise_bob = 0.0;        // W
    double noise_eve = 0.0;        // W
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Throws ConfigError on the first violated invariant.
ValidatedConfig validate(const SystemConfig& config);

/// Integer square root if n is a perfect square, otherwise -1.
int perfect_square_root(int n);

void to_json(nlohmann::json& j, const SystemConfig& c);
void from_json(const nlohmann::json& j, SystemConfig& c);

SystemConfig load_config(const std::string& path);

} // namespace holosec
