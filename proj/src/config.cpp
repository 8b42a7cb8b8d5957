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

#include "holosec/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace holosec {

std::string dump_matrix(const CMatrix& m)
{
    std::ostringstream os;
    os.precision(17);
    os << "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            os << (c ? "," : "") << "[" << m(r, c).real() << "," << m(r, c).imag() << "]";
        os << "]";
    }
    os << "]";
    return os.str();
}

double dbm_to_watts(double dbm)
{
    if (!std::isfinite(dbm))
        throw ConfigError("power in dBm must be finite");
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts)
{
    if (!(watts > 0.0) || !std::isfinite(watts))
        throw ConfigError("power in watts must be positive and finite");
    return 10.0 * std::log10(watts) + 30.0;
}

int perfect_square_root(int n)
{
    if (n < 0)
        return -1;
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r * r == n ? r : -1;
}

ValidatedConfig validate(const SystemConfig& config)
{
    auto require = [](bool ok, const char* what) {
        if (!ok)
            throw ConfigError(what);
    };
    require(std::isfinite(config.carrier_frequency) && config.carrier_frequency > 0.0,
            "carrier_frequency must be positive");
    require(config.num_elements > 0, "num_elements must be positive");
    const int side = perfect_square_root(config.num_elements);
    require(side > 0, "num_elements must be a perfect square");
    require(config.num_rf_chains >= 1, "num_rf_chains must be at least 1");
    require(std::isfinite(config.element_spacing) && config.element_spacing >= 0.0,
            "element_spacing must be nonnegative (0 selects lambda/3)");
    require(config.relative_permittivity >= 1.0, "relative_permittivity must be >= 1");
    require(config.rician_factor >= 0.0, "rician_factor must be >= 0");
    require(std::isfinite(config.pathloss_exponent_bob) && config.pathloss_exponent_bob > 0.0,
            "pathloss_exponent_bob must be positive");
    require(std::isfinite(config.pathloss_exponent_eve) && config.pathloss_exponent_eve > 0.0,
            "pathloss_exponent_eve must be positive");
    require(std::isfinite(config.learning_rate) && config.learning_rate > 0.0,
            "learning_rate must be positive");
    require(config.inner_tolerance > 0.0, "inner_tolerance must be positive");
    require(config.outer_tolerance > 0.0, "outer_tolerance must be positive");
    require(config.max_inner_iters >= 1, "max_inner_iters must be at least 1");
    require(config.max_outer_iters >= 1, "max_outer_iters must be at least 1");
    require(config.an_fraction >= 0.0 && config.an_fraction <= 1.0, "an_fraction must lie in [0, 1]");
    require(config.bob_range >= 1.0, "bob_range must be at least 1 m");
    require(config.eve_disk_radius >= 0.0, "eve_disk_radius must be nonnegative");

    ValidatedConfig v;
    v.raw = config;
    v.wavelength = kSpeedOfLight / config.carrier_frequency;
    v.spacing = config.element_spacing > 0.0 ? config.element_spacing : v.wavelength / 3.0;
    v.grid_side = side;
    v.transmit_power = dbm_to_watts(config.transmit_power_dbm);
    v.noise_bob = dbm_to_watts(config.noise_power_bob_dbm);
    v.noise_eve = dbm_to_watts(config.noise_power_eve_dbm);
    return v;
}

namespace {

const char* policy_name(AnPowerPolicy p)
{
    return p == AnPowerPolicy::Residual ? "residual" : "fixed_fraction";
}

AnPowerPolicy parse_policy(const std::string& s)
{
    if (s == "residual")
        return AnPowerPolicy::Residual;
    if (s == "fixed_fraction")
        return AnPowerPolicy::FixedFraction;
    throw ConfigError("unknown an_power_policy '" + s + "'");
}

} // namespace

void to_json(nlohmann::json& j, const SystemConfig& c)
{
    j = nlohmann::json{
        {"carrier_frequency", c.carrier_frequency},
        {"element_spacing", c.element_spacing},
        {"num_elements", c.num_elements},
        {"num_rf_chains", c.num_rf_chains},
        {"transmit_power_dbm", c.transmit_power_dbm},
        {"noise_power_bob_dbm", c.noise_power_bob_dbm},
        {"noise_power_eve_dbm", c.noise_power_eve_dbm},
        {"relative_permittivity", c.relative_permittivity},
        {"rician_factor", c.rician_factor},
        {"pathloss_exponent_bob", c.pathloss_exponent_bob},
        {"pathloss_exponent_eve", c.pathloss_exponent_eve},
        {"learning_rate", c.learning_rate},
        {"inner_tolerance", c.inner_tolerance},
        {"outer_tolerance", c.outer_tolerance},
        {"max_inner_iters", c.max_inner_iters},
        {"max_outer_iters", c.max_outer_iters},
        {"rng_seed", c.rng_seed},
        {"an_power_policy", policy_name(c.an_power_policy)},
        {"an_fraction", c.an_fraction},
        {"rhs_altitude", c.rhs_altitude},
        {"bob_range", c.bob_range},
        {"eve_disk_radius", c.eve_disk_radius},
    };
}

void from_json(const nlohmann::json& j, SystemConfig& c)
{
    // Missing keys keep their defaults; unknown keys are rejected so typos surface.
    static const SystemConfig defaults;
    nlohmann::json known;
    to_json(known, defaults);
    for (const auto& [key, _] : j.items())
        if (!known.contains(key))
            throw ConfigError("unknown config key '" + key + "'");

    auto get = [&j](const char* key, auto& field) {
        if (j.contains(key))
            j.at(key).get_to(field);
    };
    get("carrier_frequency", c.carrier_frequency);
    get("element_spacing", c.element_spacing);
    get("num_elements", c.num_elements);
    get("num_rf_chains", c.num_rf_chains);
    get("transmit_power_dbm", c.transmit_power_dbm);
    get("noise_power_bob_dbm", c.noise_power_bob_dbm);
    get("noise_power_eve_dbm", c.noise_power_eve_dbm);
    get("relative_permittivity", c.relative_permittivity);
    get("rician_factor", c.rician_factor);
    get("pathloss_exponent_bob", c.pathloss_exponent_bob);
    get("pathloss_exponent_eve", c.pathloss_exponent_eve);
    get("learning_rate", c.learning_rate);
    get("inner_tolerance", c.inner_tolerance);
    get("outer_tolerance", c.outer_tolerance);
    get("max_inner_iters", c.max_inner_iters);
    get("max_outer_iters", c.max_outer_iters);
    get("rng_seed", c.rng_seed);
    if (j.contains("an_power_policy"))
        c.an_power_policy = parse_policy(j.at("an_power_policy").get<std::string>());
    get("an_fraction", c.an_fraction);
    get("rhs_altitude", c.rhs_altitude);
    get("bob_range", c.bob_range);
    get("eve_disk_radius", c.eve_disk_radius);
}

SystemConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("malformed config file '" + path + "': " + e.what());
    }
    SystemConfig c;
    try {
        from_json(j, c);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad config value in '" + path + "': " + e.what());
    }
    return c;
}

} // namespace holosec
