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

#include "holosec/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace holosec {

CVector los_steering(const std::vector<Vec3>& elements, double free_space_wave_number,
                     const Vec3& rhs_center, const Vec3& target)
{
    const Vec3 dir = target - rhs_center;
    const double len = dir.norm();
    if (!(len > 0.0))
        throw std::invalid_argument("los_steering: target coincides with the surface center");
    const Vec3 u = dir / len;
    CVector a(static_cast<Eigen::Index>(elements.size()));
    for (Eigen::Index m = 0; m < a.size(); ++m)
        a[m] = std::polar(1.0, free_space_wave_number * elements[m].dot(u));
    return a;
}

double path_loss_gain(double distance, double exponent, double wavelength)
{
    if (!(distance >= 1.0))
        throw ConfigError("path loss model is only valid beyond the 1 m reference distance");
    const double ref = wavelength / (4.0 * kPi);
    return ref * ref * std::pow(distance, -exponent);
}

CVector rician_channel(const CVector& los, double rician_factor, double gain, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CVector nlos(los.size());
    for (Eigen::Index m = 0; m < los.size(); ++m) {
        const double re = normal(rng);
        const double im = normal(rng);
        nlos[m] = {re, im};
    }
    const double amp = std::sqrt(gain);
    if (rician_factor >= kPureLosRicianFactor)
        return amp * los;
    const double los_w = std::sqrt(rician_factor / (rician_factor + 1.0));
    const double nlos_w = std::sqrt(1.0 / (rician_factor + 1.0));
    return amp * (los_w * los + nlos_w * nlos);
}

Vec3 sample_eve_position(const Vec3& bob_position, double radius, Rng& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * kPi * unit(rng);
    return bob_position + Vec3(r * std::cos(theta), r * std::sin(theta), 0.0);
}

ScenarioGeometry make_scenario(const ValidatedConfig& config)
{
    ScenarioGeometry s;
    s.rhs_center = Vec3(0.0, 0.0, config.raw.rhs_altitude);
    s.bob_position = s.rhs_center + Vec3(0.0, 0.0, config.raw.bob_range);
    s.eve_disk_radius = config.raw.eve_disk_radius;
    s.eve_position = s.bob_position;
    return s;
}

ChannelRealization draw_channels(const ValidatedConfig& config, const RhsGeometry& geometry,
                                 std::uint64_t seed)
{
    Rng rng(seed);
    ScenarioGeometry s = make_scenario(config);
    s.eve_position = sample_eve_position(s.bob_position, s.eve_disk_radius, rng);

    ChannelRealization ch;
    ch.meta.seed = seed;
    ch.meta.rician_factor = config.raw.rician_factor;
    ch.meta.eve_position = s.eve_position;
    ch.meta.distance_bob = (s.bob_position - s.rhs_center).norm();
    ch.meta.distance_eve = (s.eve_position - s.rhs_center).norm();
    ch.meta.gain_bob = path_loss_gain(ch.meta.distance_bob, config.raw.pathloss_exponent_bob,
                                      config.wavelength);
    ch.meta.gain_eve = path_loss_gain(ch.meta.distance_eve, config.raw.pathloss_exponent_eve,
                                      config.wavelength);

    const CVector los_b = los_steering(geometry.element_positions, geometry.k.free_space,
                                       s.rhs_center, s.bob_position);
    const CVector los_e = los_steering(geometry.element_positions, geometry.k.free_space,
                                       s.rhs_center, s.eve_position);
    ch.h_b = rician_channel(los_b, config.raw.rician_factor, ch.meta.gain_bob, rng);
    ch.g_e = rician_channel(los_e, config.raw.rician_factor, ch.meta.gain_eve, rng);
    return ch;
}

nlohmann::json vector_to_json(const CVector& v)
{
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        arr.push_back({v[i].real(), v[i].imag()});
    return arr;
}

CVector vector_from_json(const nlohmann::json& j)
{
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto& e = j.at(static_cast<std::size_t>(i));
        v[i] = {e.at(0).get<double>(), e.at(1).get<double>()};
    }
    return v;
}

nlohmann::json channels_to_json(const ChannelRealization& ch)
{
    const auto& m = ch.meta;
    return {
        {"h_b", vector_to_json(ch.h_b)},
        {"g_e", vector_to_json(ch.g_e)},
        {"meta",
         {{"distance_bob", m.distance_bob},
          {"distance_eve", m.distance_eve},
          {"rician_factor", m.rician_factor},
          {"gain_bob", m.gain_bob},
          {"gain_eve", m.gain_eve},
          {"seed", m.seed},
          {"eve_position", {m.eve_position.x(), m.eve_position.y(), m.eve_position.z()}}}},
    };
}

ChannelRealization channels_from_json(const nlohmann::json& j)
{
    ChannelRealization ch;
    ch.h_b = vector_from_json(j.at("h_b"));
    ch.g_e = vector_from_json(j.at("g_e"));
    if (ch.h_b.size() != ch.g_e.size())
        throw std::invalid_argument("channels_from_json: h_b and g_e differ in length");
    if (j.contains("meta")) {
        const auto& m = j.at("meta");
        ch.meta.distance_bob = m.value("distance_bob", 0.0);
        ch.meta.distance_eve = m.value("distance_eve", 0.0);
        ch.meta.rician_factor = m.value("rician_factor", 0.0);
        ch.meta.gain_bob = m.value("gain_bob", 0.0);
        ch.meta.gain_eve = m.value("gain_eve", 0.0);
        ch.meta.seed = m.value("seed", std::uint64_t{0});
        if (m.contains("eve_position")) {
            const auto& p = m.at("eve_position");
            ch.meta.eve_position = Vec3(p.at(0).get<double>(), p.at(1).get<double>(),
                                        p.at(2).get<double>());
        }
    }
    return ch;
}

} // namespace holosec
