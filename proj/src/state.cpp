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

#include "holosec/state.hpp"

#include <algorithm>

namespace holosec {

double signal_budget(const ValidatedConfig& config, const CVector& z)
{
    const double pt = config.transmit_power;
    double budget = pt - z.squaredNorm();
    if (config.raw.an_power_policy == AnPowerPolicy::FixedFraction)
        budget = std::min(budget, (1.0 - config.raw.an_fraction) * pt);
    return std::max(0.0, budget);
}

double an_budget(const ValidatedConfig& config, double signal_power)
{
    const double pt = config.transmit_power;
    if (config.raw.an_power_policy == AnPowerPolicy::FixedFraction)
        return std::max(0.0, std::min(config.raw.an_fraction * pt, pt - signal_power));
    return std::max(0.0, pt - signal_power);
}

} // namespace holosec
