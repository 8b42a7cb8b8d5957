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

#include <functional>
#include <vector>

#include <json.hpp>

#include "holosec/channel.hpp"
#include "holosec/config.hpp"
#include "holosec/geometry.hpp"
#include "holosec/holographic.hpp"
#include "holosec/metrics.hpp"
#include "holosec/state.hpp"

namespace holosec {

struct IterationRecord {
    double secrecy = 0.0;
    double rate_bob = 0.0;
    double rate_eve = 0.0;
    double power_signal = 0.0;
    double power_an = 0.0;
    int inner_iters_holo = 0;
    // Rayleigh quotients of the digital step: anchor direction vs. returned eigenvector.
    double digital_anchor_quotient = 0.0;
    double digital_quotient = 0.0;
};

enum class Termination { Converged, MaxIters };

struct OptimizationTrace {
    SecrecyReport initial;
    std::vector<IterationRecord> records;
    Termination termination = Termination::MaxIters;
};

struct OptimizationResult {
    BeamformingState state;
    OptimizationTrace trace;
    SecrecyReport report; // at the returned state
};

/// w ~ U(0.01, 1), v along W^H h_b scaled to the signal budget, z per the AN
/// policy (zero under Residual).
BeamformingState initialize(const ValidatedConfig& config, const RhsGeometry& geometry,
                            const ChannelRealization& channels, Rng& rng);

/// True iff the last two secrecy values differ by less than `tolerance`.
bool converged(const OptimizationTrace& trace, double tolerance);

HolographicOptions holographic_options(const ValidatedConfig& config);

/// After w moves: re-project z onto the null space of Bob's new effective
/// channel at unchanged AN power, then shrink v back into the signal budget.
void restore_feasibility(BeamformingState& state, const CMatrix& W,
                         const ChannelRealization& channels, const ValidatedConfig& config);

/// Called once per outer iteration with the feasible state and its record.
using IterationObserver = std::function<void(const BeamformingState&, const IterationRecord&)>;

/// Alternates digital step -> AN design -> holographic ascent until the true
/// secrecy rate settles or max_outer_iters is reached.
OptimizationResult optimize(const ValidatedConfig& config, const RhsGeometry& geometry,
                            const ChannelRealization& channels, BeamformingState initial,
                            const IterationObserver& observer = {});

OptimizationResult optimize(const ValidatedConfig& config, const RhsGeometry& geometry,
                            const ChannelRealization& channels, Rng& rng);

nlohmann::json trace_to_json(const OptimizationTrace& trace);

} // namespace holosec
