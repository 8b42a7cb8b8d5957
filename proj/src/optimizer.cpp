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

#include "holosec/optimizer.hpp"

#include <cmath>
#include <random>

#include "holosec/artificial_noise.hpp"
#include "holosec/digital.hpp"

namespace holosec {

BeamformingState initialize(const ValidatedConfig& config, const RhsGeometry& geometry,
                            const ChannelRealization& channels, Rng& rng)
{
    const Eigen::Index M = geometry.num_elements();
    const Eigen::Index R = geometry.num_feeds();
    std::uniform_real_distribution<double> amp(0.01, 1.0);

    BeamformingState s;
    s.w.resize(M);
    for (Eigen::Index m = 0; m < M; ++m)
        s.w[m] = amp(rng);
    const CMatrix W = assemble_holographic(s.w, geometry.phi);

    const CVector matched = effective_bob_channel(W, channels.h_b);
    const double n = matched.norm();
    s.v = n > 0.0 ? CVector(matched / n) : CVector::Zero(R);

    s.z = CVector::Zero(R);
    if (config.raw.an_power_policy == AnPowerPolicy::FixedFraction && config.raw.an_fraction > 0.0) {
        s.z = an_vector(null_space(matched), W, channels.g_e,
                        config.raw.an_fraction * config.transmit_power);
    }
    s.v = power_scale(s.v, W, signal_budget(config, s.z));
    return s;
}

bool converged(const OptimizationTrace& trace, double tolerance)
{
    const auto& r = trace.records;
    if (r.size() < 2)
        return false;
    return std::abs(r.back().secrecy - r[r.size() - 2].secrecy) < tolerance;
}

HolographicOptions holographic_options(const ValidatedConfig& config)
{
    HolographicOptions o;
    o.learning_rate = config.raw.learning_rate;
    o.tolerance = config.raw.inner_tolerance;
    o.max_iters = config.raw.max_inner_iters;
    return o;
}

void restore_feasibility(BeamformingState& state, const CMatrix& W,
                         const ChannelRealization& channels, const ValidatedConfig& config)
{
    const double an_power = state.z.squaredNorm();
    if (an_power > 0.0)
        state.z = an_vector(null_space(effective_bob_channel(W, channels.h_b)), W, channels.g_e,
                            an_power);
    state.v = power_scale(state.v, W, signal_budget(config, state.z));
}

OptimizationResult optimize(const ValidatedConfig& config, const RhsGeometry& geometry,
                            const ChannelRealization& channels, BeamformingState state,
                            const IterationObserver& observer)
{
    OptimizationResult out;
    const auto& cfg = config.raw;
    const HolographicOptions holo_opts = holographic_options(config);

    CMatrix W = assemble_holographic(state.w, geometry.phi);
    out.trace.initial = evaluate(channels.h_b, channels.g_e, W, state.v, state.z,
                                 config.noise_bob, config.noise_eve);

    for (int t = 0; t < cfg.max_outer_iters; ++t) {
        IterationRecord rec;

        const DigitalStep ds = digital_step(state, channels, W, config);
        state.v = ds.v;
        rec.digital_anchor_quotient = ds.anchor_quotient;
        rec.digital_quotient = ds.eig.value;

        const double p_an = an_budget(config, (W * state.v).squaredNorm());
        state.z = an_vector(null_space(effective_bob_channel(W, channels.h_b)), W, channels.g_e,
                            p_an);

        HolographicContext ctx{channels.h_b, channels.g_e, geometry.phi, state.v, state.z,
                               config.noise_bob, config.noise_eve};
        const HolographicResult hr = optimize_holographic(state.w, ctx, holo_opts);
        state.w = hr.w;
        rec.inner_iters_holo = hr.iterations;

        W = assemble_holographic(state.w, geometry.phi);
        restore_feasibility(state, W, channels, config);

        const SecrecyReport rep = evaluate(channels.h_b, channels.g_e, W, state.v, state.z,
                                           config.noise_bob, config.noise_eve);
        rec.secrecy = rep.secrecy;
        rec.rate_bob = rep.rate_bob;
        rec.rate_eve = rep.rate_eve;
        rec.power_signal = rep.power_signal;
        rec.power_an = rep.power_an;
        out.trace.records.push_back(rec);
        if (observer)
            observer(state, rec);

        if (converged(out.trace, cfg.outer_tolerance)) {
            out.trace.termination = Termination::Converged;
            break;
        }
    }

    out.state = std::move(state);
    out.report = evaluate(channels.h_b, channels.g_e, W, out.state.v, out.state.z,
                          config.noise_bob, config.noise_eve);
    return out;
}

OptimizationResult optimize(const ValidatedConfig& config, const RhsGeometry& geometry,
                            const ChannelRealization& channels, Rng& rng)
{
    return optimize(config, geometry, channels, initialize(config, geometry, channels, rng));
}

nlohmann::json trace_to_json(const OptimizationTrace& trace)
{
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : trace.records) {
        recs.push_back({
            {"secrecy", r.secrecy},
            {"rate_bob", r.rate_bob},
            {"rate_eve", r.rate_eve},
            {"power_signal", r.power_signal},
            {"power_an", r.power_an},
            {"inner_iters_holo", r.inner_iters_holo},
            {"digital_anchor_quotient", r.digital_anchor_quotient},
            {"digital_quotient", r.digital_quotient},
        });
    }
    return {
        {"initial_secrecy", trace.initial.secrecy},
        {"termination", trace.termination == Termination::Converged ? "converged" : "max_iters"},
        {"records", recs},
    };
}

} // namespace holosec
