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

#include <doctest.h>

#include <cmath>

#include "holosec/artificial_noise.hpp"
#include "holosec/optimizer.hpp"
#include "oracles.hpp"

using namespace holosec;

namespace {

ValidatedConfig small(int M = 9, int R = 2)
{
    SystemConfig c;
    c.num_elements = M;
    c.num_rf_chains = R;
    c.max_outer_iters = 30;
    return validate(c);
}

} // namespace

TEST_CASE("initialize is deterministic and feasible")
{
    const auto cfg = small();
    const auto geo = make_geometry(cfg);
    const auto ch = draw_channels(cfg, geo, 7);
    Rng a(3), b(3);
    const auto s1 = initialize(cfg, geo, ch, a);
    const auto s2 = initialize(cfg, geo, ch, b);
    CHECK(s1.w == s2.w);
    CHECK(s1.v == s2.v);
    CHECK(s1.z == s2.z);
    CHECK(s1.w.minCoeff() >= 0.01);
    CHECK(s1.w.maxCoeff() <= 1.0);
    CHECK(s1.z.norm() == 0.0);
    const CMatrix W = assemble_holographic(s1.w, geo.phi);
    CHECK((W * s1.v).squaredNorm() <= cfg.transmit_power * (1.0 + 1e-12));
}

TEST_CASE("initialize under a fixed AN fraction")
{
    SystemConfig c;
    c.num_elements = 9;
    c.num_rf_chains = 3;
    c.an_power_policy = AnPowerPolicy::FixedFraction;
    c.an_fraction = 0.0;
    auto cfg = validate(c);
    const auto geo = make_geometry(cfg);
    const auto ch = draw_channels(cfg, geo, 11);
    Rng r0(1);
    CHECK(initialize(cfg, geo, ch, r0).z.norm() == 0.0);

    c.an_fraction = 0.25;
    cfg = validate(c);
    Rng r1(1);
    const auto s = initialize(cfg, geo, ch, r1);
    CHECK(s.z.squaredNorm() == doctest::Approx(0.25 * cfg.transmit_power).epsilon(1e-10));
    const CMatrix W = assemble_holographic(s.w, geo.phi);
    CHECK((W * s.v).squaredNorm() <= 0.75 * cfg.transmit_power * (1.0 + 1e-12));
}

TEST_CASE("initialize with a dead Bob link")
{
    const auto cfg = small();
    const auto geo = make_geometry(cfg);
    auto ch = draw_channels(cfg, geo, 5);
    ch.h_b.setZero();
    Rng r(2);
    const auto s = initialize(cfg, geo, ch, r);
    CHECK(s.v.norm() == 0.0);
    CHECK(std::isfinite(s.w.sum()));
}

TEST_CASE("converged")
{
    OptimizationTrace t;
    CHECK_FALSE(converged(t, 1e-5));
    t.records.push_back({});
    CHECK_FALSE(converged(t, 1e-5));
    t.records.back().secrecy = 1.0;
    t.records.push_back({});
    t.records.back().secrecy = 1.0 + 5e-6;
    CHECK(converged(t, 1e-5));
    t.records.back().secrecy = 1.0 + 2e-5;
    CHECK_FALSE(converged(t, 1e-5));
}

TEST_CASE("restore_feasibility keeps AN power and orthogonality")
{
    oracle::Gen g(4);
    const auto cfg = small(16, 3);
    const auto geo = make_geometry(cfg);
    const auto ch = draw_channels(cfg, geo, 9);
    BeamformingState s;
    s.w = oracle::random_box(16, g);
    s.v = oracle::random_cvec(3, g, 1.0);
    s.z = oracle::random_cvec(3, g, 0.05);
    const double pz = s.z.squaredNorm();
    const CMatrix W = assemble_holographic(s.w, geo.phi);
    restore_feasibility(s, W, ch, cfg);
    CHECK(s.z.squaredNorm() == doctest::Approx(pz).epsilon(1e-12));
    CHECK(std::abs(oracle::inner(ch.h_b, W, s.z)) <= 1e-10 * std::abs(oracle::inner(ch.h_b, W, s.v)) + 1e-30);
    CHECK((W * s.v).squaredNorm() + pz <= cfg.transmit_power * (1.0 + 1e-12));
}

TEST_CASE("optimize on identical links yields zero secrecy")
{
    SystemConfig c;
    c.num_elements = 9;
    c.noise_power_eve_dbm = c.noise_power_bob_dbm;
    c.max_outer_iters = 10;
    const auto cfg = validate(c);
    const auto geo = make_geometry(cfg);
    auto ch = draw_channels(cfg, geo, 13);
    ch.g_e = ch.h_b;
    Rng r(1);
    const auto res = optimize(cfg, geo, ch, r);
    CHECK(res.report.secrecy <= 1e-12);
    for (const auto& rec : res.trace.records)
        CHECK(rec.secrecy <= 1e-12);
}

TEST_CASE("optimize without an eavesdropper maximizes Bob's rate")
{
    const auto cfg = small(9, 2);
    const auto geo = make_geometry(cfg);
    auto ch = draw_channels(cfg, geo, 17);
    ch.g_e.setZero();
    Rng r(1);
    const auto res = optimize(cfg, geo, ch, r);
    CHECK(res.report.rate_eve == 0.0);
    CHECK(res.report.secrecy == doctest::Approx(res.report.rate_bob).epsilon(1e-12));
    CHECK(res.report.secrecy >= res.trace.initial.secrecy - 1e-9);
}

TEST_CASE("optimize respects constraints on every record")
{
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto cfg = small(16, 2);
        const auto geo = make_geometry(cfg);
        const auto ch = draw_channels(cfg, geo, seed);
        Rng r(seed);
        const auto res = optimize(cfg, geo, ch, r);
        CHECK(!res.trace.records.empty());
        CHECK(res.trace.records.size() <= 30u);
        for (const auto& rec : res.trace.records) {
            CHECK(rec.power_signal + rec.power_an <= cfg.transmit_power * (1.0 + 1e-9));
            CHECK(rec.secrecy >= 0.0);
        }
        CHECK(res.state.w.minCoeff() >= 0.0);
        CHECK(res.state.w.maxCoeff() <= 1.0);
        const CMatrix W = assemble_holographic(res.state.w, geo.phi);
        CHECK(res.report.secrecy ==
              doctest::Approx(oracle::secrecy(ch.h_b, ch.g_e, W, res.state.v, res.state.z,
                                              cfg.noise_bob, cfg.noise_eve)).epsilon(1e-9));
        if (res.trace.termination == Termination::Converged)
            CHECK(converged(res.trace, cfg.raw.outer_tolerance));
    }
}

TEST_CASE("trace_to_json")
{
    const auto cfg = small();
    const auto geo = make_geometry(cfg);
    const auto ch = draw_channels(cfg, geo, 1);
    Rng r(1);
    const auto res = optimize(cfg, geo, ch, r);
    const auto j = trace_to_json(res.trace);
    CHECK(j["records"].size() == res.trace.records.size());
    CHECK(j["records"].back()["secrecy"].get<double>() == res.trace.records.back().secrecy);
}

TEST_CASE("optimize with a dead Bob link reports zero secrecy")
{
    const auto cfg = small();
    const auto geo = make_geometry(cfg);
    auto ch = draw_channels(cfg, geo, 21);
    ch.h_b.setZero();
    Rng r(1);
    const auto res = optimize(cfg, geo, ch, r);
    CHECK(res.report.secrecy == 0.0);
}

// Known gap: the amplitude step ignores the power coupling through W, and the
// rescaling of v that follows can lower Bob's rate.
TEST_CASE("optimize without an eavesdropper has a nondecreasing trace" * doctest::should_fail())
{
    for (std::uint64_t seed : {4, 5, 6}) {
        const auto cfg = small(16, 2);
        const auto geo = make_geometry(cfg);
        auto ch = draw_channels(cfg, geo, seed);
        ch.g_e.setZero();
        Rng r(seed);
        const auto res = optimize(cfg, geo, ch, r);
        double prev = res.trace.initial.secrecy;
        int drops = 0;
        for (const auto& rec : res.trace.records) {
            drops += rec.secrecy < prev - 1e-9;
            prev = rec.secrecy;
        }
        CHECK(drops == 0);
    }
}

// Known gap: box-only amplitude ascent settles on corners of [0,1]^M, while
// the best feasible triples use fractional amplitudes.
TEST_CASE("optimize on a small instance against random feasible triples" * doctest::should_fail())
{
    SystemConfig c;
    c.num_elements = 4;
    c.num_rf_chains = 2;
    const auto cfg = validate(c);
    const auto geo = make_geometry(cfg);
    const auto ch = draw_channels(cfg, geo, 2026);
    Rng r(1);
    const auto res = optimize(cfg, geo, ch, r);

    oracle::Gen g(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double best = 0.0;
    for (int i = 0; i < 1000000; ++i) {
        const RVector w = oracle::random_box(4, g);
        const CMatrix W = assemble_holographic(w, geo.phi);
        const double total = cfg.transmit_power * u(g);
        const double split = u(g);
        const CVector dv = oracle::random_unit(2, g);
        const CVector dz = oracle::random_unit(2, g);
        const double nv = (W * dv).norm();
        const double nz = dz.norm();
        if (nv == 0.0)
            continue;
        const CVector v = dv * std::sqrt(total * split) / nv;
        const CVector z = dz * std::sqrt(total * (1.0 - split)) / nz;
        best = std::max(best, oracle::secrecy(ch.h_b, ch.g_e, W, v, z, cfg.noise_bob, cfg.noise_eve));
    }
    MESSAGE("optimizer " << res.report.secrecy << " search " << best);
    CHECK(res.report.secrecy >= best - 1e-2);
}
