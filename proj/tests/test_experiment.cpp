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
#include <sstream>

#include "holosec/experiment.hpp"

using namespace holosec;

namespace {

SweepSpec tiny(SweepVariable var, std::vector<double> values, int trials)
{
    SweepSpec s;
    s.variable = var;
    s.values = std::move(values);
    s.trials = trials;
    s.base.num_elements = 9;
    s.base.max_outer_iters = 5;
    s.threads = 1;
    return s;
}

} // namespace

TEST_CASE("names round trip")
{
    for (auto v : {SweepVariable::TransmitPowerDbm, SweepVariable::RhsSize, SweepVariable::RfChains,
                   SweepVariable::RicianK})
        CHECK(parse_sweep_variable(to_string(v)) == v);
    CHECK(to_string(SweepVariable::RhsSize) == "rhs-size");
    CHECK(parse_scheme("random") == Scheme::Random);
    CHECK_THROWS_AS(parse_sweep_variable("bogus"), ConfigError);
    CHECK_THROWS_AS(parse_scheme("bogus"), ConfigError);
}

TEST_CASE("validate_sweep")
{
    CHECK_NOTHROW(validate_sweep(tiny(SweepVariable::RhsSize, {9, 16}, 1)));
    CHECK_THROWS_AS(validate_sweep(tiny(SweepVariable::RhsSize, {10}, 1)), ConfigError);
    CHECK_THROWS_AS(validate_sweep(tiny(SweepVariable::RfChains, {0}, 1)), ConfigError);
    CHECK_THROWS_AS(validate_sweep(tiny(SweepVariable::TransmitPowerDbm, {}, 1)), ConfigError);
    CHECK_THROWS_AS(validate_sweep(tiny(SweepVariable::TransmitPowerDbm, {20, 10}, 1)), ConfigError);
    CHECK_THROWS_AS(validate_sweep(tiny(SweepVariable::TransmitPowerDbm, {10}, 0)), ConfigError);
    CHECK_THROWS_AS(validate_sweep(tiny(SweepVariable::RicianK, {-1}, 1)), ConfigError);
}

TEST_CASE("apply_sweep_value touches only the swept field")
{
    SystemConfig base;
    const auto c = apply_sweep_value(base, SweepVariable::RfChains, 4);
    CHECK(c.num_rf_chains == 4);
    CHECK(c.num_elements == base.num_elements);
    CHECK(apply_sweep_value(base, SweepVariable::RicianK, 3.5).rician_factor == 3.5);
    CHECK(apply_sweep_value(base, SweepVariable::TransmitPowerDbm, 12).transmit_power_dbm == 12);
}

TEST_CASE("seed derivation")
{
    CHECK(derive_seed(1, 10.0, 0) == derive_seed(1, 10.0, 0));
    CHECK(derive_seed(1, 10.0, 0) != derive_seed(1, 10.0, 1));
    CHECK(derive_seed(1, 10.0, 0) != derive_seed(1, 20.0, 0));
    CHECK(derive_seed(1, 10.0, 0) != derive_seed(2, 10.0, 0));
    CHECK(stream_seed(5, 0) != stream_seed(5, 1));
}

TEST_CASE("sweep cardinality and ordering")
{
    const auto spec = tiny(SweepVariable::TransmitPowerDbm, {10, 20}, 3);
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 12u);
    std::size_t i = 0;
    for (double v : spec.values)
        for (int t = 0; t < 3; ++t)
            for (const char* s : {"proposed", "random"}) {
                CHECK(rows[i].sweep_value == v);
                CHECK(rows[i].trial == t);
                CHECK(rows[i].scheme == s);
                CHECK(rows[i].sweep_variable == "power");
                CHECK(!rows[i].error);
                CHECK(rows[i].runtime_ms == 0.0);
                ++i;
            }
}

TEST_CASE("sweep is reproducible and independent of thread count")
{
    auto spec = tiny(SweepVariable::RfChains, {1, 2}, 2);
    const auto a = format_csv(run_sweep(spec));
    spec.threads = 3;
    const auto b = format_csv(run_sweep(spec));
    CHECK(a == b);
}

TEST_CASE("trial results do not depend on the number of trials")
{
    const auto few = run_sweep(tiny(SweepVariable::TransmitPowerDbm, {15}, 1));
    const auto many = run_sweep(tiny(SweepVariable::TransmitPowerDbm, {15}, 3));
    REQUIRE(few.size() == 2u);
    for (int k = 0; k < 2; ++k) {
        CHECK(few[k].secrecy_bits == many[k].secrecy_bits);
        CHECK(few[k].seed == many[k].seed);
    }
}

TEST_CASE("csv formatting")
{
    CHECK(format_csv({}) == std::string(kCsvHeader) + "\n");

    std::vector<ResultRow> rows(3);
    for (int i = 0; i < 3; ++i) {
        rows[i].sweep_variable = "rician";
        rows[i].sweep_value = 2.5;
        rows[i].trial = i;
        rows[i].scheme = "random";
        rows[i].secrecy_bits = 0.1 * i;
        rows[i].rate_bob = 1.0 / 3.0;
        rows[i].rate_eve = 0.0;
        rows[i].seed = 18446744073709551615ULL;
    }
    const std::string text = format_csv(rows);
    int lines = 0;
    for (char ch : text)
        lines += ch == '\n';
    CHECK(lines == 4);

    std::istringstream in(text);
    const auto back = parse_csv(in);
    REQUIRE(back.size() == 3u);
    CHECK(back[2].seed == rows[2].seed);
    CHECK(back[1].rate_bob == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(format_csv(back) == text);

    std::istringstream bad("nope\n");
    CHECK_THROWS(parse_csv(bad));
}

TEST_CASE("summarize skips failed rows")
{
    std::vector<ResultRow> rows(3);
    rows[0].scheme = rows[1].scheme = rows[2].scheme = "proposed";
    rows[0].secrecy_bits = 1.0;
    rows[1].secrecy_bits = 3.0;
    rows[2].secrecy_bits = std::nan("");
    rows[2].error = "boom";
    const auto cells = summarize(rows);
    const auto& c = cells.at({0.0, "proposed"});
    CHECK(c.count == 2);
    CHECK(c.failures == 1);
    CHECK(c.mean_secrecy == 2.0);

    const auto script = gnuplot_script(rows, "out.png");
    CHECK(script.find("set output 'out.png'") != std::string::npos);
    CHECK(script.find("$proposed << EOD") != std::string::npos);
}

TEST_CASE("write_csv reports unwritable paths")
{
    CHECK_THROWS_AS(write_csv({}, "/nonexistent-dir/x.csv"), std::runtime_error);
}

TEST_CASE("single trial of one scheme gives one row")
{
    auto spec = tiny(SweepVariable::TransmitPowerDbm, {20}, 1);
    spec.schemes = {Scheme::Proposed};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 1u);
    CHECK(rows[0].scheme == "proposed");
    CHECK(rows[0].outer_iters >= 1);
}

TEST_CASE("rows carry nonnegative rates and both schemes share a seed")
{
    const auto rows = run_sweep(tiny(SweepVariable::RicianK, {0, 5}, 2));
    for (const auto& r : rows) {
        CHECK(r.secrecy_bits >= 0.0);
        CHECK(r.rate_bob >= 0.0);
        CHECK(r.rate_eve >= 0.0);
    }
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
        CHECK(rows[i].seed == rows[i + 1].seed);
}

TEST_CASE("random baseline is deterministic and feasible")
{
    SystemConfig c;
    c.num_elements = 16;
    const auto cfg = validate(c);
    const auto geo = make_geometry(cfg);
    const auto ch = draw_channels(cfg, geo, 3);
    Rng a(8), b(8);
    const auto r1 = random_baseline(cfg, geo, ch, a);
    const auto r2 = random_baseline(cfg, geo, ch, b);
    CHECK(r1.state.w == r2.state.w);
    CHECK(r1.report.secrecy == r2.report.secrecy);
    CHECK(r1.report.power_total <= cfg.transmit_power * (1.0 + 1e-9));
    CHECK(r1.state.w.minCoeff() >= 0.0);
    CHECK(r1.state.w.maxCoeff() <= 1.0);
}
