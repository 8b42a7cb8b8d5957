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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holosec/channel.hpp"
#include "holosec/config.hpp"
#include "holosec/geometry.hpp"
#include "holosec/metrics.hpp"
#include "holosec/state.hpp"

namespace holosec {

enum class SweepVariable { TransmitPowerDbm, RhsSize, RfChains, RicianK };
enum class Scheme { Proposed, Random };

std::string to_string(SweepVariable v);
std::string to_string(Scheme s);
SweepVariable parse_sweep_variable(const std::string& s);
Scheme parse_scheme(const std::string& s);

struct SweepSpec {
    SweepVariable variable = SweepVariable::TransmitPowerDbm;
    std::vector<double> values;
    int trials = 100;
    std::vector<Scheme> schemes{Scheme::Proposed, Scheme::Random};
    SystemConfig base;
    std::uint64_t seed = 1;
    unsigned threads = 0;        // 0 = hardware concurrency
    bool record_runtime = false; // wall-clock breaks byte-reproducibility, so opt-in
};

struct ResultRow {
    std::string sweep_variable;
    double sweep_value = 0.0;
    int trial = 0;
    std::string scheme;
    double secrecy_bits = 0.0;
    double rate_bob = 0.0;
    double rate_eve = 0.0;
    int outer_iters = 0;
    double runtime_ms = 0.0;
    std::uint64_t seed = 0;
    std::optional<std::string> error; // failed trial; metrics are NaN
};

/// Throws ConfigError if the values are empty or not strictly increasing,
/// trials < 1, schemes empty, or an RHS size is not a perfect square.
void validate_sweep(const SweepSpec& spec);

/// The base config with the swept parameter set to `value`.
SystemConfig apply_sweep_value(const SystemConfig& base, SweepVariable variable, double value);

/// Stable 64-bit mix of (seed, bit pattern of value, trial).
std::uint64_t derive_seed(std::uint64_t seed, double value, int trial);

/// Independent sub-stream of a trial seed: 0 channels, 1 proposed init, 2 baseline weights.
std::uint64_t stream_seed(std::uint64_t trial_seed, std::uint64_t stream);

struct BaselineResult {
    BeamformingState state;
    SecrecyReport report;
};

/// w ~ U(0, 1) held fixed; one digital step followed by one AN design.
BaselineResult random_baseline(const ValidatedConfig& config, const RhsGeometry& geometry,
                               const ChannelRealization& channels, Rng& rng);

/// Rows sorted by (value, trial, scheme order in spec). Deterministic in the spec
/// regardless of thread count.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kCsvHeader =
    "sweep_variable,sweep_value,trial,scheme,secrecy_bits,rate_bob,rate_eve,outer_iters,runtime_ms,seed";

std::string format_csv(const std::vector<ResultRow>& rows);
/// Throws std::runtime_error on I/O failure.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::vector<ResultRow> parse_csv(std::istream& in);

struct CellSummary {
    double mean_secrecy = 0.0;
    int count = 0;
    int failures = 0;
};

/// Mean secrecy keyed by (sweep value, scheme name); failed rows are counted, not averaged.
std::map<std::pair<double, std::string>, CellSummary> summarize(const std::vector<ResultRow>& rows);

/// gnuplot script plotting mean secrecy against the swept value, one curve per scheme.
std::string gnuplot_script(const std::vector<ResultRow>& rows, const std::string& output_png);

} // namespace holosec
