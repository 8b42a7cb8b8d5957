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

#include "holosec/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "holosec/artificial_noise.hpp"
#include "holosec/digital.hpp"
#include "holosec/optimizer.hpp"

namespace holosec {

std::string to_string(SweepVariable v)
{
    switch (v) {
    case SweepVariable::TransmitPowerDbm: return "power";
    case SweepVariable::RhsSize: return "rhs-size";
    case SweepVariable::RfChains: return "rf-chains";
    case SweepVariable::RicianK: return "rician";
    }
    return "?";
}

std::string to_string(Scheme s)
{
    return s == Scheme::Proposed ? "proposed" : "random";
}

SweepVariable parse_sweep_variable(const std::string& s)
{
    for (auto v : {SweepVariable::TransmitPowerDbm, SweepVariable::RhsSize, SweepVariable::RfChains,
                   SweepVariable::RicianK})
        if (to_string(v) == s)
            return v;
    throw ConfigError("unknown sweep variable '" + s + "'");
}

Scheme parse_scheme(const std::string& s)
{
    if (s == "proposed")
        return Scheme::Proposed;
    if (s == "random")
        return Scheme::Random;
    throw ConfigError("unknown scheme '" + s + "'");
}

void validate_sweep(const SweepSpec& spec)
{
    if (spec.values.empty())
        throw ConfigError("sweep needs at least one value");
    for (std::size_t i = 1; i < spec.values.size(); ++i)
        if (!(spec.values[i] > spec.values[i - 1]))
            throw ConfigError("sweep values must be strictly increasing");
    if (spec.trials < 1)
        throw ConfigError("trials must be at least 1");
    if (spec.schemes.empty())
        throw ConfigError("at least one scheme is required");
    for (double v : spec.values) {
        if (!std::isfinite(v))
            throw ConfigError("sweep values must be finite");
        const bool integral = v == std::floor(v);
        if (spec.variable == SweepVariable::RhsSize &&
            (!integral || perfect_square_root(static_cast<int>(v)) <= 0))
            throw ConfigError("RHS sizes must be perfect squares");
        if (spec.variable == SweepVariable::RfChains && (!integral || v < 1.0))
            throw ConfigError("RF chain counts must be positive integers");
    }
    // Surface every per-value config error before any trial runs.
    for (double v : spec.values)
        validate(apply_sweep_value(spec.base, spec.variable, v));
}

SystemConfig apply_sweep_value(const SystemConfig& base, SweepVariable variable, double value)
{
    SystemConfig c = base;
    switch (variable) {
    case SweepVariable::TransmitPowerDbm: c.transmit_power_dbm = value; break;
    case SweepVariable::RhsSize: c.num_elements = static_cast<int>(std::lround(value)); break;
    case SweepVariable::RfChains: c.num_rf_chains = static_cast<int>(std::lround(value)); break;
    case SweepVariable::RicianK: c.rician_factor = value; break;
    }
    return c;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, double value, int trial)
{
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(value));
    h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(trial)));
    return h;
}

std::uint64_t stream_seed(std::uint64_t trial_seed, std::uint64_t stream)
{
    return splitmix64(trial_seed ^ splitmix64(stream + 0x5851f42d4c957f2dULL));
}

BaselineResult random_baseline(const ValidatedConfig& config, const RhsGeometry& geometry,
                               const ChannelRealization& channels, Rng& rng)
{
    const Eigen::Index M = geometry.num_elements();
    const Eigen::Index R = geometry.num_feeds();
    std::uniform_real_distribution<double> amp(0.0, 1.0);

    BaselineResult out;
    auto& s = out.state;
    s.w.resize(M);
    for (Eigen::Index m = 0; m < M; ++m)
        s.w[m] = amp(rng);
    const CMatrix W = assemble_holographic(s.w, geometry.phi);

    const CVector matched = effective_bob_channel(W, channels.h_b);
    const double n = matched.norm();
    s.v = n > 0.0 ? CVector(matched / n) : CVector::Zero(R);
    s.z = CVector::Zero(R);
    s.v = power_scale(s.v, W, signal_budget(config, s.z));

    s.v = digital_step(s, channels, W, config).v;
    s.z = an_vector(null_space(matched), W, channels.g_e,
                    an_budget(config, (W * s.v).squaredNorm()));
    out.report = evaluate(channels.h_b, channels.g_e, W, s.v, s.z, config.noise_bob,
                          config.noise_eve);
    return out;
}

namespace {

struct PointSetup {
    ValidatedConfig config;
    RhsGeometry geometry;
};

void run_trial(const SweepSpec& spec, const PointSetup& point, double value, int trial,
               ResultRow* out)
{
    const std::uint64_t trial_seed = derive_seed(spec.seed, value, trial);
    for (std::size_t k = 0; k < spec.schemes.size(); ++k) {
        ResultRow& row = out[k];
        row.sweep_variable = to_string(spec.variable);
        row.sweep_value = value;
        row.trial = trial;
        row.scheme = to_string(spec.schemes[k]);
        row.seed = trial_seed;
    }
    try {
        const ChannelRealization ch =
            draw_channels(point.config, point.geometry, stream_seed(trial_seed, 0));
        for (std::size_t k = 0; k < spec.schemes.size(); ++k) {
            ResultRow& row = out[k];
            try {
                SecrecyReport rep;
                const auto t0 = std::chrono::steady_clock::now();
                if (spec.schemes[k] == Scheme::Proposed) {
                    Rng rng(stream_seed(trial_seed, 1));
                    const auto res = optimize(point.config, point.geometry, ch, rng);
                    rep = res.report;
                    row.outer_iters = static_cast<int>(res.trace.records.size());
                } else {
                    Rng rng(stream_seed(trial_seed, 2));
                    rep = random_baseline(point.config, point.geometry, ch, rng).report;
                    row.outer_iters = 0;
                }
                const auto t1 = std::chrono::steady_clock::now();
                row.secrecy_bits = rep.secrecy;
                row.rate_bob = rep.rate_bob;
                row.rate_eve = rep.rate_eve;
                if (spec.record_runtime)
                    row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    } catch (const std::exception& e) {
        for (std::size_t k = 0; k < spec.schemes.size(); ++k)
            out[k].error = e.what();
    }
    for (std::size_t k = 0; k < spec.schemes.size(); ++k) {
        if (out[k].error) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            out[k].secrecy_bits = out[k].rate_bob = out[k].rate_eve = nan;
        }
    }
}

} // namespace

std::vector<ResultRow> run_sweep(const SweepSpec& spec)
{
    validate_sweep(spec);

    std::vector<PointSetup> points;
    points.reserve(spec.values.size());
    for (double v : spec.values) {
        PointSetup p{validate(apply_sweep_value(spec.base, spec.variable, v)), {}};
        p.geometry = make_geometry(p.config);
        points.push_back(std::move(p));
    }

    const std::size_t per_trial = spec.schemes.size();
    const std::size_t jobs = spec.values.size() * static_cast<std::size_t>(spec.trials);
    std::vector<ResultRow> rows(jobs * per_trial);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs; j = next++) {
            const std::size_t vi = j / static_cast<std::size_t>(spec.trials);
            const int trial = static_cast<int>(j % static_cast<std::size_t>(spec.trials));
            run_trial(spec, points[vi], spec.values[vi], trial, &rows[j * per_trial]);
        }
    };

    unsigned n = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, jobs));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < n; ++i)
            pool.emplace_back(worker);
    }
    // Slots are already in (value, trial, scheme) order.
    return rows;
}

namespace {

std::string fmt9(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

} // namespace

std::string format_csv(const std::vector<ResultRow>& rows)
{
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += r.sweep_variable + ',' + fmt9(r.sweep_value) + ',' + std::to_string(r.trial) + ',' +
               r.scheme + ',' + fmt9(r.secrecy_bits) + ',' + fmt9(r.rate_bob) + ',' +
               fmt9(r.rate_eve) + ',' + std::to_string(r.outer_iters) + ',' + fmt9(r.runtime_ms) +
               ',' + std::to_string(r.seed) + '\n';
    }
    return out;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << format_csv(rows);
    f.flush();
    if (!f)
        throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<ResultRow> parse_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("parse_csv: missing or unexpected header");
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            f.push_back(cell);
        if (f.size() != 10)
            throw std::runtime_error("parse_csv: expected 10 fields in '" + line + "'");
        ResultRow r;
        r.sweep_variable = f[0];
        r.sweep_value = std::stod(f[1]);
        r.trial = std::stoi(f[2]);
        r.scheme = f[3];
        r.secrecy_bits = std::stod(f[4]);
        r.rate_bob = std::stod(f[5]);
        r.rate_eve = std::stod(f[6]);
        r.outer_iters = std::stoi(f[7]);
        r.runtime_ms = std::stod(f[8]);
        r.seed = std::stoull(f[9]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::map<std::pair<double, std::string>, CellSummary> summarize(const std::vector<ResultRow>& rows)
{
    std::map<std::pair<double, std::string>, CellSummary> cells;
    for (const auto& r : rows) {
        auto& c = cells[{r.sweep_value, r.scheme}];
        if (r.error || !std::isfinite(r.secrecy_bits)) {
            ++c.failures;
            continue;
        }
        c.mean_secrecy += r.secrecy_bits;
        ++c.count;
    }
    for (auto& [_, c] : cells)
        if (c.count > 0)
            c.mean_secrecy /= c.count;
    return cells;
}

std::string gnuplot_script(const std::vector<ResultRow>& rows, const std::string& output_png)
{
    const auto cells = summarize(rows);
    std::set<std::string> schemes;
    for (const auto& [key, _] : cells)
        schemes.insert(key.second);
    const std::string xlabel = rows.empty() ? "value" : rows.front().sweep_variable;

    std::ostringstream os;
    os << "set terminal pngcairo size 800,600\n"
       << "set output '" << output_png << "'\n"
       << "set xlabel '" << xlabel << "'\n"
       << "set ylabel 'mean secrecy rate (bits/s/Hz)'\n"
       << "set grid\nset key left top\n";
    for (const auto& s : schemes) {
        os << "$" << s << " << EOD\n";
        for (const auto& [key, c] : cells)
            if (key.second == s && c.count > 0)
                os << fmt9(key.first) << ' ' << fmt9(c.mean_secrecy) << '\n';
        os << "EOD\n";
    }
    os << "plot ";
    bool first = true;
    for (const auto& s : schemes) {
        os << (first ? "" : ", ") << "$" << s << " using 1:2 with linespoints title '" << s << "'";
        first = false;
    }
    os << '\n';
    return os.str();
}

} // namespace holosec
