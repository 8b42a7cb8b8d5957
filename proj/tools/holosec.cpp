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

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "holosec/checks.hpp"
#include "holosec/experiment.hpp"

namespace {

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::vector<double> parse_values(const std::string& csv)
{
    std::vector<double> v;
    for (const auto& item : split(csv)) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw holosec::ConfigError("bad sweep value '" + item + "'");
        v.push_back(x);
    }
    return v;
}

int run_command(const std::string& config_path, const std::string& sweep, const std::string& values,
                int trials, const std::string& schemes, std::optional<std::uint64_t> seed,
                const std::string& out,
                unsigned threads, bool timing, const std::string& plot)
{
    holosec::SweepSpec spec;
    if (!config_path.empty())
        spec.base = holosec::load_config(config_path);
    spec.variable = holosec::parse_sweep_variable(sweep);
    spec.values = parse_values(values);
    spec.trials = trials;
    spec.schemes.clear();
    for (const auto& s : split(schemes))
        spec.schemes.push_back(holosec::parse_scheme(s));
    spec.seed = seed.value_or(spec.base.rng_seed);
    spec.threads = threads;
    spec.record_runtime = timing;
    holosec::validate_sweep(spec);
    const auto parent = std::filesystem::absolute(out).parent_path();
    if (!std::filesystem::is_directory(parent))
        throw std::runtime_error("output directory '" + parent.string() + "' does not exist");

    const auto rows = holosec::run_sweep(spec);
    holosec::write_csv(rows, out);

    int failed = 0;
    for (const auto& r : rows)
        failed += r.error.has_value();
    for (const auto& [key, cell] : holosec::summarize(rows))
        std::printf("%s=%g %-8s mean secrecy %.4f bits/s/Hz over %d trials\n", sweep.c_str(),
                    key.first, key.second.c_str(), cell.mean_secrecy, cell.count);
    if (failed)
        std::fprintf(stderr, "warning: %d trial(s) failed; see NaN rows in %s\n", failed, out.c_str());

    if (!plot.empty()) {
        std::ofstream f(plot);
        if (!f)
            throw std::runtime_error("cannot open '" + plot + "' for writing");
        const std::string png = plot.substr(0, plot.rfind('.')) + ".png";
        f << holosec::gnuplot_script(rows, png);
    }
    return 0;
}

int check_command(std::uint64_t seed)
{
    int failed = 0;
    for (const auto& r : holosec::run_property_checks(seed)) {
        std::printf("%s  %-36s %s (%.2f s)\n", r.passed ? "ok  " : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        failed += !r.passed;
    }
    if (failed) {
        std::printf("%d check(s) failed\n", failed);
        return 1;
    }
    std::printf("all checks passed\n");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secrecy-rate optimization for holographic-surface downlinks"};
    app.require_subcommand(1);

    std::string config_path, sweep, values, schemes = "proposed,random", out, plot;
    int trials = 100;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    bool timing = false;

    auto* run = app.add_subcommand("run", "Run a Monte Carlo sweep and write CSV rows");
    run->add_option("--config", config_path, "JSON system configuration")->check(CLI::ExistingFile);
    run->add_option("--sweep", sweep, "Swept variable")
        ->required()
        ->check(CLI::IsMember({"power", "rhs-size", "rf-chains", "rician"}));
    run->add_option("--values", values, "Comma-separated sweep values")->required();
    run->add_option("--trials", trials, "Trials per sweep value")->check(CLI::PositiveNumber);
    run->add_option("--schemes", schemes, "Comma-separated subset of proposed,random");
    run->add_option("--seed", seed, "Base seed (default: rng_seed from the config)");
    run->add_option("--out", out, "Output CSV path")->required();
    run->add_option("--threads", threads, "Worker threads (0 = all cores)");
    run->add_flag("--timing", timing, "Record optimizer wall-clock time per row");
    run->add_option("--plot", plot, "Also write a gnuplot script to this path");

    std::uint64_t check_seed = 1;
    auto* check = app.add_subcommand("check", "Run the invariant and property suite");
    check->add_option("--seed", check_seed, "Seed for the random instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run)
            return run_command(config_path, sweep, values, trials, schemes, seed, out, threads,
                               timing, plot);
        return check_command(check_seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "holosec: %s\n", e.what());
        return 2;
    }
}
