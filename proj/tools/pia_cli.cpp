// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file pia_cli.cpp
//! Command-line front end: bounds, pia, features, mc, validate.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pia/config.hpp"
#include "pia/error.hpp"
#include "pia/iams.hpp"
#include "pia/io.hpp"
#include "pia/montecarlo.hpp"
#include "pia/pia.hpp"
#include "pia/validate.hpp"

namespace {

namespace fs = std::filesystem;

enum Exit : int { kOk = 0, kInvalid = 1, kConfig = 2 };

struct Options {
    std::string config;
    std::optional<int> k;
    std::optional<std::size_t> nu;
    std::optional<int> arc_points;
    std::optional<std::size_t> mc_samples;
    std::optional<std::uint64_t> seed;
    std::vector<double> probe;
    std::string out = ".";
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

struct Run {
    pia::ScenarioConfig cfg;
    pia::AngularGrid grid;
    std::size_t mc_samples;
    std::uint64_t seed;
};

Run resolve(const Options& o) {
    auto cfg = pia::load_config(o.config);
    if (o.k) {
        if (*o.k < 1) throw pia::ConfigError("--k", "must be >= 1");
        cfg.k_regions = *o.k;
    }
    if (o.nu) {
        if (*o.nu < 2) throw pia::ConfigError("--nu", "must be >= 2");
        cfg.n_u = *o.nu;
    }
    if (o.arc_points) {
        if (*o.arc_points < 2) throw pia::ConfigError("--arc-points", "must be >= 2");
        cfg.arc_points = *o.arc_points;
    }
    if (!o.probe.empty()) {
        for (double u : o.probe)
            if (!(u >= -1 && u <= 1)) throw pia::ConfigError("--probe", "must lie in [-1, 1]");
        cfg.probe_u = o.probe;
    }
    std::size_t samples = o.mc_samples.value_or(cfg.mc_samples.value_or(pia::kDefaultMcSamples));
    if (samples < 1) throw pia::ConfigError("--mc-samples", "must be >= 1");
    const std::uint64_t seed = o.seed.value_or(cfg.seed.value_or(1));
    auto grid = pia::uniform_grid(cfg.n_u);
    return {std::move(cfg), std::move(grid), samples, seed};
}

std::ofstream open_output(const Options& o, const std::string& name) {
    fs::create_directories(o.out);
    const auto path = fs::path(o.out) / name;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    return os;
}

void close_output(std::ofstream& os, const std::string& name) {
    os.close();
    if (!os) throw std::runtime_error("write failed: " + name);
    std::cout << "wrote " << name << '\n';
}

int cmd_bounds(const Options& o) {
    const auto run = resolve(o);
    const auto t0 = std::chrono::steady_clock::now();
    const auto curve = pia::power_bounds(run.cfg.scenario, run.grid, run.cfg.arc_points, o.threads);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto os = open_output(o, "bounds.csv");
    pia::io::write_bounds_csv(os, curve);
    close_output(os, "bounds.csv");
    std::cout << "bounds: " << run.grid.size() << " directions in " << secs << " s\n";
    return kOk;
}

int cmd_pia(const Options& o) {
    const auto run = resolve(o);
    const auto t0 = std::chrono::steady_clock::now();
    const auto map = pia::probability_map(run.cfg.scenario, run.grid, run.cfg.k_regions, run.cfg.arc_points, o.threads);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto os = open_output(o, "pia.csv");
    pia::io::write_pia_csv(os, map);
    close_output(os, "pia.csv");
    std::cout << "pia: K=" << run.cfg.k_regions << ", " << run.grid.size() << " directions in " << secs << " s\n";
    if (map.any_degenerate()) std::cerr << "warning: degenerate interval region at one or more directions\n";
    return kOk;
}

int cmd_features(const Options& o) {
    const auto run = resolve(o);
    const auto report =
        pia::feature_report(run.cfg.scenario, run.grid, run.cfg.k_regions, run.cfg.arc_points, o.threads);
    auto os = open_output(o, "features.json");
    os << pia::io::features_json(report).dump(2) << '\n';
    close_output(os, "features.json");
    return kOk;
}

std::string histogram_name(double u) { return "mc_histogram_u" + pia::io::format_number(u) + ".csv"; }

int cmd_mc(const Options& o) {
    const auto run = resolve(o);
    const auto map = pia::probability_map(run.cfg.scenario, run.grid, run.cfg.k_regions, run.cfg.arc_points, o.threads);
    const auto mc = pia::run_mc(run.cfg.scenario, map, run.mc_samples, run.seed, run.cfg.probe_u, o.threads);

    auto env = open_output(o, "mc_envelope.csv");
    pia::io::write_mc_envelope_csv(env, mc, map);
    close_output(env, "mc_envelope.csv");
    auto freq = open_output(o, "mc_frequency.csv");
    pia::io::write_mc_frequency_csv(freq, mc, map);
    close_output(freq, "mc_frequency.csv");
    for (const auto& h : mc.histograms) {
        const auto name = histogram_name(h.u);
        auto os = open_output(o, name);
        pia::io::write_histogram_csv(os, h);
        close_output(os, name);
    }
    for (double u : run.cfg.probe_u) {
        const std::size_t i = map.grid.nearest(u);
        std::size_t best = 0;
        for (std::size_t k = 1; k < map.p.size(); ++k)
            if (map.p[k][i] > map.p[best][i]) best = k;
        std::cout << "u=" << pia::io::format_number(map.grid[i]) << ": MC mode region " << mc.mode_region[i] + 1
                  << ", PIA argmax region " << best + 1 << '\n';
    }
    std::cout << "inclusion violations: " << mc.inclusion_violations << '\n';
    return mc.inclusion_violations == 0 ? kOk : kInvalid;
}

int cmd_validate(const Options& o) {
    const auto run = resolve(o);
    pia::ValidationOptions vo;
    vo.k_regions = run.cfg.k_regions;
    vo.arc_points = run.cfg.arc_points;
    vo.mc_samples = o.mc_samples.value_or(run.cfg.mc_samples.value_or(vo.mc_samples));
    vo.seed = run.seed;
    vo.threads = o.threads;
    const auto summary = pia::validate_scenario(run.cfg.scenario, run.grid, vo);
    for (const auto& w : summary.warnings) std::cout << "WARNING " << w << '\n';
    for (const auto& c : summary.checks) {
        const char* tag = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
        std::printf("%-4s  %-24s %s\n", tag, c.name.c_str(), c.detail.c_str());
    }
    for (const auto& n : summary.notes) std::cout << "note  " << n << '\n';
    std::cout << (summary.all_pass() ? "all checks passed" : "validation FAILED") << '\n';
    return summary.all_pass() ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probabilistic interval analysis of linear array power patterns"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--config", o.config, "scenario config (JSON)")->required();
        sub->add_option("--k", o.k, "number of probability regions");
        sub->add_option("--nu", o.nu, "number of angular samples over [-1, 1]");
        sub->add_option("--arc-points", o.arc_points, "outer-arc vertices per element polygon");
        sub->add_option("--mc-samples", o.mc_samples, "Monte Carlo realizations");
        sub->add_option("--seed", o.seed, "Monte Carlo seed");
        sub->add_option("--probe", o.probe, "probe direction u for MC histograms (repeatable)");
        sub->add_option("--out", o.out, "output directory");
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const Options&);
    };
    const Sub subs[] = {
        {"bounds", "IA-MS power pattern bounds -> bounds.csv", cmd_bounds},
        {"pia", "region probabilities -> pia.csv", cmd_pia},
        {"features", "Gamma/SLL intervals and probabilities -> features.json", cmd_features},
        {"mc", "Monte Carlo reference -> mc_*.csv", cmd_mc},
        {"validate", "run the invariant suite", cmd_validate},
    };
    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> handlers;
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_common(sub);
        handlers.emplace_back(sub, s.fn);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    }

    try {
        for (const auto& [sub, fn] : handlers)
            if (sub->parsed()) return fn(o);
    } catch (const pia::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
