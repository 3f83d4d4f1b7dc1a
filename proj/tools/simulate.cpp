/* Copyright 2026 The c2csim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Marketplace trust simulator CLI. Runs one or many (model, seed) pairs and
// writes the per-run CSV/JSON artifacts plus an aggregate report table.
//
// Examples:
//   simulate --model A --seed 7 --out out/
//   simulate --model all --seeds 1..20 --jobs 8 --report --out sweep/

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "c2csim/config.hpp"
#include "c2csim/experiment.hpp"

namespace {

// "1..20" (inclusive range), or a comma list "1,5,9", or a single value.
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    const auto range = text.find("..");
    if (range != std::string::npos) {
        const std::uint64_t first = std::stoull(text.substr(0, range));
        const std::uint64_t last = std::stoull(text.substr(range + 2));
        if (last < first) {
            throw CLI::ValidationError("--seeds", "range end before start");
        }
        for (std::uint64_t s = first; s <= last; ++s) {
            seeds.push_back(s);
        }
        return seeds;
    }
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const auto comma = text.find(',', begin);
        const std::string item = text.substr(begin, comma - begin);
        if (!item.empty()) {
            seeds.push_back(std::stoull(item));
        }
        if (comma == std::string::npos) {
            break;
        }
        begin = comma + 1;
    }
    if (seeds.empty()) {
        throw CLI::ValidationError("--seeds", "no seeds given");
    }
    return seeds;
}

std::vector<c2csim::ThreatModel> parse_model_list(const std::string& text) {
    using c2csim::ThreatModel;
    if (text == "all") {
        return {ThreatModel::A, ThreatModel::B, ThreatModel::C,
                ThreatModel::D, ThreatModel::E, ThreatModel::F};
    }
    std::vector<ThreatModel> models;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const auto comma = text.find(',', begin);
        const std::string item = text.substr(begin, comma - begin);
        if (!item.empty()) {
            models.push_back(c2csim::parse_threat_model(item));
        }
        if (comma == std::string::npos) {
            break;
        }
        begin = comma + 1;
    }
    if (models.empty()) {
        throw CLI::ValidationError("--model", "no models given");
    }
    return models;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"EigenTrust marketplace simulator"};

    std::string model_text = "A";
    std::string seed_text;
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    int jobs = 1;
    bool report = false;

    // Optional overrides; only applied when the flag is present so the
    // precedence stays flags > config file > defaults.
    int ticks = 0;
    int nodes = 0;
    double attacker_ratio = 0.0;
    double spy_ratio = 0.0;
    double c = 0.0;
    double e = 0.0;
    double f = 0.0;
    int incubation = 0;
    double damping = 0.0;

    app.add_option("--model", model_text, "Threat model A..F, a comma list, or 'all'");
    app.add_option("--seed", seed, "Single run seed");
    auto* seeds_opt = app.add_option("--seeds", seed_text, "Seed list: '1..20' or '1,5,9'");
    auto* ticks_opt = app.add_option("--ticks", ticks, "Total ticks");
    auto* nodes_opt = app.add_option("--nodes", nodes, "Node count");
    auto* ar_opt = app.add_option("--attacker-ratio", attacker_ratio, "Attacker fraction of nodes");
    auto* sr_opt = app.add_option("--spy-ratio", spy_ratio, "Spy fraction of attackers (models D, F)");
    auto* c_opt = app.add_option("--c", c, "Camouflage probability c");
    auto* e_opt = app.add_option("--e", e, "Camouflage probability e");
    auto* f_opt = app.add_option("--f", f, "Camouflage probability f");
    auto* inc_opt = app.add_option("--incubation", incubation, "Incubation period in ticks");
    auto* damp_opt = app.add_option("--damping", damping, "Trust iteration damping");
    app.add_option("--config", config_path, "Flat key = value config file");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--jobs", jobs, "Parallel runs")->check(CLI::PositiveNumber);
    app.add_flag("--report", report, "Write aggregate report.txt");

    try {
        app.parse(argc, argv);

        c2csim::ExperimentPlan plan;
        if (!config_path.empty()) {
            plan.base = c2csim::load_config_file(config_path, plan.base);
        }
        if (ticks_opt->count() > 0) plan.base.total_ticks = ticks;
        if (nodes_opt->count() > 0) plan.base.nodes = nodes;
        if (ar_opt->count() > 0) plan.base.attacker_ratio = attacker_ratio;
        if (sr_opt->count() > 0) plan.base.spy_ratio = spy_ratio;
        if (c_opt->count() > 0) plan.base.c = c;
        if (e_opt->count() > 0) plan.base.e = e;
        if (f_opt->count() > 0) plan.base.f = f;
        if (inc_opt->count() > 0) plan.base.incubation_period = incubation;
        if (damp_opt->count() > 0) plan.base.damping = damping;

        plan.models = parse_model_list(model_text);
        plan.seeds = seeds_opt->count() > 0 ? parse_seed_list(seed_text)
                                            : std::vector<std::uint64_t>{seed};
        plan.out_dir = out_dir;
        plan.jobs = jobs;
        plan.write_report = report;

        const auto summaries = c2csim::run_experiment(plan);
        for (const auto& summary : summaries) {
            std::cout << "model " << c2csim::to_string(summary.model) << " seed " << summary.seed
                      << ": " << c2csim::to_string(summary.verdict.shape)
                      << (summary.verdict.oscillating ? " (oscillating)" : "") << "\n";
        }
        if (report) {
            c2csim::write_report(std::cout, summaries);
        }
        return 0;
    } catch (const CLI::ParseError& error) {
        return app.exit(error);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}
