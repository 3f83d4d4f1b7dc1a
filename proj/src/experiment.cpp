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

#include "c2csim/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "c2csim/graph.hpp"

namespace c2csim {

namespace {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

const char* bool_text(bool value) {
    return value ? "True" : "False";
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

} // namespace

DynamicsShape expected_shape(ThreatModel model) {
    switch (model) {
    case ThreatModel::A: return DynamicsShape::MonotoneDecrease;
    case ThreatModel::B: return DynamicsShape::SpikeThenDecrease;
    case ThreatModel::C:
    case ThreatModel::D: return DynamicsShape::SpikeThenPlateau;
    case ThreatModel::E:
    case ThreatModel::F: return DynamicsShape::Oscillating;
    }
    return DynamicsShape::Inconclusive;
}

void write_trust_series_csv(std::ostream& out, const TrustTimeSeries& series) {
    if (series.ticks.empty()) {
        return;
    }
    const std::size_t n = series.ticks.front().trust.size();
    out << "tick";
    for (std::size_t j = 0; j < n; ++j) {
        out << ",node_" << j;
    }
    out << '\n';
    for (std::size_t tick = 0; tick < series.ticks.size(); ++tick) {
        out << tick;
        for (double value : series.ticks[tick].trust) {
            out << ',' << format_double(value);
        }
        out << '\n';
    }
}

void write_cohorts_csv(std::ostream& out, const TrustTimeSeries& series) {
    out << "tick,attacker_mean,normal_mean\n";
    for (std::size_t tick = 0; tick < series.ticks.size(); ++tick) {
        out << tick << ',' << format_double(series.ticks[tick].attacker_mean) << ','
            << format_double(series.ticks[tick].normal_mean) << '\n';
    }
}

void write_transactions_csv(std::ostream& out, const std::vector<TransactionRecord>& transactions) {
    out << "tick,buyer,seller,quality,buyer_rating,seller_rating\n";
    for (const auto& t : transactions) {
        out << t.tick << ',' << t.buyer << ',' << t.seller << ',' << to_string(t.quality) << ','
            << bool_text(t.buyer_rating) << ',' << bool_text(t.seller_rating) << '\n';
    }
}

void write_variance_csv(std::ostream& out, const OscillationResult& oscillation) {
    out << "tick,attacker_variance,baseline_variance\n";
    for (std::size_t i = 0; i < oscillation.attacker_curve.size(); ++i) {
        out << (oscillation.curve_first_tick + static_cast<int>(i)) << ','
            << format_double(oscillation.attacker_curve[i]) << ','
            << format_double(i < oscillation.normal_curve.size() ? oscillation.normal_curve[i]
                                                                 : 0.0)
            << '\n';
    }
}

std::string summary_json(const SimConfig& config, const RunSummary& summary,
                         const ClassifyThresholds& thresholds) {
    nlohmann::ordered_json doc;
    doc["model"] = to_string(summary.model);
    doc["seed"] = summary.seed;

    auto& cfg = doc["config"];
    cfg["nodes"] = config.nodes;
    cfg["k"] = config.k;
    cfg["alpha"] = config.alpha;
    cfg["pretrust_count"] = config.pretrust_count;
    cfg["attacker_ratio"] = config.attacker_ratio;
    cfg["spy_ratio"] = config.spy_ratio;
    cfg["c"] = config.c;
    cfg["e"] = config.e;
    cfg["f"] = config.f;
    cfg["incubation_period"] = config.incubation_period;
    cfg["total_ticks"] = config.total_ticks;
    cfg["model"] = to_string(config.model);
    cfg["damping"] = config.damping;
    cfg["eps"] = config.eps;
    cfg["max_iter"] = config.max_iter;
    cfg["collusion_bias"] = config.collusion_bias;
    cfg["seed"] = config.seed;
    cfg["transactions_per_tick"] = config.transactions_per_tick;
    cfg["recompute_per_transaction"] = config.recompute_per_transaction;

    auto& dynamics = doc["dynamics"];
    dynamics["shape"] = to_string(summary.verdict.shape);
    dynamics["expected_shape"] = to_string(expected_shape(summary.model));
    dynamics["post_attack_slope"] = summary.verdict.post_attack_slope;
    dynamics["peak_value"] = summary.verdict.peak_value;
    dynamics["peak_tick"] = summary.verdict.peak_tick;
    dynamics["pre_attack_mean"] = summary.verdict.pre_attack_mean;

    auto& oscillation = doc["oscillation"];
    oscillation["detected"] = summary.verdict.oscillating;
    oscillation["variance_ratio"] = summary.verdict.oscillation_ratio;

    auto& calibration = doc["calibration"];
    calibration["window"] = thresholds.window;
    calibration["kappa"] = thresholds.kappa;
    calibration["settle"] = thresholds.settle;
    calibration["spike_window"] = thresholds.spike_window;
    calibration["spike_factor"] = thresholds.spike_factor;
    calibration["slope_eps_fraction"] = thresholds.slope_eps_fraction;
    calibration["slope_eps_span"] = thresholds.slope_eps_span;
    calibration["post_spike_offset"] = thresholds.post_spike_offset;

    doc["final"]["attacker_mean"] = summary.final_attacker_mean;
    doc["final"]["normal_mean"] = summary.final_normal_mean;
    doc["all_converged"] = summary.all_converged;
    doc["wall_seconds"] = summary.wall_seconds;
    return doc.dump(2) + "\n";
}

void write_report(std::ostream& out, const std::vector<RunSummary>& summaries) {
    std::map<ThreatModel, std::vector<const RunSummary*>> by_model;
    for (const auto& summary : summaries) {
        by_model[summary.model].push_back(&summary);
    }

    out << "model  verdict (majority)        runs   oscillation  expected            match\n";
    for (const auto& [model, runs] : by_model) {
        std::map<DynamicsShape, int> counts;
        int oscillation_count = 0;
        for (const auto* run : runs) {
            ++counts[run->verdict.shape];
            if (run->verdict.oscillating) {
                ++oscillation_count;
            }
        }
        DynamicsShape majority = DynamicsShape::Inconclusive;
        int best = -1;
        for (const auto& [shape, count] : counts) {
            if (count > best) {
                best = count;
                majority = shape;
            }
        }
        const DynamicsShape expected = expected_shape(model);
        char line[160];
        std::snprintf(line, sizeof(line), "%-6s %-19s %3d/%-3zu  %3d/%-8zu %-19s %s\n",
                      to_string(model).c_str(), to_string(majority).c_str(), best, runs.size(),
                      oscillation_count, runs.size(), to_string(expected).c_str(),
                      majority == expected ? "yes" : "NO");
        out << line;
    }
}

std::vector<RunSummary> run_experiment(const ExperimentPlan& plan) {
    plan.base.validate();
    if (plan.models.empty() || plan.seeds.empty()) {
        throw std::invalid_argument("experiment plan is empty");
    }

    std::error_code ec;
    std::filesystem::create_directories(plan.out_dir, ec);
    if (!std::filesystem::is_directory(plan.out_dir)) {
        throw std::runtime_error("cannot create output directory: " + plan.out_dir.string());
    }

    struct Entry {
        ThreatModel model;
        std::uint64_t seed;
    };
    std::vector<Entry> entries;
    for (ThreatModel model : plan.models) {
        for (std::uint64_t seed : plan.seeds) {
            entries.push_back({model, seed});
        }
    }

    std::vector<RunSummary> summaries(entries.size());
    std::vector<std::string> errors(entries.size());
    const int jobs = std::max(plan.jobs, 1);

    #pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        try {
            SimConfig config = plan.base;
            config.model = entries[idx].model;
            config.seed = entries[idx].seed;

            const auto start = std::chrono::steady_clock::now();
            const SimResult result = run_simulation(config);
            const auto stop = std::chrono::steady_clock::now();

            RunSummary summary;
            summary.model = config.model;
            summary.seed = config.seed;
            summary.wall_seconds = std::chrono::duration<double>(stop - start).count();
            for (const auto& tick : result.series.ticks) {
                summary.all_converged = summary.all_converged && tick.converged;
            }
            summary.final_attacker_mean = result.series.ticks.back().attacker_mean;
            summary.final_normal_mean = result.series.ticks.back().normal_mean;

            const OscillationResult oscillation = detect_oscillation_groups(
                result.series, result.roster, config.incubation_period, plan.thresholds.window,
                plan.thresholds.kappa, plan.thresholds.settle);
            const std::vector<double> attacker_means = result.series.attacker_means();
            summary.verdict = classify_dynamics(attacker_means, config.incubation_period,
                                                plan.thresholds, oscillation);

            const std::filesystem::path run_dir =
                plan.out_dir / ("model_" + to_string(config.model) + "_seed_" +
                                std::to_string(config.seed));
            std::filesystem::create_directories(run_dir);

            { auto out = open_output(run_dir / "trust_series.csv"); write_trust_series_csv(out, result.series); }
            { auto out = open_output(run_dir / "cohorts.csv"); write_cohorts_csv(out, result.series); }
            { auto out = open_output(run_dir / "transactions.csv"); write_transactions_csv(out, result.transactions); }
            { auto out = open_output(run_dir / "variance.csv"); write_variance_csv(out, oscillation); }
            { auto out = open_output(run_dir / "graph.txt"); write_edge_list(result.graph, out); }
            { auto out = open_output(run_dir / "roles.txt"); write_roles(result.roster, out); }
            { auto out = open_output(run_dir / "summary.json");
              out << summary_json(config, summary, plan.thresholds); }

            summaries[idx] = summary;
        } catch (const std::exception& error) {
            errors[idx] = error.what();
        }
    }

    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        if (!errors[idx].empty()) {
            throw std::runtime_error("run model " + to_string(entries[idx].model) + " seed " +
                                     std::to_string(entries[idx].seed) + " failed: " +
                                     errors[idx]);
        }
    }

    if (plan.write_report) {
        auto out = open_output(plan.out_dir / "report.txt");
        write_report(out, summaries);
    }
    return summaries;
}

} // namespace c2csim
