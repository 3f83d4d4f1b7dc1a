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

#ifndef C2CSIM_EXPERIMENT_HPP
#define C2CSIM_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "c2csim/analysis.hpp"
#include "c2csim/simulation.hpp"

namespace c2csim {

/// A batch of runs: every listed model crossed with every listed seed.
struct ExperimentPlan {
    SimConfig base;
    std::vector<ThreatModel> models;
    std::vector<std::uint64_t> seeds;
    std::filesystem::path out_dir;
    int jobs = 1;
    bool write_report = false;
    ClassifyThresholds thresholds;
};

struct RunSummary {
    ThreatModel model = ThreatModel::A;
    std::uint64_t seed = 0;
    DynamicsVerdict verdict;
    bool all_converged = true;
    double final_attacker_mean = 0.0;
    double final_normal_mean = 0.0;
    double wall_seconds = 0.0;
};

/// Expected dynamics per threat model: A and B are detectable by shape,
/// C and D plateau undetected, E and F oscillate.
DynamicsShape expected_shape(ThreatModel model);

// Serialization helpers shared by the CLI and the tests. All doubles are
// written with round-trip precision so identical runs produce identical
// bytes.
void write_trust_series_csv(std::ostream& out, const TrustTimeSeries& series);
void write_cohorts_csv(std::ostream& out, const TrustTimeSeries& series);
void write_transactions_csv(std::ostream& out, const std::vector<TransactionRecord>& transactions);
void write_variance_csv(std::ostream& out, const OscillationResult& oscillation);
std::string summary_json(const SimConfig& config, const RunSummary& summary,
                         const ClassifyThresholds& thresholds);
void write_report(std::ostream& out, const std::vector<RunSummary>& summaries);

/// Runs the whole plan, writing one subdirectory per (model, seed) with
/// trust_series.csv, cohorts.csv, transactions.csv, variance.csv,
/// summary.json and the graph dumps, plus report.txt at the top level when
/// requested. Plan entries run in parallel up to `jobs`. Throws on an
/// unwritable output directory; verdict mismatches are reported, not fatal.
std::vector<RunSummary> run_experiment(const ExperimentPlan& plan);

} // namespace c2csim

#endif
