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

#ifndef C2CSIM_SIMULATION_HPP
#define C2CSIM_SIMULATION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "c2csim/graph.hpp"
#include "c2csim/marketplace.hpp"
#include "c2csim/roster.hpp"
#include "c2csim/threat_model.hpp"

namespace c2csim {

/// All knobs of one run. Defaults reproduce the standard marketplace:
/// 100 nodes, 10% attackers placed contiguously, 32 pre-trusted nodes,
/// incubation for 50 of 100 ticks, camouflage probabilities at one half.
struct SimConfig {
    int nodes = 100;
    int k = 2;
    double alpha = 1.0;
    int pretrust_count = 32;
    double attacker_ratio = 0.10;
    double spy_ratio = 0.5;
    double c = 0.5;
    double e = 0.5;
    double f = 0.5;
    int incubation_period = 50;
    int total_ticks = 100;
    ThreatModel model = ThreatModel::A;
    double damping = 0.1;
    double eps = 1e-6;
    int max_iter = 1000;
    double collusion_bias = 0.5;
    std::uint64_t seed = 1;
    /// 0 means every node buys once per tick; a positive value draws that
    /// many uniformly random buyers per tick instead.
    int transactions_per_tick = 0;
    /// Recompute the trust vector after every transaction instead of once
    /// per tick.
    bool recompute_per_transaction = false;

    int attacker_count() const;

    /// Collects every violated field into one error. Message lines look like
    /// "field: problem".
    void validate() const;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string message, std::vector<std::string> failures)
        : std::runtime_error(std::move(message)), failures_(std::move(failures)) {}

    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

struct TickRecord {
    std::vector<double> trust;
    double attacker_mean = 0.0;
    double normal_mean = 0.0;
    bool converged = true;
};

/// Per-tick global trust vectors plus cohort means. Entry 0 is the
/// pre-transaction state, so a run of T ticks stores T + 1 records.
struct TrustTimeSeries {
    std::vector<TickRecord> ticks;

    std::size_t size() const { return ticks.size(); }

    std::vector<double> attacker_means() const;
    std::vector<double> normal_means() const;
    /// Trust trajectory of a single node.
    std::vector<double> node_series(int node) const;
};

struct SimResult {
    TrustTimeSeries series;
    std::vector<TransactionRecord> transactions;
    TradeGraph graph;
    Roster roster;
};

/// Arithmetic means of the stored trust vectors over attacker ids and over
/// normal ids, one value per tick.
std::pair<std::vector<double>, std::vector<double>>
cohort_means(const TrustTimeSeries& series, const Roster& roster);

/// Runs one complete simulation: build graph and roster, then advance ticks.
/// Each tick shuffles the node order, lets every node buy once, and
/// recomputes the global trust vector. Deterministic: identical configs
/// produce identical results.
SimResult run_simulation(const SimConfig& config);

} // namespace c2csim

#endif
