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

#include "c2csim/simulation.hpp"

#include <cmath>
#include <numeric>

#include "c2csim/trust.hpp"

namespace c2csim {

int SimConfig::attacker_count() const {
    return static_cast<int>(std::lround(attacker_ratio * static_cast<double>(nodes)));
}

void SimConfig::validate() const {
    std::vector<std::string> failures;
    auto require = [&](bool ok, const char* field, const char* problem) {
        if (!ok) {
            failures.push_back(std::string(field) + ": " + problem);
        }
    };

    require(nodes >= 2, "nodes", "need at least two nodes");
    require(k >= 1, "k", "must be at least 1");
    require(nodes > k, "k", "degenerate graph (nodes must exceed k)");
    require(alpha > 0.0, "alpha", "must be positive");
    require(attacker_ratio >= 0.0 && attacker_ratio <= 1.0, "attacker_ratio", "must be in [0, 1]");
    require(spy_ratio >= 0.0 && spy_ratio <= 1.0, "spy_ratio", "must be in [0, 1]");
    require(c >= 0.0 && c <= 1.0, "c", "must be in [0, 1]");
    require(e >= 0.0 && e <= 1.0, "e", "must be in [0, 1]");
    require(f >= 0.0 && f <= 1.0, "f", "must be in [0, 1]");
    require(damping >= 0.0 && damping <= 1.0, "damping", "must be in [0, 1]");
    require(collusion_bias >= 0.0 && collusion_bias <= 1.0, "collusion_bias", "must be in [0, 1]");
    require(incubation_period >= 0, "incubation_period", "must be nonnegative");
    require(incubation_period <= total_ticks, "incubation_period", "must not exceed total_ticks");
    require(total_ticks >= 0, "total_ticks", "must be nonnegative");
    require(eps > 0.0, "eps", "must be positive");
    require(max_iter >= 1, "max_iter", "must be at least 1");
    require(pretrust_count >= 1, "pretrust_count", "need at least one pre-trusted node");
    require(transactions_per_tick >= 0, "transactions_per_tick", "must be nonnegative");

    if (attacker_ratio >= 0.0 && attacker_ratio <= 1.0 && nodes >= 2) {
        require(attacker_count() >= 1, "attacker_ratio", "degenerate scenario (no attackers)");
        require(pretrust_count <= nodes - attacker_count(), "pretrust_count",
                "insufficient normal nodes");
    }

    if (!failures.empty()) {
        std::string message = "invalid configuration:";
        for (const auto& failure : failures) {
            message += "\n  " + failure;
        }
        throw ConfigError(message, failures);
    }
}

std::vector<double> TrustTimeSeries::attacker_means() const {
    std::vector<double> means;
    means.reserve(ticks.size());
    for (const auto& tick : ticks) {
        means.push_back(tick.attacker_mean);
    }
    return means;
}

std::vector<double> TrustTimeSeries::normal_means() const {
    std::vector<double> means;
    means.reserve(ticks.size());
    for (const auto& tick : ticks) {
        means.push_back(tick.normal_mean);
    }
    return means;
}

std::vector<double> TrustTimeSeries::node_series(int node) const {
    std::vector<double> series;
    series.reserve(ticks.size());
    for (const auto& tick : ticks) {
        series.push_back(tick.trust[static_cast<std::size_t>(node)]);
    }
    return series;
}

std::pair<std::vector<double>, std::vector<double>>
cohort_means(const TrustTimeSeries& series, const Roster& roster) {
    const std::vector<int> attackers = roster.attacker_ids();
    const std::vector<int> normals = roster.normal_ids();
    std::vector<double> attacker_means;
    std::vector<double> normal_means;
    attacker_means.reserve(series.size());
    normal_means.reserve(series.size());

    auto mean_over = [](const std::vector<double>& trust, const std::vector<int>& ids) {
        if (ids.empty()) {
            return 0.0;
        }
        double sum = 0.0;
        for (int id : ids) {
            sum += trust[static_cast<std::size_t>(id)];
        }
        return sum / static_cast<double>(ids.size());
    };

    for (const auto& tick : series.ticks) {
        attacker_means.push_back(mean_over(tick.trust, attackers));
        normal_means.push_back(mean_over(tick.trust, normals));
    }
    return {std::move(attacker_means), std::move(normal_means)};
}

namespace {

TickRecord make_tick_record(TrustResult trust, const std::vector<int>& attackers,
                            const std::vector<int>& normals) {
    TickRecord record;
    record.converged = trust.converged;
    record.trust = std::move(trust.scores);
    double attacker_sum = 0.0;
    for (int id : attackers) {
        attacker_sum += record.trust[static_cast<std::size_t>(id)];
    }
    double normal_sum = 0.0;
    for (int id : normals) {
        normal_sum += record.trust[static_cast<std::size_t>(id)];
    }
    record.attacker_mean = attackers.empty() ? 0.0 : attacker_sum / static_cast<double>(attackers.size());
    record.normal_mean = normals.empty() ? 0.0 : normal_sum / static_cast<double>(normals.size());
    return record;
}

} // namespace

SimResult run_simulation(const SimConfig& config) {
    config.validate();

    RngStream graph_rng(config.seed, "graph");
    RngStream roles_rng(config.seed, "roles");
    RngStream shuffle_rng(config.seed, "shuffle");
    RngStream behavior_rng(config.seed, "behavior");

    SimResult result;
    result.roster = assign_roles(config.nodes, config.attacker_ratio, config.spy_ratio,
                                 config.pretrust_count, config.model, roles_rng);
    result.graph = generate_k_out_graph(config.nodes, config.k, config.alpha, graph_rng);
    ensure_attacker_adjacency(result.graph, result.roster, graph_rng);

    const std::vector<int> attackers = result.roster.attacker_ids();
    const std::vector<int> normals = result.roster.normal_ids();
    const std::vector<int> pretrusted = result.roster.pretrusted_ids();
    const std::vector<double> pretrust = make_pretrust(config.nodes, pretrusted);
    const ThreatModelSpec spec = ThreatModelSpec::make(config.model, config.c, config.e, config.f);

    RatingLedger ledger(config.nodes);

    auto recompute = [&]() {
        const Matrix local = local_trust_matrix(ledger, pretrust);
        return compute_global_trust(local, pretrust, config.damping, config.eps, config.max_iter);
    };

    // Tick 0: trust of the empty ledger, before any transaction.
    result.series.ticks.push_back(make_tick_record(recompute(), attackers, normals));
    // Trust vector the marketplace sees; refreshed per tick, or per
    // transaction when configured.
    std::vector<double> current_trust = result.series.ticks.back().trust;

    std::vector<int> order(static_cast<std::size_t>(config.nodes));
    std::iota(order.begin(), order.end(), 0);

    for (int tick = 1; tick <= config.total_ticks; ++tick) {
        const BehaviorContext ctx{tick, config.incubation_period};

        std::vector<int> buyers;
        if (config.transactions_per_tick == 0) {
            shuffle_rng.shuffle(order);
            buyers = order;
        } else {
            buyers.reserve(static_cast<std::size_t>(config.transactions_per_tick));
            for (int i = 0; i < config.transactions_per_tick; ++i) {
                buyers.push_back(static_cast<int>(
                    shuffle_rng.uniform_index(static_cast<std::size_t>(config.nodes))));
            }
        }

        for (int buyer : buyers) {
            const int seller = select_seller(buyer, result.graph, current_trust, result.roster,
                                             spec, ctx, config.collusion_bias, behavior_rng);
            result.transactions.push_back(execute_transaction(buyer, seller, tick, ledger,
                                                              result.graph, result.roster, spec,
                                                              ctx, behavior_rng));
            if (config.recompute_per_transaction) {
                current_trust = recompute().scores;
            }
        }

        result.series.ticks.push_back(make_tick_record(recompute(), attackers, normals));
        current_trust = result.series.ticks.back().trust;
    }
    return result;
}

} // namespace c2csim
