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

#include "c2csim/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace c2csim {

bool TradeGraph::has_edge(int from, int to) const {
    const auto& neighbors = out[static_cast<std::size_t>(from)];
    return std::binary_search(neighbors.begin(), neighbors.end(), to);
}

bool TradeGraph::add_edge(int from, int to) {
    if (from == to) {
        throw std::invalid_argument("self-loop");
    }
    auto& neighbors = out[static_cast<std::size_t>(from)];
    auto it = std::lower_bound(neighbors.begin(), neighbors.end(), to);
    if (it != neighbors.end() && *it == to) {
        return false;
    }
    neighbors.insert(it, to);
    return true;
}

std::vector<int> TradeGraph::in_degrees() const {
    std::vector<int> degrees(static_cast<std::size_t>(node_count), 0);
    for (const auto& neighbors : out) {
        for (int v : neighbors) {
            ++degrees[static_cast<std::size_t>(v)];
        }
    }
    return degrees;
}

TradeGraph generate_k_out_graph(int node_count, int k, double alpha, RngStream& rng) {
    if (k < 1 || node_count <= k) {
        throw std::invalid_argument("degenerate graph");
    }
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("alpha must be positive");
    }

    TradeGraph graph(node_count);
    std::vector<int> in_degree(static_cast<std::size_t>(node_count), 0);
    std::vector<double> weights(static_cast<std::size_t>(node_count), 0.0);

    for (int u = 0; u < node_count; ++u) {
        for (int draw = 0; draw < k; ++draw) {
            for (int v = 0; v < node_count; ++v) {
                const bool excluded = v == u || graph.has_edge(u, v);
                weights[static_cast<std::size_t>(v)] =
                    excluded ? 0.0 : alpha + static_cast<double>(in_degree[static_cast<std::size_t>(v)]);
            }
            const int v = static_cast<int>(rng.weighted_index(weights));
            graph.add_edge(u, v);
            ++in_degree[static_cast<std::size_t>(v)];
        }
    }
    return graph;
}

void ensure_attacker_adjacency(TradeGraph& graph, const Roster& roster, RngStream& rng) {
    const std::vector<int> attackers = roster.attacker_ids();
    if (attackers.size() < 2) {
        return;
    }
    for (int u : attackers) {
        auto& neighbors = graph.out[static_cast<std::size_t>(u)];
        const bool has_ally = std::any_of(neighbors.begin(), neighbors.end(),
                                          [&](int v) { return roster.is_attacker(v); });
        if (has_ally) {
            continue;
        }
        // Redirect one random out-edge to a random fellow attacker. The
        // target cannot already be a neighbor (none of them are attackers),
        // so the out-degree is preserved.
        const std::size_t drop = rng.uniform_index(neighbors.size());
        std::vector<int> allies;
        for (int v : attackers) {
            if (v != u) {
                allies.push_back(v);
            }
        }
        const int target = allies[rng.uniform_index(allies.size())];
        neighbors.erase(neighbors.begin() + static_cast<std::ptrdiff_t>(drop));
        graph.add_edge(u, target);
    }
}

void write_edge_list(const TradeGraph& graph, std::ostream& out) {
    for (int u = 0; u < graph.node_count; ++u) {
        for (int v : graph.out[static_cast<std::size_t>(u)]) {
            out << u << ' ' << v << '\n';
        }
    }
}

} // namespace c2csim
