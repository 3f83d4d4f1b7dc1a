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

#ifndef C2CSIM_GRAPH_HPP
#define C2CSIM_GRAPH_HPP

#include <iosfwd>
#include <vector>

#include "c2csim/rng.hpp"
#include "c2csim/roster.hpp"

namespace c2csim {

/// Directed transaction-history graph. An edge u -> v records that u has
/// bought from v at least once. Neighbor lists are kept sorted and unique.
struct TradeGraph {
    int node_count = 0;
    std::vector<std::vector<int>> out;

    explicit TradeGraph(int n = 0) : node_count(n), out(static_cast<std::size_t>(n)) {}

    bool has_edge(int from, int to) const;

    /// Set semantics; returns true when the edge is new. Self-loops are
    /// rejected.
    bool add_edge(int from, int to);

    int out_degree(int node) const { return static_cast<int>(out[static_cast<std::size_t>(node)].size()); }

    std::vector<int> in_degrees() const;
};

/// Random k-out graph with preferential attachment. Each node u, in id
/// order, draws k distinct out-neighbors; candidate v != u is picked with
/// weight alpha + indegree(v) at draw time. No self-loops, no duplicate
/// edges from the same source.
///
/// Throws std::invalid_argument("degenerate graph") unless n > k >= 1.
TradeGraph generate_k_out_graph(int node_count, int k, double alpha, RngStream& rng);

/// Rewires so that every attacker has at least one out-edge to a fellow
/// attacker: when one has none, a uniformly chosen out-edge is redirected to
/// a uniformly chosen fellow attacker. Out-degrees are preserved. A roster
/// with fewer than two attackers is left untouched.
void ensure_attacker_adjacency(TradeGraph& graph, const Roster& roster, RngStream& rng);

/// Edge-list dump, one "u v" line per edge.
void write_edge_list(const TradeGraph& graph, std::ostream& out);

} // namespace c2csim

#endif
