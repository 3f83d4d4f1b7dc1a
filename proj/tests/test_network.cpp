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

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "c2csim/graph.hpp"
#include "c2csim/roster.hpp"

using namespace c2csim;

namespace {

bool attacker_block_contiguous(const Roster& roster) {
    const std::vector<int> ids = roster.attacker_ids();
    for (std::size_t i = 1; i < ids.size(); ++i) {
        if (ids[i] != ids[i - 1] + 1) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("generated graphs have exact out-degree and no self-loops") {
    RngStream rng(7, "graph");
    const TradeGraph graph = generate_k_out_graph(10, 2, 1.0, rng);
    for (int u = 0; u < 10; ++u) {
        CHECK(graph.out_degree(u) == 2);
        CHECK_FALSE(graph.has_edge(u, u));
        // Sorted unique neighbor list.
        const auto& neighbors = graph.out[static_cast<std::size_t>(u)];
        CHECK(std::is_sorted(neighbors.begin(), neighbors.end()));
        CHECK(std::adjacent_find(neighbors.begin(), neighbors.end()) == neighbors.end());
    }
}

TEST_CASE("two nodes with k=1 can only point at each other") {
    RngStream rng(1, "graph");
    const TradeGraph graph = generate_k_out_graph(2, 1, 1.0, rng);
    CHECK(graph.has_edge(0, 1));
    CHECK(graph.has_edge(1, 0));
}

TEST_CASE("degenerate sizes are rejected") {
    RngStream rng(1, "graph");
    CHECK_THROWS_WITH_AS(generate_k_out_graph(2, 2, 1.0, rng), "degenerate graph",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(generate_k_out_graph(5, 0, 1.0, rng), "degenerate graph",
                         std::invalid_argument);
}

TEST_CASE("same seed reproduces the graph bit for bit") {
    RngStream rng_a(99, "graph");
    RngStream rng_b(99, "graph");
    const TradeGraph a = generate_k_out_graph(50, 2, 1.0, rng_a);
    const TradeGraph b = generate_k_out_graph(50, 2, 1.0, rng_b);
    CHECK(a.out == b.out);
}

TEST_CASE("preferential attachment produces right-skewed in-degrees") {
    // Monte Carlo over seeds: the largest in-degree should exceed twice the
    // mean (which is exactly k) in at least 95% of graphs.
    const int seeds = 1000;
    int skewed = 0;
    for (int seed = 0; seed < seeds; ++seed) {
        RngStream rng(static_cast<std::uint64_t>(seed), "graph");
        const TradeGraph graph = generate_k_out_graph(100, 2, 1.0, rng);
        const std::vector<int> in = graph.in_degrees();
        const int max_in = *std::max_element(in.begin(), in.end());
        if (max_in > 4) {
            ++skewed;
        }
    }
    CHECK(skewed >= 950);
}

TEST_CASE("roles: counts, contiguity and spies per model") {
    RngStream rng(3, "roles");
    const Roster a = assign_roles(100, 0.10, 0.5, 32, ThreatModel::A, rng);
    CHECK(a.attacker_ids().size() == 10);
    CHECK(attacker_block_contiguous(a));
    CHECK(std::count(a.role.begin(), a.role.end(), Role::Spy) == 0);
    CHECK(a.pretrusted_ids().size() == 32);

    const Roster d = assign_roles(100, 0.10, 0.5, 32, ThreatModel::D, rng);
    CHECK(d.attacker_ids().size() == 10);
    CHECK(std::count(d.role.begin(), d.role.end(), Role::Spy) == 5);
    CHECK(std::count(d.role.begin(), d.role.end(), Role::Attacker) == 5);
    CHECK(attacker_block_contiguous(d));

    // Spies are the first half of the block.
    const std::vector<int> ids = d.attacker_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const Role expected = i < 5 ? Role::Spy : Role::Attacker;
        CHECK(d.role[static_cast<std::size_t>(ids[i])] == expected);
    }
}

TEST_CASE("pre-trusted nodes are always normal") {
    for (int seed = 0; seed < 20; ++seed) {
        RngStream rng(static_cast<std::uint64_t>(seed), "roles");
        const Roster roster = assign_roles(100, 0.10, 0.5, 32, ThreatModel::F, rng);
        for (int id : roster.pretrusted_ids()) {
            CHECK(roster.role[static_cast<std::size_t>(id)] == Role::Normal);
        }
    }
}

TEST_CASE("role assignment rejects degenerate settings") {
    RngStream rng(5, "roles");
    CHECK_THROWS_WITH_AS(assign_roles(100, 0.0, 0.5, 32, ThreatModel::A, rng),
                         "degenerate scenario", std::invalid_argument);
    CHECK_THROWS_WITH_AS(assign_roles(100, 0.10, 0.5, 91, ThreatModel::A, rng),
                         "insufficient normal nodes", std::invalid_argument);
}

TEST_CASE("adjacency rewiring gives every attacker an ally neighbor") {
    for (int seed = 0; seed < 100; ++seed) {
        RngStream graph_rng(static_cast<std::uint64_t>(seed), "graph");
        RngStream roles_rng(static_cast<std::uint64_t>(seed), "roles");
        TradeGraph graph = generate_k_out_graph(100, 2, 1.0, graph_rng);
        const Roster roster = assign_roles(100, 0.10, 0.5, 32, ThreatModel::B, roles_rng);
        ensure_attacker_adjacency(graph, roster, graph_rng);

        for (int u : roster.attacker_ids()) {
            CHECK(graph.out_degree(u) == 2);
            const auto& neighbors = graph.out[static_cast<std::size_t>(u)];
            CHECK(std::any_of(neighbors.begin(), neighbors.end(),
                              [&](int v) { return roster.is_attacker(v); }));
        }
        for (int u = 0; u < 100; ++u) {
            CHECK(graph.out_degree(u) == 2);
            CHECK_FALSE(graph.has_edge(u, u));
        }
    }
}

TEST_CASE("adjacency rewiring is idempotent") {
    RngStream graph_rng(17, "graph");
    RngStream roles_rng(17, "roles");
    TradeGraph graph = generate_k_out_graph(60, 2, 1.0, graph_rng);
    const Roster roster = assign_roles(60, 0.10, 0.5, 10, ThreatModel::B, roles_rng);

    ensure_attacker_adjacency(graph, roster, graph_rng);
    const TradeGraph settled = graph;
    ensure_attacker_adjacency(graph, roster, graph_rng);
    CHECK(graph.out == settled.out);
}

TEST_CASE("a lone attacker leaves the graph untouched") {
    RngStream graph_rng(4, "graph");
    RngStream roles_rng(4, "roles");
    TradeGraph graph = generate_k_out_graph(10, 2, 1.0, graph_rng);
    const Roster roster = assign_roles(10, 0.10, 0.5, 3, ThreatModel::A, roles_rng);
    REQUIRE(roster.attacker_ids().size() == 1);

    const TradeGraph before = graph;
    ensure_attacker_adjacency(graph, roster, graph_rng);
    CHECK(graph.out == before.out);
}

TEST_CASE("graph and roles dumps have the documented shapes") {
    RngStream graph_rng(8, "graph");
    RngStream roles_rng(8, "roles");
    const TradeGraph graph = generate_k_out_graph(5, 2, 1.0, graph_rng);
    const Roster roster = assign_roles(5, 0.2, 0.5, 2, ThreatModel::A, roles_rng);

    std::ostringstream edges;
    write_edge_list(graph, edges);
    int lines = 0;
    for (char ch : edges.str()) {
        lines += ch == '\n';
    }
    CHECK(lines == 10); // n * k edges

    std::ostringstream roles;
    write_roles(roster, roles);
    CHECK(roles.str().find("attacker") != std::string::npos);
    CHECK(roles.str().find("normal") != std::string::npos);
}
