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

#include "c2csim/roster.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace c2csim {

std::vector<int> Roster::attacker_ids() const {
    std::vector<int> ids;
    for (int i = 0; i < node_count(); ++i) {
        if (is_attacker(i)) {
            ids.push_back(i);
        }
    }
    return ids;
}

std::vector<int> Roster::normal_ids() const {
    std::vector<int> ids;
    for (int i = 0; i < node_count(); ++i) {
        if (!is_attacker(i)) {
            ids.push_back(i);
        }
    }
    return ids;
}

std::vector<int> Roster::pretrusted_ids() const {
    std::vector<int> ids;
    for (int i = 0; i < node_count(); ++i) {
        if (pre_trusted[static_cast<std::size_t>(i)]) {
            ids.push_back(i);
        }
    }
    return ids;
}

Roster assign_roles(int node_count, double attacker_ratio, double spy_ratio,
                    int pretrust_count, ThreatModel model, RngStream& rng) {
    if (node_count <= 0) {
        throw std::invalid_argument("unknown node");
    }
    const int attacker_count =
        static_cast<int>(std::lround(attacker_ratio * static_cast<double>(node_count)));
    if (attacker_count < 1) {
        throw std::invalid_argument("degenerate scenario");
    }
    if (attacker_count > node_count) {
        throw std::invalid_argument("degenerate scenario");
    }
    const int normal_count = node_count - attacker_count;
    if (pretrust_count > normal_count) {
        throw std::invalid_argument("insufficient normal nodes");
    }

    const bool spies = model == ThreatModel::D || model == ThreatModel::F;
    const int spy_count =
        spies ? static_cast<int>(std::lround(spy_ratio * static_cast<double>(attacker_count))) : 0;

    Roster roster;
    roster.role.assign(static_cast<std::size_t>(node_count), Role::Normal);
    roster.pre_trusted.assign(static_cast<std::size_t>(node_count), false);

    // Contiguous attacker block; spies are the first half of it.
    const int offset = static_cast<int>(rng.uniform_index(
        static_cast<std::size_t>(node_count - attacker_count + 1)));
    for (int i = 0; i < attacker_count; ++i) {
        roster.role[static_cast<std::size_t>(offset + i)] =
            i < spy_count ? Role::Spy : Role::Attacker;
    }

    // Pre-trusted nodes are sampled uniformly from the normal nodes.
    std::vector<int> normals = roster.normal_ids();
    rng.shuffle(normals);
    for (int i = 0; i < pretrust_count; ++i) {
        roster.pre_trusted[static_cast<std::size_t>(normals[static_cast<std::size_t>(i)])] = true;
    }
    return roster;
}

void write_roles(const Roster& roster, std::ostream& out) {
    for (int i = 0; i < roster.node_count(); ++i) {
        out << i << ' ' << to_string(roster.role[static_cast<std::size_t>(i)]) << ' '
            << (roster.pre_trusted[static_cast<std::size_t>(i)] ? 1 : 0) << '\n';
    }
}

} // namespace c2csim
