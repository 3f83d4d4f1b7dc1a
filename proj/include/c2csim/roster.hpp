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

#ifndef C2CSIM_ROSTER_HPP
#define C2CSIM_ROSTER_HPP

#include <iosfwd>
#include <vector>

#include "c2csim/rng.hpp"
#include "c2csim/threat_model.hpp"

namespace c2csim {

/// Node roles and the pre-trusted set. Attackers (including spies) occupy one
/// contiguous id block.
struct Roster {
    std::vector<Role> role;
    std::vector<bool> pre_trusted;

    int node_count() const { return static_cast<int>(role.size()); }

    bool is_attacker(int id) const { return role[static_cast<std::size_t>(id)] != Role::Normal; }

    /// Attackers and spies form a single ally set.
    bool allied(int a, int b) const { return is_attacker(a) && is_attacker(b); }

    /// Ids with role Attacker or Spy, ascending.
    std::vector<int> attacker_ids() const;
    /// Ids with role Normal, ascending.
    std::vector<int> normal_ids() const;
    /// Pre-trusted ids, ascending.
    std::vector<int> pretrusted_ids() const;
};

/// Assigns roles for a run. round(attacker_ratio * n) nodes become attackers
/// in a contiguous block at a random offset; under models D and F the first
/// round(spy_ratio * attackers) of the block are spies. pretrust_count
/// pre-trusted nodes are sampled uniformly from the normal nodes.
///
/// Throws std::invalid_argument("degenerate scenario") when the attacker
/// count rounds to zero and ("insufficient normal nodes") when
/// pretrust_count exceeds the number of normal nodes.
Roster assign_roles(int node_count, double attacker_ratio, double spy_ratio,
                    int pretrust_count, ThreatModel model, RngStream& rng);

/// Sidecar format: one "id role pretrusted" line per node.
void write_roles(const Roster& roster, std::ostream& out);

} // namespace c2csim

#endif
