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

#ifndef C2CSIM_MARKETPLACE_HPP
#define C2CSIM_MARKETPLACE_HPP

#include <span>
#include <vector>

#include "c2csim/behavior.hpp"
#include "c2csim/graph.hpp"
#include "c2csim/ledger.hpp"
#include "c2csim/roster.hpp"

namespace c2csim {

struct TransactionRecord {
    int tick = 0;
    int buyer = 0;
    int seller = 0;
    Quality quality = Quality::Good;
    bool buyer_rating = true;
    bool seller_rating = true;
};

/// One candidate drawn with probability proportional to its trust score;
/// uniformly when every candidate's score is zero.
int weighted_pick(std::span<const int> candidates, std::span<const double> trust,
                  RngStream& rng);

/// Two-stage seller selection.
///
/// Stage 1: with probability one half the candidate pool is the buyer's
/// out-neighborhood (proven partners), otherwise its complement; an empty
/// pool falls through to the other one. Stage 2: weighted_pick over the
/// pool. Colluding attackers in the attack phase instead buy from a random
/// fellow attacker with probability collusion_bias.
///
/// Throws std::invalid_argument("no counterparty") when the graph has fewer
/// than two nodes.
int select_seller(int buyer, const TradeGraph& graph, std::span<const double> trust,
                  const Roster& roster, const ThreatModelSpec& spec,
                  const BehaviorContext& ctx, double collusion_bias, RngStream& rng);

/// Runs the full transaction protocol: service, buyer rating, reciprocal
/// seller rating. Both ratings land in the ledger (buyer about seller, then
/// seller about buyer) and the edge buyer -> seller is added to the graph.
TransactionRecord execute_transaction(int buyer, int seller, int tick, RatingLedger& ledger,
                                      TradeGraph& graph, const Roster& roster,
                                      const ThreatModelSpec& spec, const BehaviorContext& ctx,
                                      RngStream& rng);

} // namespace c2csim

#endif
