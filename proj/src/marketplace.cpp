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

#include "c2csim/marketplace.hpp"

#include <algorithm>
#include <stdexcept>

namespace c2csim {

int weighted_pick(std::span<const int> candidates, std::span<const double> trust,
                  RngStream& rng) {
    if (candidates.empty()) {
        throw std::invalid_argument("no counterparty");
    }
    std::vector<double> weights;
    weights.reserve(candidates.size());
    double total = 0.0;
    for (int id : candidates) {
        const double w = trust[static_cast<std::size_t>(id)];
        weights.push_back(w);
        total += w;
    }
    if (total > 0.0) {
        return candidates[rng.weighted_index(weights)];
    }
    return candidates[rng.uniform_index(candidates.size())];
}

int select_seller(int buyer, const TradeGraph& graph, std::span<const double> trust,
                  const Roster& roster, const ThreatModelSpec& spec,
                  const BehaviorContext& ctx, double collusion_bias, RngStream& rng) {
    const int n = graph.node_count;
    if (n < 2) {
        throw std::invalid_argument("no counterparty");
    }

    if (spec.collusion && roster.is_attacker(buyer) && ctx.attack_phase() &&
        rng.bernoulli(collusion_bias)) {
        std::vector<int> allies;
        for (int v : roster.attacker_ids()) {
            if (v != buyer) {
                allies.push_back(v);
            }
        }
        if (!allies.empty()) {
            return allies[rng.uniform_index(allies.size())];
        }
        // Lone attacker: fall through to the normal rule.
    }

    const auto& proven = graph.out[static_cast<std::size_t>(buyer)];
    std::vector<int> unproven;
    unproven.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (v != buyer && !graph.has_edge(buyer, v)) {
            unproven.push_back(v);
        }
    }

    const bool pick_proven = rng.bernoulli(0.5);
    std::span<const int> pool = pick_proven ? std::span<const int>(proven)
                                            : std::span<const int>(unproven);
    if (pool.empty()) {
        pool = pick_proven ? std::span<const int>(unproven) : std::span<const int>(proven);
    }
    return weighted_pick(pool, trust, rng);
}

TransactionRecord execute_transaction(int buyer, int seller, int tick, RatingLedger& ledger,
                                      TradeGraph& graph, const Roster& roster,
                                      const ThreatModelSpec& spec, const BehaviorContext& ctx,
                                      RngStream& rng) {
    if (buyer == seller) {
        throw std::invalid_argument("self-rating");
    }
    const Role buyer_role = roster.role[static_cast<std::size_t>(buyer)];
    const Role seller_role = roster.role[static_cast<std::size_t>(seller)];

    TransactionRecord record;
    record.tick = tick;
    record.buyer = buyer;
    record.seller = seller;
    record.quality = service_quality(seller_role, buyer_role, ctx, spec, rng);
    record.buyer_rating = buyer_rating(buyer_role, seller_role, record.quality, ctx, spec, rng);
    record.seller_rating = seller_rating(seller_role, buyer_role, record.quality,
                                         record.buyer_rating, ctx, spec, rng);

    ledger.record(buyer, seller, record.buyer_rating);
    ledger.record(seller, buyer, record.seller_rating);
    graph.add_edge(buyer, seller);
    return record;
}

} // namespace c2csim
