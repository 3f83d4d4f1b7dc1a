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

#include "c2csim/behavior.hpp"

namespace c2csim {

namespace {

bool allied(Role a, Role b) {
    return a != Role::Normal && b != Role::Normal;
}

} // namespace

Quality service_quality(Role seller, Role buyer, const BehaviorContext& ctx,
                        const ThreatModelSpec& spec, RngStream& rng) {
    if (seller == Role::Normal || !ctx.attack_phase()) {
        return Quality::Good;
    }
    if (spec.collusion && allied(seller, buyer)) {
        return Quality::Good;
    }
    return rng.bernoulli(spec.service_attack_prob(seller)) ? Quality::Defective : Quality::Good;
}

bool buyer_rating(Role buyer, Role seller, Quality quality, const BehaviorContext& ctx,
                  const ThreatModelSpec& spec, RngStream& rng) {
    const bool honest = quality == Quality::Good;
    if (buyer == Role::Normal || !ctx.attack_phase()) {
        return honest;
    }
    if (spec.collusion && allied(buyer, seller)) {
        return true;
    }
    return rng.bernoulli(spec.rating_attack_prob(buyer)) ? false : honest;
}

bool seller_rating(Role seller, Role buyer, Quality quality, bool buyer_rating_value,
                   const BehaviorContext& ctx, const ThreatModelSpec& spec, RngStream& rng) {
    // A buyer who rates a Good product False is issuing an unfair rating;
    // the honest seller answers with a False satisfaction rating.
    const bool honest = !(quality == Quality::Good && !buyer_rating_value);
    if (seller == Role::Normal || !ctx.attack_phase() || !spec.collusion) {
        return honest;
    }
    if (allied(seller, buyer)) {
        return true;
    }
    return rng.bernoulli(spec.rating_attack_prob(seller)) ? false : honest;
}

} // namespace c2csim
