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

#ifndef C2CSIM_BEHAVIOR_HPP
#define C2CSIM_BEHAVIOR_HPP

#include "c2csim/rng.hpp"
#include "c2csim/threat_model.hpp"

namespace c2csim {

/// Timing context for one decision. Attacks only happen once the incubation
/// period has elapsed; before that attackers behave exactly like normal
/// users, draw for draw.
struct BehaviorContext {
    int tick = 0;
    int incubation_period = 0;

    bool attack_phase() const { return tick >= incubation_period; }
};

/// Product quality delivered by `seller` to `buyer`.
///
/// Normal sellers always deliver Good. Attackers deliver Good during
/// incubation and to allies under collusion; otherwise they deliver
/// Defective with their role's service-attack probability.
Quality service_quality(Role seller, Role buyer, const BehaviorContext& ctx,
                        const ThreatModelSpec& spec, RngStream& rng);

/// The buyer's binary rating of the seller after receiving `quality`.
///
/// Honest policy: True iff the product was Good. Colluding buyers always
/// rate allied sellers True; toward non-allies an attacker issues False with
/// its rating-attack probability and rates honestly otherwise.
bool buyer_rating(Role buyer, Role seller, Quality quality, const BehaviorContext& ctx,
                  const ThreatModelSpec& spec, RngStream& rng);

/// The seller's reciprocal satisfaction rating of the buyer.
///
/// The honest policy punishes detectable unfair ratings: False iff the
/// product was Good yet the buyer rated False, True otherwise. Colluding
/// attackers rate allied buyers True always and attack non-allies with
/// their rating-attack probability; non-colluding attackers follow the
/// honest policy on the selling side.
bool seller_rating(Role seller, Role buyer, Quality quality, bool buyer_rating_value,
                   const BehaviorContext& ctx, const ThreatModelSpec& spec, RngStream& rng);

} // namespace c2csim

#endif
