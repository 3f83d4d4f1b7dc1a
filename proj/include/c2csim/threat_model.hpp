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

#ifndef C2CSIM_THREAT_MODEL_HPP
#define C2CSIM_THREAT_MODEL_HPP

#include <string>
#include <string_view>

namespace c2csim {

enum class ThreatModel { A, B, C, D, E, F };

enum class Role { Normal, Attacker, Spy };

enum class Quality { Good, Defective };

ThreatModel parse_threat_model(std::string_view name);
std::string to_string(ThreatModel model);
std::string to_string(Role role);
std::string to_string(Quality quality);

/// Per-role attack probabilities and group features of one threat model.
///
///   model   service attack        rating attack          collusion  spies
///   A       1                     1                      no         no
///   B       1                     1                      yes        no
///   C       1 - c                 0                      yes        no
///   D       attacker 1, spy 0     attacker 0, spy 1      yes        yes
///   E       1 - c                 1 - e                  yes        no
///   F       attacker 1, spy 0     attacker 0, spy 1 - f  yes        yes
///
/// c, e and f are camouflage probabilities: the chance of behaving honestly
/// instead of attacking.
struct ThreatModelSpec {
    ThreatModel model = ThreatModel::A;
    bool collusion = false;
    bool has_spies = false;
    double attacker_service_attack = 1.0;
    double attacker_rating_attack = 1.0;
    double spy_service_attack = 0.0;
    double spy_rating_attack = 0.0;

    static ThreatModelSpec make(ThreatModel model, double c, double e, double f);

    double service_attack_prob(Role role) const {
        return role == Role::Spy ? spy_service_attack : attacker_service_attack;
    }
    double rating_attack_prob(Role role) const {
        return role == Role::Spy ? spy_rating_attack : attacker_rating_attack;
    }
};

} // namespace c2csim

#endif
