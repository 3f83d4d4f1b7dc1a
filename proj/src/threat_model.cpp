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

#include "c2csim/threat_model.hpp"

#include <stdexcept>

namespace c2csim {

ThreatModel parse_threat_model(std::string_view name) {
    if (name.size() == 1) {
        switch (name[0]) {
        case 'A': case 'a': return ThreatModel::A;
        case 'B': case 'b': return ThreatModel::B;
        case 'C': case 'c': return ThreatModel::C;
        case 'D': case 'd': return ThreatModel::D;
        case 'E': case 'e': return ThreatModel::E;
        case 'F': case 'f': return ThreatModel::F;
        default: break;
        }
    }
    throw std::invalid_argument("unknown threat model: " + std::string(name));
}

std::string to_string(ThreatModel model) {
    switch (model) {
    case ThreatModel::A: return "A";
    case ThreatModel::B: return "B";
    case ThreatModel::C: return "C";
    case ThreatModel::D: return "D";
    case ThreatModel::E: return "E";
    case ThreatModel::F: return "F";
    }
    return "?";
}

std::string to_string(Role role) {
    switch (role) {
    case Role::Normal: return "normal";
    case Role::Attacker: return "attacker";
    case Role::Spy: return "spy";
    }
    return "?";
}

std::string to_string(Quality quality) {
    return quality == Quality::Good ? "Good" : "Defective";
}

ThreatModelSpec ThreatModelSpec::make(ThreatModel model, double c, double e, double f) {
    ThreatModelSpec spec;
    spec.model = model;
    switch (model) {
    case ThreatModel::A:
        spec.collusion = false;
        spec.attacker_service_attack = 1.0;
        spec.attacker_rating_attack = 1.0;
        break;
    case ThreatModel::B:
        spec.collusion = true;
        spec.attacker_service_attack = 1.0;
        spec.attacker_rating_attack = 1.0;
        break;
    case ThreatModel::C:
        spec.collusion = true;
        spec.attacker_service_attack = 1.0 - c;
        spec.attacker_rating_attack = 0.0;
        break;
    case ThreatModel::D:
        spec.collusion = true;
        spec.has_spies = true;
        spec.attacker_service_attack = 1.0;
        spec.attacker_rating_attack = 0.0;
        spec.spy_service_attack = 0.0;
        spec.spy_rating_attack = 1.0;
        break;
    case ThreatModel::E:
        spec.collusion = true;
        spec.attacker_service_attack = 1.0 - c;
        spec.attacker_rating_attack = 1.0 - e;
        break;
    case ThreatModel::F:
        spec.collusion = true;
        spec.has_spies = true;
        spec.attacker_service_attack = 1.0;
        spec.attacker_rating_attack = 0.0;
        spec.spy_service_attack = 0.0;
        spec.spy_rating_attack = 1.0 - f;
        break;
    }
    return spec;
}

} // namespace c2csim
