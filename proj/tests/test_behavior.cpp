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

#include <cmath>

#include <doctest.h>

#include "c2csim/behavior.hpp"

using namespace c2csim;

namespace {

const BehaviorContext kIncubation{10, 50};
const BehaviorContext kAttackPhase{60, 50};

// 3-sigma binomial band around expected probability p over n draws.
bool within_3sigma(int hits, int n, double p) {
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    return std::abs(static_cast<double>(hits) / n - p) <= 3.0 * sigma;
}

} // namespace

TEST_CASE("model A attackers defect deterministically after incubation") {
    RngStream rng(1, "behavior");
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::A, 0.5, 0.5, 0.5);
    CHECK(service_quality(Role::Attacker, Role::Normal, kAttackPhase, spec, rng) ==
          Quality::Defective);
    // Without collusion even a fellow attacker is attacked.
    CHECK(service_quality(Role::Attacker, Role::Attacker, kAttackPhase, spec, rng) ==
          Quality::Defective);
}

TEST_CASE("attackers deliver good service during incubation") {
    RngStream rng(2, "behavior");
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::A, 0.5, 0.5, 0.5);
    for (int i = 0; i < 100; ++i) {
        CHECK(service_quality(Role::Attacker, Role::Normal, kIncubation, spec, rng) ==
              Quality::Good);
    }
}

TEST_CASE("model C service attacks hit at rate 1 - c") {
    RngStream rng(3, "behavior");
    const double c = 0.5;
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::C, c, 0.5, 0.5);
    const int draws = 10000;
    int defective = 0;
    for (int i = 0; i < draws; ++i) {
        defective += service_quality(Role::Attacker, Role::Normal, kAttackPhase, spec, rng) ==
                     Quality::Defective;
    }
    CHECK(std::abs(static_cast<double>(defective) / draws - (1.0 - c)) < 0.03);
    CHECK(within_3sigma(defective, draws, 1.0 - c));
}

TEST_CASE("normal buyers rate by quality") {
    RngStream rng(4, "behavior");
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::A, 0.5, 0.5, 0.5);
    CHECK_FALSE(buyer_rating(Role::Normal, Role::Attacker, Quality::Defective, kAttackPhase,
                             spec, rng));
    CHECK(buyer_rating(Role::Normal, Role::Attacker, Quality::Good, kAttackPhase, spec, rng));
}

TEST_CASE("colluding buyers always rate allies up") {
    RngStream rng(5, "behavior");
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::B, 0.5, 0.5, 0.5);
    for (int i = 0; i < 50; ++i) {
        CHECK(buyer_rating(Role::Attacker, Role::Attacker, Quality::Defective, kAttackPhase,
                           spec, rng));
    }
}

TEST_CASE("model D spies always run the buyer-side rating attack") {
    RngStream rng(6, "behavior");
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::D, 0.5, 0.5, 0.5);
    for (int i = 0; i < 50; ++i) {
        CHECK_FALSE(buyer_rating(Role::Spy, Role::Normal, Quality::Good, kAttackPhase, spec,
                                 rng));
    }
    // Non-spy attackers in D have rating attack probability zero.
    CHECK(buyer_rating(Role::Attacker, Role::Normal, Quality::Good, kAttackPhase, spec, rng));
}

TEST_CASE("sellers punish detectable unfair ratings and accept fair complaints") {
    RngStream rng(7, "behavior");
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::A, 0.5, 0.5, 0.5);
    // Good product, buyer complained anyway: unfair, punished.
    CHECK_FALSE(seller_rating(Role::Normal, Role::Attacker, Quality::Good, false, kAttackPhase,
                              spec, rng));
    // Defective product, complaint is fair.
    CHECK(seller_rating(Role::Normal, Role::Normal, Quality::Defective, false, kAttackPhase,
                        spec, rng));
    // Satisfied buyer.
    CHECK(seller_rating(Role::Normal, Role::Normal, Quality::Good, true, kAttackPhase, spec,
                        rng));
}

TEST_CASE("a non-colluding attacker seller follows the honest rating policy") {
    RngStream rng(8, "behavior");
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::A, 0.5, 0.5, 0.5);
    CHECK(seller_rating(Role::Attacker, Role::Normal, Quality::Defective, false, kAttackPhase,
                        spec, rng));
}

TEST_CASE("colluding attacker sellers rate allies up and attack outsiders") {
    RngStream rng(9, "behavior");
    const ThreatModelSpec spec = ThreatModelSpec::make(ThreatModel::B, 0.5, 0.5, 0.5);
    for (int i = 0; i < 50; ++i) {
        CHECK(seller_rating(Role::Attacker, Role::Attacker, Quality::Defective, false,
                            kAttackPhase, spec, rng));
        // Rating attack probability is 1 under model B.
        CHECK_FALSE(seller_rating(Role::Attacker, Role::Normal, Quality::Good, true,
                                  kAttackPhase, spec, rng));
    }
}

TEST_CASE("during incubation attacker decisions match normal ones draw for draw") {
    for (ThreatModel model : {ThreatModel::A, ThreatModel::B, ThreatModel::C, ThreatModel::D,
                              ThreatModel::E, ThreatModel::F}) {
        const ThreatModelSpec spec = ThreatModelSpec::make(model, 0.5, 0.5, 0.5);
        for (Role role : {Role::Attacker, Role::Spy}) {
            RngStream rng_a(11, "behavior");
            RngStream rng_b(11, "behavior");
            for (int trial = 0; trial < 200; ++trial) {
                const Quality q_att = service_quality(role, Role::Normal, kIncubation, spec, rng_a);
                const Quality q_norm = service_quality(Role::Normal, Role::Normal, kIncubation,
                                                       spec, rng_b);
                CHECK(q_att == q_norm);
                CHECK(buyer_rating(role, Role::Normal, q_att, kIncubation, spec, rng_a) ==
                      buyer_rating(Role::Normal, Role::Normal, q_norm, kIncubation, spec, rng_b));
                CHECK(seller_rating(role, Role::Normal, q_att, true, kIncubation, spec, rng_a) ==
                      seller_rating(Role::Normal, Role::Normal, q_norm, true, kIncubation, spec,
                                    rng_b));
            }
        }
    }
}

TEST_CASE("collusion closure: no attack ever lands on an ally") {
    for (ThreatModel model : {ThreatModel::B, ThreatModel::C, ThreatModel::D, ThreatModel::E,
                              ThreatModel::F}) {
        const ThreatModelSpec spec = ThreatModelSpec::make(model, 0.5, 0.5, 0.5);
        RngStream rng(13, "behavior");
        for (int trial = 0; trial < 500; ++trial) {
            for (Role seller : {Role::Attacker, Role::Spy}) {
                for (Role buyer : {Role::Attacker, Role::Spy}) {
                    const Quality q = service_quality(seller, buyer, kAttackPhase, spec, rng);
                    CHECK(q == Quality::Good);
                    CHECK(buyer_rating(buyer, seller, q, kAttackPhase, spec, rng));
                    CHECK(seller_rating(seller, buyer, q, true, kAttackPhase, spec, rng));
                }
            }
        }
    }
}

TEST_CASE("rating attack frequencies calibrate to 1 - e and 1 - f") {
    const int draws = 10000;

    RngStream rng_e(14, "behavior");
    const ThreatModelSpec spec_e = ThreatModelSpec::make(ThreatModel::E, 0.5, 0.5, 0.5);
    int bad_e = 0;
    for (int i = 0; i < draws; ++i) {
        bad_e += !buyer_rating(Role::Attacker, Role::Normal, Quality::Good, kAttackPhase,
                               spec_e, rng_e);
    }
    CHECK(within_3sigma(bad_e, draws, 0.5));

    RngStream rng_f(15, "behavior");
    const ThreatModelSpec spec_f = ThreatModelSpec::make(ThreatModel::F, 0.5, 0.5, 0.5);
    int bad_f = 0;
    for (int i = 0; i < draws; ++i) {
        bad_f += !buyer_rating(Role::Spy, Role::Normal, Quality::Good, kAttackPhase, spec_f,
                               rng_f);
    }
    CHECK(within_3sigma(bad_f, draws, 0.5));
}
