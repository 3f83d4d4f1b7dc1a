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

#include "c2csim/ledger.hpp"

#include <stdexcept>

namespace c2csim {

RatingLedger::RatingLedger(int node_count) : n_(node_count) {
    if (node_count <= 0) {
        throw std::invalid_argument("unknown node");
    }
    totals_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

std::int32_t RatingLedger::rating(int rater, int target) const {
    check_pair(rater, target);
    return totals_[static_cast<std::size_t>(rater) * n_ + target];
}

void RatingLedger::record(int rater, int target, bool satisfied) {
    check_pair(rater, target);
    totals_[static_cast<std::size_t>(rater) * n_ + target] += satisfied ? 1 : -1;
}

void RatingLedger::check_pair(int rater, int target) const {
    if (rater < 0 || rater >= n_ || target < 0 || target >= n_) {
        throw std::invalid_argument("unknown node");
    }
    if (rater == target) {
        throw std::invalid_argument("self-rating");
    }
}

} // namespace c2csim
