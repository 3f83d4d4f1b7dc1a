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

#ifndef C2CSIM_LEDGER_HPP
#define C2CSIM_LEDGER_HPP

#include <cstdint>
#include <vector>

namespace c2csim {

/// Accumulated signed rating totals between every ordered node pair.
///
/// Entry (rater, target) is the count of True ratings minus the count of
/// False ratings issued by `rater` about `target`. The diagonal is never
/// read or written: nodes cannot rate themselves.
class RatingLedger {
public:
    explicit RatingLedger(int node_count);

    int node_count() const { return n_; }

    std::int32_t rating(int rater, int target) const;

    /// Adds one binary rating: +1 if satisfied, -1 otherwise.
    /// Throws std::invalid_argument("self-rating") when rater == target and
    /// std::invalid_argument("unknown node") for out-of-range ids.
    void record(int rater, int target, bool satisfied);

private:
    void check_pair(int rater, int target) const;

    int n_ = 0;
    std::vector<std::int32_t> totals_;
};

} // namespace c2csim

#endif
