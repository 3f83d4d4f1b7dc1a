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

#ifndef C2CSIM_TRUST_HPP
#define C2CSIM_TRUST_HPP

#include <span>
#include <vector>

#include "c2csim/ledger.hpp"
#include "c2csim/matrix.hpp"

namespace c2csim {

/// Node count below which the trust kernels stay single-threaded. The
/// default marketplace (100 nodes) is far cheaper to run serially than to
/// fork a team per power iteration; the OpenMP paths pay off from roughly
/// this size upward (see bench/).
inline constexpr int kParallelMinNodes = 256;

/// Pre-trust vector: probability 1/|P| on each pre-trusted node, 0 elsewhere.
std::vector<double> make_pretrust(int node_count, std::span<const int> pretrusted_ids);

/// Normalized local trust matrix.
///
/// Row i is max(s_ij, 0) / sum_j max(s_ij, 0) with the diagonal forced to
/// zero before normalization. Rows whose positive part sums to zero carry no
/// opinion and are replaced by the pre-trust vector, which keeps every row
/// stochastic.
Matrix local_trust_matrix(const RatingLedger& ledger, std::span<const double> pretrust);

struct TrustResult {
    std::vector<double> scores;
    bool converged = false;
    int iterations = 0;
};

/// Global trust vector by damped power iteration:
///
///   t <- (1 - damping) * C^T t + damping * p,  t(0) = p
///
/// until the L1 change drops below eps or max_iter is reached. Non-convergence
/// is not an error; the last iterate is returned with converged = false so the
/// caller can record the flag. The returned scores are nonnegative and sum to
/// one (up to roundoff) because every row of C is stochastic.
TrustResult compute_global_trust(const Matrix& local_trust, std::span<const double> pretrust,
                                 double damping, double eps, int max_iter);

} // namespace c2csim

#endif
