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

#ifndef C2CSIM_TRUST_REFERENCE_HPP
#define C2CSIM_TRUST_REFERENCE_HPP

#include <span>
#include <vector>

#include "c2csim/ledger.hpp"
#include "c2csim/matrix.hpp"

namespace c2csim::reference {

// Serial reference implementations of the trust kernels, written as plain
// loops with no shortcuts. They are deliberately independent of the paths in
// trust.cpp: tests use them as oracles and bench/ compares against them.

/// Row normalization by a direct two-pass loop per row.
Matrix local_trust_matrix(const RatingLedger& ledger, std::span<const double> pretrust);

/// Runs exactly `iterations` damped power-iteration steps from t = p,
/// accumulating C^T t by scattering over rows. No convergence test.
std::vector<double> power_iterate(const Matrix& local_trust, std::span<const double> pretrust,
                                  double damping, int iterations);

} // namespace c2csim::reference

#endif
