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

#include "c2csim/trust_reference.hpp"

namespace c2csim::reference {

Matrix local_trust_matrix(const RatingLedger& ledger, std::span<const double> pretrust) {
    const int n = ledger.node_count();
    Matrix c(n, n);
    for (int i = 0; i < n; ++i) {
        double positive_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i && ledger.rating(i, j) > 0) {
                positive_sum += ledger.rating(i, j);
            }
        }
        for (int j = 0; j < n; ++j) {
            if (positive_sum > 0.0) {
                if (j != i && ledger.rating(i, j) > 0) {
                    c(i, j) = ledger.rating(i, j) / positive_sum;
                } else {
                    c(i, j) = 0.0;
                }
            } else {
                c(i, j) = pretrust[static_cast<std::size_t>(j)];
            }
        }
    }
    return c;
}

std::vector<double> power_iterate(const Matrix& local_trust, std::span<const double> pretrust,
                                  double damping, int iterations) {
    const int n = local_trust.rows();
    std::vector<double> t(pretrust.begin(), pretrust.end());
    std::vector<double> next(static_cast<std::size_t>(n));
    for (int step = 0; step < iterations; ++step) {
        for (int j = 0; j < n; ++j) {
            next[static_cast<std::size_t>(j)] = 0.0;
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                next[static_cast<std::size_t>(j)] +=
                    local_trust(i, j) * t[static_cast<std::size_t>(i)];
            }
        }
        for (int j = 0; j < n; ++j) {
            t[static_cast<std::size_t>(j)] =
                (1.0 - damping) * next[static_cast<std::size_t>(j)] +
                damping * pretrust[static_cast<std::size_t>(j)];
        }
    }
    return t;
}

} // namespace c2csim::reference
