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

#include "c2csim/trust.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace c2csim {

std::vector<double> make_pretrust(int node_count, std::span<const int> pretrusted_ids) {
    if (pretrusted_ids.empty()) {
        throw std::invalid_argument("pre-trust set must not be empty");
    }
    std::vector<double> p(static_cast<std::size_t>(node_count), 0.0);
    const double share = 1.0 / static_cast<double>(pretrusted_ids.size());
    for (int id : pretrusted_ids) {
        if (id < 0 || id >= node_count) {
            throw std::invalid_argument("unknown node");
        }
        p[static_cast<std::size_t>(id)] = share;
    }
    return p;
}

Matrix local_trust_matrix(const RatingLedger& ledger, std::span<const double> pretrust) {
    const int n = ledger.node_count();
    Matrix c(n, n);

    // Rows are independent: normalize each one in place.
    #pragma omp parallel for schedule(static) if (n >= kParallelMinNodes)
    for (int i = 0; i < n; ++i) {
        auto row = c.row(i);
        double positive_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) {
                continue; // diagonal forced to zero
            }
            const double value = std::max<double>(ledger.rating(i, j), 0.0);
            row[static_cast<std::size_t>(j)] = value;
            positive_sum += value;
        }
        if (positive_sum > 0.0) {
            for (int j = 0; j < n; ++j) {
                row[static_cast<std::size_t>(j)] /= positive_sum;
            }
        } else {
            // No positive opinion: fall back to the pre-trust vector.
            for (int j = 0; j < n; ++j) {
                row[static_cast<std::size_t>(j)] = pretrust[static_cast<std::size_t>(j)];
            }
        }
    }
    return c;
}

TrustResult compute_global_trust(const Matrix& local_trust, std::span<const double> pretrust,
                                 double damping, double eps, int max_iter) {
    const int n = local_trust.rows();
    if (local_trust.cols() != n || static_cast<int>(pretrust.size()) != n) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (!(eps > 0.0) || damping < 0.0 || damping > 1.0) {
        throw std::invalid_argument("invalid iteration parameters");
    }

    // The iteration reads columns of C; transpose once so each output entry
    // scans a contiguous row. Entries are written by exactly one iteration
    // of the parallel loop, so results do not depend on the thread count.
    Matrix ct(n, n);
    #pragma omp parallel for schedule(static) if (n >= kParallelMinNodes)
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            ct(j, i) = local_trust(i, j);
        }
    }

    TrustResult result;
    std::vector<double> t(pretrust.begin(), pretrust.end());
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);

    for (int iter = 1; iter <= max_iter; ++iter) {
        #pragma omp parallel for schedule(static) if (n >= kParallelMinNodes)
        for (int j = 0; j < n; ++j) {
            const auto ct_row = ct.row(j);
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += ct_row[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(i)];
            }
            next[static_cast<std::size_t>(j)] =
                (1.0 - damping) * acc + damping * pretrust[static_cast<std::size_t>(j)];
        }

        // Serial L1 norm keeps the stopping decision independent of any
        // floating-point reduction order.
        double delta = 0.0;
        for (int j = 0; j < n; ++j) {
            delta += std::abs(next[static_cast<std::size_t>(j)] - t[static_cast<std::size_t>(j)]);
        }
        t.swap(next);
        result.iterations = iter;
        if (delta < eps) {
            result.converged = true;
            break;
        }
    }

    result.scores = std::move(t);
    return result;
}

} // namespace c2csim
