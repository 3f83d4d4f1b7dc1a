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

// Compares the OpenMP trust kernels against the serial reference at several
// problem sizes. The default marketplace (100 nodes) sits below the parallel
// threshold on purpose; the larger sizes show where the threads earn their
// keep.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "c2csim/ledger.hpp"
#include "c2csim/rng.hpp"
#include "c2csim/trust.hpp"
#include "c2csim/trust_reference.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

c2csim::RatingLedger random_ledger(int n, c2csim::RngStream& rng) {
    c2csim::RatingLedger ledger(n);
    // Roughly 16 rated partners per node, rating totals in [-2, 5].
    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < 16; ++d) {
            const int j = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n)));
            if (j == i) {
                continue;
            }
            const int total = static_cast<int>(rng.uniform_index(8)) - 2;
            for (int r = 0; r < std::abs(total); ++r) {
                ledger.record(i, j, total > 0);
            }
        }
    }
    return ledger;
}

} // namespace

int main() {
    constexpr int kIterations = 200;
    constexpr double kDamping = 0.1;

    std::printf("%8s %14s %14s %10s %12s\n", "nodes", "parallel [ms]", "serial [ms]", "speedup",
                "max |diff|");

    for (int n : {100, 256, 512, 1024, 2048}) {
        c2csim::RngStream rng(42, "bench");
        const c2csim::RatingLedger ledger = random_ledger(n, rng);

        std::vector<int> pretrusted;
        for (int i = 0; i < n; i += 4) {
            pretrusted.push_back(i);
        }
        const std::vector<double> pretrust = c2csim::make_pretrust(n, pretrusted);

        const auto parallel_start = Clock::now();
        const c2csim::Matrix local = c2csim::local_trust_matrix(ledger, pretrust);
        // eps below any reachable delta, so both sides run the same number
        // of iterations.
        const c2csim::TrustResult fast =
            c2csim::compute_global_trust(local, pretrust, kDamping, 1e-300, kIterations);
        const double parallel_ms = seconds_since(parallel_start) * 1e3;

        const auto serial_start = Clock::now();
        const c2csim::Matrix local_ref = c2csim::reference::local_trust_matrix(ledger, pretrust);
        const std::vector<double> slow =
            c2csim::reference::power_iterate(local_ref, pretrust, kDamping, kIterations);
        const double serial_ms = seconds_since(serial_start) * 1e3;

        double max_diff = 0.0;
        for (int j = 0; j < n; ++j) {
            max_diff = std::max(max_diff,
                                std::abs(fast.scores[static_cast<std::size_t>(j)] -
                                         slow[static_cast<std::size_t>(j)]));
        }

        std::printf("%8d %14.2f %14.2f %9.2fx %12.3e\n", n, parallel_ms, serial_ms,
                    serial_ms / parallel_ms, max_diff);
    }
    return 0;
}
