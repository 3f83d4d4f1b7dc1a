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
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "c2csim/analysis.hpp"
#include "c2csim/rng.hpp"

using namespace c2csim;

namespace {

// Naive two-pass oracle for the plain windowed variance.
std::vector<double> naive_windowed_variance(const std::vector<double>& series, int window) {
    std::vector<double> out;
    for (std::size_t start = 0; start + window <= series.size(); ++start) {
        double mean = 0.0;
        for (int i = 0; i < window; ++i) {
            mean += series[start + static_cast<std::size_t>(i)];
        }
        mean /= window;
        double ss = 0.0;
        for (int i = 0; i < window; ++i) {
            const double d = series[start + static_cast<std::size_t>(i)] - mean;
            ss += d * d;
        }
        out.push_back(ss / (window - 1));
    }
    return out;
}

// Closed-form OLS slope oracle.
double naive_slope(const std::vector<double>& series, int from, int to) {
    const int n = to - from + 1;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int t = from; t <= to; ++t) {
        sx += t;
        sy += series[static_cast<std::size_t>(t)];
        sxx += static_cast<double>(t) * t;
        sxy += t * series[static_cast<std::size_t>(t)];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> constant_series(std::size_t length, double value) {
    return std::vector<double>(length, value);
}

} // namespace

TEST_CASE("windowed variance of a constant series is zero") {
    const auto series = constant_series(30, 0.42);
    for (double v : windowed_variance(series, 5)) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("windowed variance of an alternating 0/1 series is one third") {
    std::vector<double> series;
    for (int i = 0; i < 20; ++i) {
        series.push_back(i % 2 == 0 ? 0.0 : 1.0);
    }
    const auto variances = windowed_variance(series, 4);
    REQUIRE(variances.size() == 17);
    for (double v : variances) {
        CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("windowed variance matches the naive oracle") {
    RngStream rng(31, "test");
    std::vector<double> series;
    for (int i = 0; i < 120; ++i) {
        series.push_back(rng.next_unit());
    }
    for (int window : {2, 5, 10, 37}) {
        const auto fast = windowed_variance(series, window);
        const auto slow = naive_windowed_variance(series, window);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(std::abs(fast[i] - slow[i]) < 1e-12);
        }
    }
}

TEST_CASE("windowed variance rejects bad windows") {
    const auto series = constant_series(10, 1.0);
    CHECK_THROWS_WITH_AS(windowed_variance(series, 11), "window too large",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(windowed_variance(series, 1), "window too small",
                         std::invalid_argument);
}

TEST_CASE("detrended variance ignores straight lines but keeps jitter") {
    std::vector<double> line;
    std::vector<double> sawtooth;
    for (int i = 0; i < 40; ++i) {
        line.push_back(0.5 - 0.01 * i);
        sawtooth.push_back(0.5 + (i % 2 == 0 ? 0.05 : -0.05));
    }
    for (double v : windowed_detrended_variance(line, 8)) {
        CHECK(v < 1e-24);
    }
    for (double v : windowed_detrended_variance(sawtooth, 8)) {
        CHECK(v > 1e-4);
    }
}

TEST_CASE("trend slope recovers exact lines") {
    std::vector<double> series;
    for (int i = 0; i < 50; ++i) {
        series.push_back(0.5 - 0.001 * i);
    }
    CHECK(std::abs(trend_slope(series, 0, 49) + 0.001) < 1e-12);
    CHECK(std::abs(trend_slope(series, 10, 30) + 0.001) < 1e-12);

    const auto flat = constant_series(20, 0.3);
    CHECK(trend_slope(flat, 0, 19) == doctest::Approx(0.0));
}

TEST_CASE("trend slope matches the closed-form oracle on noisy data") {
    RngStream rng(33, "test");
    std::vector<double> series;
    for (int i = 0; i < 80; ++i) {
        series.push_back(0.2 + 0.003 * i + 0.01 * (rng.next_unit() - 0.5));
    }
    CHECK(std::abs(trend_slope(series, 5, 70) - naive_slope(series, 5, 70)) < 1e-12);
}

TEST_CASE("trend slope rejects bad ranges") {
    const auto series = constant_series(10, 1.0);
    CHECK_THROWS_AS(trend_slope(series, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(trend_slope(series, 3, 4), std::invalid_argument);
}

TEST_CASE("two constant cohort series do not oscillate") {
    const auto attackers = constant_series(60, 0.02);
    const auto normals = constant_series(60, 0.01);
    const OscillationResult result = detect_oscillation(attackers, normals, 30, 10, 2.0);
    CHECK_FALSE(result.oscillating);
    CHECK(result.ratio == 0.0);
}

TEST_CASE("an alternating attacker series against a flat normal series oscillates") {
    std::vector<double> attackers;
    std::vector<double> normals;
    for (int i = 0; i < 60; ++i) {
        attackers.push_back(0.02 + (i % 2 == 0 ? 0.005 : -0.005));
        normals.push_back(0.01);
    }
    const OscillationResult result = detect_oscillation(attackers, normals, 30, 10, 2.0);
    CHECK(result.oscillating);
    CHECK(result.ratio == kRatioCap);
}

TEST_CASE("oscillation detection is shift invariant") {
    RngStream rng(35, "test");
    std::vector<double> attackers;
    std::vector<double> normals;
    for (int i = 0; i < 80; ++i) {
        attackers.push_back(0.02 + 0.01 * rng.next_unit());
        normals.push_back(0.01 + 0.002 * rng.next_unit());
    }
    const OscillationResult base = detect_oscillation(attackers, normals, 40, 10, 2.0);

    std::vector<double> attackers_shifted = attackers;
    std::vector<double> normals_shifted = normals;
    for (std::size_t i = 0; i < attackers.size(); ++i) {
        attackers_shifted[i] += 0.1;
        normals_shifted[i] += 0.1;
    }
    const OscillationResult shifted =
        detect_oscillation(attackers_shifted, normals_shifted, 40, 10, 2.0);
    CHECK(shifted.oscillating == base.oscillating);
    CHECK(shifted.ratio == doctest::Approx(base.ratio).epsilon(1e-6));
}

TEST_CASE("classification: smooth decay is a monotone decrease") {
    std::vector<double> attackers;
    for (int i = 0; i <= 100; ++i) {
        attackers.push_back(i < 50 ? 0.01 : 0.01 * std::exp(-0.1 * (i - 50)));
    }
    const DynamicsVerdict verdict = classify_dynamics(attackers, 50, {}, OscillationResult{});
    CHECK(verdict.shape == DynamicsShape::MonotoneDecrease);
    CHECK(verdict.post_attack_slope < 0.0);
}

TEST_CASE("classification: spike then decay") {
    std::vector<double> attackers;
    for (int i = 0; i <= 100; ++i) {
        if (i < 50) {
            attackers.push_back(0.01);
        } else if (i < 55) {
            attackers.push_back(0.01 + 0.004 * (i - 49)); // ramp to 0.03
        } else {
            attackers.push_back(0.03 * std::exp(-0.03 * (i - 54)));
        }
    }
    const DynamicsVerdict verdict = classify_dynamics(attackers, 50, {}, OscillationResult{});
    CHECK(verdict.shape == DynamicsShape::SpikeThenDecrease);
    CHECK(verdict.peak_value > 1.5 * verdict.pre_attack_mean);
}

TEST_CASE("classification: spike then plateau") {
    std::vector<double> attackers;
    for (int i = 0; i <= 100; ++i) {
        if (i < 50) {
            attackers.push_back(0.01);
        } else if (i < 55) {
            attackers.push_back(0.01 + 0.004 * (i - 49));
        } else {
            attackers.push_back(0.03);
        }
    }
    const DynamicsVerdict verdict = classify_dynamics(attackers, 50, {}, OscillationResult{});
    CHECK(verdict.shape == DynamicsShape::SpikeThenPlateau);
}

TEST_CASE("classification: injected oscillation verdict wins") {
    const auto attackers = constant_series(101, 0.02);
    OscillationResult oscillation;
    oscillation.oscillating = true;
    oscillation.ratio = 10.0;
    const DynamicsVerdict verdict = classify_dynamics(attackers, 50, {}, oscillation);
    CHECK(verdict.shape == DynamicsShape::Oscillating);
    CHECK(verdict.oscillation_ratio == 10.0);
}

TEST_CASE("classification verdicts are invariant under common scaling") {
    RngStream rng(37, "test");
    std::vector<double> attackers;
    for (int i = 0; i <= 100; ++i) {
        const double base = i < 50 ? 0.01 : 0.01 + 0.012 * std::min(1.0, (i - 50) / 5.0);
        attackers.push_back(base + 0.0005 * (rng.next_unit() - 0.5));
    }
    const DynamicsVerdict plain = classify_dynamics(attackers, 50, {}, OscillationResult{});

    const double lambda = 4.0;
    std::vector<double> attackers_scaled = attackers;
    for (std::size_t i = 0; i < attackers.size(); ++i) {
        attackers_scaled[i] *= lambda;
    }
    const DynamicsVerdict scaled =
        classify_dynamics(attackers_scaled, 50, {}, OscillationResult{});
    CHECK(plain.shape == scaled.shape);
    CHECK(scaled.post_attack_slope == doctest::Approx(lambda * plain.post_attack_slope));
    CHECK(scaled.pre_attack_mean == doctest::Approx(lambda * plain.pre_attack_mean));
}

TEST_CASE("windowed variances scale quadratically and slopes linearly") {
    RngStream rng(39, "test");
    std::vector<double> series;
    for (int i = 0; i < 60; ++i) {
        series.push_back(rng.next_unit());
    }
    const double lambda = 3.0;
    std::vector<double> scaled = series;
    for (double& v : scaled) {
        v *= lambda;
    }
    const auto var_base = windowed_variance(series, 10);
    const auto var_scaled = windowed_variance(scaled, 10);
    for (std::size_t i = 0; i < var_base.size(); ++i) {
        CHECK(var_scaled[i] == doctest::Approx(lambda * lambda * var_base[i]).epsilon(1e-9));
    }
    CHECK(trend_slope(scaled, 0, 59) ==
          doctest::Approx(lambda * trend_slope(series, 0, 59)).epsilon(1e-9));
}
