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

#include "c2csim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace c2csim {

std::vector<double> windowed_variance(std::span<const double> series, int window) {
    const int length = static_cast<int>(series.size());
    if (window < 2) {
        throw std::invalid_argument("window too small");
    }
    if (window > length) {
        throw std::invalid_argument("window too large");
    }

    std::vector<double> variances;
    variances.reserve(static_cast<std::size_t>(length - window + 1));
    const double w = static_cast<double>(window);
    for (int start = 0; start + window <= length; ++start) {
        double lo = series[static_cast<std::size_t>(start)];
        double hi = lo;
        double mean = 0.0;
        for (int i = 0; i < window; ++i) {
            const double v = series[static_cast<std::size_t>(start + i)];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            mean += v;
        }
        if (lo == hi) {
            // Constant window: exactly zero, no roundoff residue.
            variances.push_back(0.0);
            continue;
        }
        mean /= w;
        double ss = 0.0;
        for (int i = 0; i < window; ++i) {
            const double d = series[static_cast<std::size_t>(start + i)] - mean;
            ss += d * d;
        }
        variances.push_back(ss / (w - 1.0));
    }
    return variances;
}

std::vector<double> windowed_detrended_variance(std::span<const double> series, int window) {
    const int length = static_cast<int>(series.size());
    if (window < 3) {
        throw std::invalid_argument("window too small");
    }
    if (window > length) {
        throw std::invalid_argument("window too large");
    }

    // x = 0 .. window-1 inside each window; its moments are constant.
    const double w = static_cast<double>(window);
    const double x_mean = (w - 1.0) / 2.0;
    double sxx = 0.0;
    for (int i = 0; i < window; ++i) {
        sxx += (static_cast<double>(i) - x_mean) * (static_cast<double>(i) - x_mean);
    }

    std::vector<double> variances;
    variances.reserve(static_cast<std::size_t>(length - window + 1));
    for (int start = 0; start + window <= length; ++start) {
        double y_mean = 0.0;
        for (int i = 0; i < window; ++i) {
            y_mean += series[static_cast<std::size_t>(start + i)];
        }
        y_mean /= w;
        double sxy = 0.0;
        double syy = 0.0;
        for (int i = 0; i < window; ++i) {
            const double dx = static_cast<double>(i) - x_mean;
            const double dy = series[static_cast<std::size_t>(start + i)] - y_mean;
            sxy += dx * dy;
            syy += dy * dy;
        }
        const double sse = syy - sxy * sxy / sxx;
        variances.push_back(std::max(sse / (w - 2.0), 0.0));
    }
    return variances;
}

double trend_slope(std::span<const double> series, int from_tick, int to_tick) {
    const int length = static_cast<int>(series.size());
    if (from_tick < 0 || to_tick >= length) {
        throw std::invalid_argument("range out of bounds");
    }
    if (to_tick <= from_tick + 1) {
        throw std::invalid_argument("range too short");
    }
    const int count = to_tick - from_tick + 1;
    const double x_mean = (static_cast<double>(from_tick) + static_cast<double>(to_tick)) / 2.0;
    double y_mean = 0.0;
    for (int t = from_tick; t <= to_tick; ++t) {
        y_mean += series[static_cast<std::size_t>(t)];
    }
    y_mean /= static_cast<double>(count);
    double sxx = 0.0;
    double sxy = 0.0;
    for (int t = from_tick; t <= to_tick; ++t) {
        const double dx = static_cast<double>(t) - x_mean;
        sxx += dx * dx;
        sxy += dx * (series[static_cast<std::size_t>(t)] - y_mean);
    }
    return sxy / sxx;
}

namespace {

struct MaxStat {
    double value = 0.0;
    bool any = false;
};

// Max over curve entries whose window starts at or after first_start.
MaxStat max_from(const std::vector<double>& curve, int first_start) {
    MaxStat stat;
    for (int i = std::max(first_start, 0); i < static_cast<int>(curve.size()); ++i) {
        stat.value = stat.any ? std::max(stat.value, curve[static_cast<std::size_t>(i)])
                              : curve[static_cast<std::size_t>(i)];
        stat.any = true;
    }
    return stat;
}

// Variances below (1e-9 * scale)^2, where scale is the largest magnitude in
// the compared series, are indistinguishable from double roundoff and count
// as zero.
double variance_floor(double scale) {
    const double tiny = 1e-9 * scale;
    return tiny * tiny;
}

OscillationResult compare_stats(double attacker_stat, double normal_stat, double kappa,
                                double floor) {
    OscillationResult result;
    result.attacker_stat = attacker_stat = attacker_stat < floor ? 0.0 : attacker_stat;
    result.normal_stat = normal_stat = normal_stat < floor ? 0.0 : normal_stat;
    if (attacker_stat <= 0.0 && normal_stat <= 0.0) {
        result.ratio = 0.0;
        result.oscillating = false;
    } else if (normal_stat <= 0.0) {
        result.ratio = kRatioCap;
        result.oscillating = true;
    } else {
        result.ratio = std::min(attacker_stat / normal_stat, kRatioCap);
        result.oscillating = attacker_stat > kappa * normal_stat;
    }
    return result;
}

double series_scale(std::span<const double> series) {
    double scale = 0.0;
    for (double v : series) {
        scale = std::max(scale, std::abs(v));
    }
    return scale;
}

std::vector<double> mean_series(const TrustTimeSeries& series, std::span<const int> ids) {
    std::vector<double> means;
    means.reserve(series.size());
    for (const auto& tick : series.ticks) {
        double sum = 0.0;
        for (int id : ids) {
            sum += tick.trust[static_cast<std::size_t>(id)];
        }
        means.push_back(sum / static_cast<double>(ids.size()));
    }
    return means;
}

} // namespace

OscillationResult detect_oscillation(std::span<const double> attacker_means,
                                     std::span<const double> normal_means,
                                     int attack_tick, int window, double kappa) {
    if (attacker_means.size() != normal_means.size()) {
        throw std::invalid_argument("cohort series length mismatch");
    }
    if (attack_tick < 0 || attack_tick + window > static_cast<int>(attacker_means.size())) {
        throw std::invalid_argument("window too large");
    }

    const std::vector<double> attacker_var = windowed_variance(attacker_means, window);
    const std::vector<double> normal_var = windowed_variance(normal_means, window);
    const MaxStat att = max_from(attacker_var, attack_tick);
    const MaxStat norm = max_from(normal_var, attack_tick);

    const double floor = variance_floor(std::max(series_scale(attacker_means),
                                                 series_scale(normal_means)));
    OscillationResult result = compare_stats(att.value, norm.value, kappa, floor);
    result.attacker_curve = attacker_var;
    result.normal_curve = normal_var;
    result.curve_first_tick = window - 1;
    return result;
}

OscillationResult detect_oscillation_groups(const TrustTimeSeries& series,
                                            const Roster& roster, int attack_tick,
                                            int window, double kappa, int settle) {
    const int length = static_cast<int>(series.size());
    const int first_start = attack_tick + settle;
    if (attack_tick < 0 || first_start + window > length) {
        throw std::invalid_argument("window too large");
    }

    const std::vector<int> attackers = roster.attacker_ids();
    const std::vector<int> normals = roster.normal_ids();
    if (attackers.empty() || normals.empty()) {
        throw std::invalid_argument("degenerate scenario");
    }

    const std::vector<double> attacker_mean = mean_series(series, attackers);
    const std::vector<double> attacker_var = windowed_detrended_variance(attacker_mean, window);
    const MaxStat att = max_from(attacker_var, first_start);

    // Pseudo-cohorts of the attacker cohort's size; at least one group even
    // when normals are scarce.
    const int group_size = std::min(static_cast<int>(attackers.size()),
                                    static_cast<int>(normals.size()));
    const int group_count = std::max(static_cast<int>(normals.size()) / group_size, 1);

    double baseline_sum = 0.0;
    std::vector<double> baseline_curve;
    for (int g = 0; g < group_count; ++g) {
        const std::size_t begin = static_cast<std::size_t>(g) * group_size;
        const std::size_t count = std::min(static_cast<std::size_t>(group_size),
                                           normals.size() - begin);
        const std::span<const int> group(normals.data() + begin, count);
        const std::vector<double> group_mean = mean_series(series, group);
        const std::vector<double> group_var = windowed_detrended_variance(group_mean, window);
        baseline_sum += max_from(group_var, first_start).value;
        if (baseline_curve.empty()) {
            baseline_curve.assign(group_var.size(), 0.0);
        }
        for (std::size_t i = 0; i < group_var.size(); ++i) {
            baseline_curve[i] += group_var[i] / static_cast<double>(group_count);
        }
    }
    const double baseline = baseline_sum / static_cast<double>(group_count);

    const double floor = variance_floor(series_scale(attacker_mean));
    OscillationResult result = compare_stats(att.value, baseline, kappa, floor);
    result.attacker_curve = attacker_var;
    result.normal_curve = std::move(baseline_curve);
    result.curve_first_tick = window - 1;
    return result;
}

std::string to_string(DynamicsShape shape) {
    switch (shape) {
    case DynamicsShape::MonotoneDecrease: return "MonotoneDecrease";
    case DynamicsShape::SpikeThenDecrease: return "SpikeThenDecrease";
    case DynamicsShape::SpikeThenPlateau: return "SpikeThenPlateau";
    case DynamicsShape::Oscillating: return "Oscillating";
    case DynamicsShape::Inconclusive: return "Inconclusive";
    }
    return "?";
}

DynamicsVerdict classify_dynamics(std::span<const double> attacker_means,
                                  int attack_tick, const ClassifyThresholds& thresholds,
                                  const OscillationResult& oscillation) {
    const int length = static_cast<int>(attacker_means.size());
    const int last_tick = length - 1;
    if (attack_tick < 1 || attack_tick >= last_tick) {
        throw std::invalid_argument("series must cover pre- and post-attack ranges");
    }

    DynamicsVerdict verdict;
    verdict.oscillating = oscillation.oscillating;
    verdict.oscillation_ratio = oscillation.ratio;

    double pre_sum = 0.0;
    for (int t = 0; t < attack_tick; ++t) {
        pre_sum += attacker_means[static_cast<std::size_t>(t)];
    }
    verdict.pre_attack_mean = pre_sum / static_cast<double>(attack_tick);

    verdict.peak_tick = attack_tick;
    verdict.peak_value = attacker_means[static_cast<std::size_t>(attack_tick)];
    const int spike_end = std::min(attack_tick + thresholds.spike_window, last_tick);
    for (int t = attack_tick; t <= spike_end; ++t) {
        if (attacker_means[static_cast<std::size_t>(t)] > verdict.peak_value) {
            verdict.peak_value = attacker_means[static_cast<std::size_t>(t)];
            verdict.peak_tick = t;
        }
    }

    const double slope_eps = thresholds.slope_eps_fraction * verdict.pre_attack_mean /
                             static_cast<double>(thresholds.slope_eps_span);

    if (oscillation.oscillating) {
        verdict.shape = DynamicsShape::Oscillating;
        verdict.post_attack_slope = trend_slope(attacker_means, attack_tick, last_tick);
        return verdict;
    }

    const bool spike = verdict.peak_value > thresholds.spike_factor * verdict.pre_attack_mean;
    if (spike) {
        // Judge the settled behavior, past the ramp around the spike.
        int post_from = attack_tick + thresholds.post_spike_offset;
        if (post_from + 2 > last_tick) {
            post_from = std::max(attack_tick, last_tick - 2);
        }
        const double slope = trend_slope(attacker_means, post_from, last_tick);
        verdict.post_attack_slope = slope;
        if (slope < -slope_eps) {
            verdict.shape = DynamicsShape::SpikeThenDecrease;
        } else if (slope <= slope_eps) {
            verdict.shape = DynamicsShape::SpikeThenPlateau;
        } else {
            verdict.shape = DynamicsShape::Inconclusive;
        }
        return verdict;
    }

    const double slope = trend_slope(attacker_means, attack_tick, last_tick);
    verdict.post_attack_slope = slope;
    verdict.shape = slope < -slope_eps ? DynamicsShape::MonotoneDecrease
                                       : DynamicsShape::Inconclusive;
    return verdict;
}

DynamicsVerdict classify_dynamics(std::span<const double> attacker_means,
                                  std::span<const double> normal_means,
                                  int attack_tick, const ClassifyThresholds& thresholds) {
    const OscillationResult oscillation = detect_oscillation(
        attacker_means, normal_means, attack_tick, thresholds.window, thresholds.kappa);
    return classify_dynamics(attacker_means, attack_tick, thresholds, oscillation);
}

DynamicsVerdict classify_run(const TrustTimeSeries& series, const Roster& roster,
                             int attack_tick, const ClassifyThresholds& thresholds) {
    const OscillationResult oscillation = detect_oscillation_groups(
        series, roster, attack_tick, thresholds.window, thresholds.kappa, thresholds.settle);
    const std::vector<double> attacker_means = series.attacker_means();
    return classify_dynamics(attacker_means, attack_tick, thresholds, oscillation);
}

} // namespace c2csim
