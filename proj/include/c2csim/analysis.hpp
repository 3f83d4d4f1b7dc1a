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

#ifndef C2CSIM_ANALYSIS_HPP
#define C2CSIM_ANALYSIS_HPP

#include <span>
#include <string>
#include <vector>

#include "c2csim/roster.hpp"
#include "c2csim/simulation.hpp"

namespace c2csim {

/// Reported instead of infinity when a variance ratio has a zero
/// denominator but a positive numerator.
inline constexpr double kRatioCap = 1e9;

/// Sliding-window sample variance (divisor window - 1). The value at output
/// index i covers series[i .. i + window - 1], i.e. it is aligned to the
/// window's last tick i + window - 1.
///
/// Throws std::invalid_argument("window too large") when the window exceeds
/// the series length, and ("window too small") below two.
std::vector<double> windowed_variance(std::span<const double> series, int window);

/// Like windowed_variance, but the variance of the residuals around the
/// within-window least-squares line (divisor window - 2). A smooth trend
/// scores near zero; jagged movement keeps its amplitude. Window must be at
/// least three.
std::vector<double> windowed_detrended_variance(std::span<const double> series, int window);

/// Ordinary least-squares slope of value against tick on the closed range
/// [from_tick, to_tick]. Requires to_tick > from_tick + 1 and the range to
/// lie inside the series.
double trend_slope(std::span<const double> series, int from_tick, int to_tick);

struct OscillationResult {
    bool oscillating = false;
    /// attacker_stat / normal_stat, capped at kRatioCap; 0 when both are 0.
    double ratio = 0.0;
    double attacker_stat = 0.0;
    double normal_stat = 0.0;
    /// Variance curves over all window positions, for the per-tick CSV.
    /// curve[i] is aligned to tick curve_first_tick + i.
    std::vector<double> attacker_curve;
    std::vector<double> normal_curve;
    int curve_first_tick = 0;
};

/// Variance comparison of the two cohort-mean series: true iff the maximum
/// post-attack windowed variance of the attacker means exceeds kappa times
/// that of the normal means. Positions count as post-attack when the whole
/// window lies at or after attack_tick.
///
/// Note: on simulator output the two cohort means are exact affine mirrors
/// of each other (the trust vector sums to one), which fixes this ratio at
/// (|normals| / |attackers|)^2 whenever there is any movement at all. Use
/// detect_oscillation_groups to classify real runs; this form is the
/// two-series comparison for externally supplied cohort series.
OscillationResult detect_oscillation(std::span<const double> attacker_means,
                                     std::span<const double> normal_means,
                                     int attack_tick, int window, double kappa);

/// Oscillation test on per-node trust series with a matched-size baseline.
///
/// The attacker statistic is the maximum detrended windowed variance of the
/// attacker cohort mean over windows starting at or after
/// attack_tick + settle (skipping the switch-on transient). The baseline is
/// the same statistic averaged over pseudo-cohorts of the same size as the
/// attacker cohort, formed by chunking the normal ids in ascending order.
/// Size-matched averaging cancels idiosyncratic node noise equally on both
/// sides, so coherent group-wide swings stand out.
OscillationResult detect_oscillation_groups(const TrustTimeSeries& series,
                                            const Roster& roster, int attack_tick,
                                            int window, double kappa, int settle);

enum class DynamicsShape {
    MonotoneDecrease,
    SpikeThenDecrease,
    SpikeThenPlateau,
    Oscillating,
    Inconclusive,
};

std::string to_string(DynamicsShape shape);

struct ClassifyThresholds {
    /// Variance window for the oscillation test.
    int window = 10;
    /// Attacker variance must exceed kappa times the baseline.
    double kappa = 2.0;
    /// Ticks after the attack before oscillation windows start.
    int settle = 20;
    /// A spike must appear within this many ticks of the attack.
    int spike_window = 10;
    /// Spike level relative to the pre-attack attacker mean.
    double spike_factor = 1.5;
    /// Slope tolerance: this fraction of the pre-attack attacker mean ...
    double slope_eps_fraction = 0.10;
    /// ... per this many ticks.
    int slope_eps_span = 30;
    /// Post-spike slope is measured from attack_tick + post_spike_offset.
    int post_spike_offset = 20;
};

struct DynamicsVerdict {
    DynamicsShape shape = DynamicsShape::Inconclusive;
    /// OLS slope per tick over the range the decision used.
    double post_attack_slope = 0.0;
    double peak_value = 0.0;
    int peak_tick = 0;
    double oscillation_ratio = 0.0;
    bool oscillating = false;
    double pre_attack_mean = 0.0;
};

/// Decision tree over the attacker cohort means, given an oscillation
/// verdict: oscillation first, then spike detection, then the post-spike or
/// post-attack slope. All thresholds are relative to the series' own scale.
DynamicsVerdict classify_dynamics(std::span<const double> attacker_means,
                                  int attack_tick, const ClassifyThresholds& thresholds,
                                  const OscillationResult& oscillation);

/// Convenience form matching the two-series surface: runs the cohort-mean
/// oscillation test (detect_oscillation) and classifies.
DynamicsVerdict classify_dynamics(std::span<const double> attacker_means,
                                  std::span<const double> normal_means,
                                  int attack_tick, const ClassifyThresholds& thresholds);

/// Run-level classification: matched-group oscillation test plus the
/// decision tree.
DynamicsVerdict classify_run(const TrustTimeSeries& series, const Roster& roster,
                             int attack_tick, const ClassifyThresholds& thresholds);

} // namespace c2csim

#endif
