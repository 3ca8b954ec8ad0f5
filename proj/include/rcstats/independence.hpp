// SPDX-License-Identifier: Apache-2.0
//
// rcstats - Rician channel statistics for hybrid reverberation chamber measurements
// Copyright (C) 2026 The rcstats Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace rcstats
{

enum class ThresholdMode
{
    fixed_1_over_e, ///< 1/e, the usual chamber-standard value for more than 100 samples
    significance_95 ///< 5% family-wise false-alarm level over all distinct lags
};

std::string_view to_string(ThresholdMode m) noexcept;
ThresholdMode parse_threshold_mode(std::string_view s);

/// Correlation threshold for n samples.
double correlation_threshold(ThresholdMode mode, std::size_t n);

struct IndependenceResult
{
    std::size_t n = 0;
    std::size_t n_eff = 0;
    double threshold_used = 0.0;
    ThresholdMode mode = ThresholdMode::fixed_1_over_e;
    std::optional<std::size_t> first_exceeding_lag;
    std::vector<double> per_lag_corr; ///< lags 1 .. n-1
    std::size_t correlation_length = 1; ///< 1 + number of leading lags at or above threshold
    std::optional<std::size_t> recurrence_lag; ///< first lag beyond the correlation length reaching recurrence_threshold, <= n/2
    double recurrence_threshold = 0.0; ///< threshold_used scaled by sqrt(1 + 2 sum_{k<L} r_k^2)
    bool small_sample = false;        ///< n < 100: threshold calibration not guaranteed
};

/*!
 * Magnitude of the normalised circular-shift correlation at one lag:
 *   |sum_i (x_i - m) conj(x_{(i+lag) mod n} - m)| / sum_i |x_i - m|^2.
 * Requires n >= 2 and 1 <= lag <= n-1; zero variance throws DegenerateDataError.
 */
double circular_corr(std::span<const std::complex<double>> samples, std::size_t lag);

/// All lags 1..n-1 in one pass over the centred data.
std::vector<double> circular_corr_all(std::span<const std::complex<double>> samples);

/*!
 * Number of effectively independent samples.
 *
 * With no lag at or above the threshold n_eff = n. Otherwise the correlation
 * length L is one plus the run of leading lags 1, 2, ... that exceed the
 * threshold, and a recurrence lag R is the first lag in (L, n/2] at or above
 * the threshold widened for the spread of correlations of a length-L
 * process (a repeating stirrer sequence). n_eff = floor(min(n, R) / L).
 */
IndependenceResult estimate_n_eff(std::span<const std::complex<double>> samples,
                                  ThresholdMode mode = ThresholdMode::fixed_1_over_e);

} // namespace rcstats
