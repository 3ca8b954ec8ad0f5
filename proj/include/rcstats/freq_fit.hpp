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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rcstats/kfactor.hpp"

namespace rcstats
{

/// y[dB] = a + 10 n log10(f / f0)
struct FitResult
{
    double a = 0.0;     ///< value at f0 (dB or dBm)
    double n = 0.0;     ///< frequency exponent of the linear-unit quantity
    double r2 = 1.0;
    double f0_hz = 0.0;
    std::size_t n_points_used = 0;

    double evaluate(double f_hz) const noexcept;
};

/*!
 * Ordinary least squares of y_db on 10 log10(f/f0) over the frequencies not
 * flagged in `excluded` (empty mask = use all). R^2 = 1 - SS_res/SS_tot, with
 * R^2 = 1 for a constant series. Throws ValidationError with fewer than two
 * usable points, a degenerate regressor, or mismatched lengths.
 */
FitResult fit_loglinear(std::span<const double> freqs_hz, std::span<const double> y_db,
                        const std::vector<bool> &excluded, double f0_hz);

using KIntervalFn = std::function<KInterval(double k_linear)>;

/*!
 * Fraction of usable frequencies whose estimated K (dB) lies outside the
 * estimator interval evaluated at the fitted model K at that frequency.
 */
double ci_coverage_check(std::span<const double> freqs_hz, std::span<const double> k_series_db,
                         const std::vector<bool> &excluded, const FitResult &fit, const KIntervalFn &interval);

} // namespace rcstats
