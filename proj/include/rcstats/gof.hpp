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
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rcstats/rician.hpp"

namespace rcstats
{

enum class NullFamily
{
    rayleigh,
    rician
};

std::string_view to_string(NullFamily f) noexcept;
NullFamily parse_null_family(std::string_view s);

struct GofConfig
{
    double alpha = 0.05;
    double mctol = 0.01;              ///< target standard error of the bootstrap p-value
    std::size_t min_bootstrap = 1000;
    std::size_t batch_size = 250;     ///< stopping rule evaluated after each full batch
    NullFamily family = NullFamily::rician;
    std::uint64_t seed = 0;

    void validate() const;
};

struct GofResult
{
    double a2_statistic = 0.0;
    double p_value = 1.0;
    bool reject = false;
    std::size_t n_bootstrap_used = 0;
    RicianParams fitted = RicianParams::from_k_omega(0.0, 1.0);
    NullFamily family = NullFamily::rician;
    std::string_view fit_method = "complex-moment K estimator, mean power";
};

// Probabilities passed to the statistic are clamped into [1e-300, 1 - 1e-16].
inline constexpr double ad_clamp_low = 1e-300;
inline constexpr double ad_clamp_high_tail = 1e-16;

/// A^2 = -n - (1/n) sum (2i-1) [ln u_i + ln(1 - u_{n+1-i})] for ascending u in (0,1), n >= 2.
double ad_statistic(std::span<const double> u);

/// Same statistic from separately computed CDF values and survival values (sf_i = 1 - u_i).
double ad_statistic(std::span<const double> cdf, std::span<const double> sf);

/*!
 * Null-model fit from complex samples: Rayleigh sets K = 0, Rician takes K
 * from the unbiased estimator (negative values clamped to 0). Omega is the
 * mean power in both cases.
 */
RicianParams fit_null_params(std::span<const std::complex<double>> samples, NullFamily family);

/// A^2 of complex samples' envelopes against the given parameters.
double ad_statistic_for(std::span<const std::complex<double>> samples, const RicianParams &params);

/*!
 * Parametric-bootstrap Anderson-Darling test for a composite Rayleigh or
 * Rician null. Replicates are drawn from the fitted complex model and re-fit
 * before their statistic is computed. Replicates run in batches; after each
 * batch the p-value p = #(A2* >= A2_obs)/B is checked and the loop stops once
 * B >= min_bootstrap and sqrt(p(1-p)/B) < mctol. Replicate r always uses
 * stream (seed, r), so the result does not depend on scheduling.
 */
GofResult bootstrap_ad_test(std::span<const std::complex<double>> samples, const GofConfig &cfg);

struct PassRatePoint
{
    double k_db = 0.0;
    double pass_rate = 0.0;
    std::size_t n_trials = 0;
};

/*!
 * For each K, generates n_trials fresh datasets of n_samples Rician samples
 * (unit power) and records the fraction in which the bootstrap test does not
 * reject. Dataset j draws from stream (seed, j) at every grid point, so the
 * curve uses common random numbers across K; its bootstrap is seeded from
 * (seed, j) as well.
 */
std::vector<PassRatePoint> simulate_pass_rate_curve(std::span<const double> k_points_db, std::size_t n_samples,
                                                    std::size_t n_trials, const GofConfig &cfg);

} // namespace rcstats
