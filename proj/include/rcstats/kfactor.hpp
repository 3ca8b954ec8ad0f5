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
#include <optional>
#include <span>
#include <vector>

#include "rcstats/power_snr.hpp"
#include "rcstats/sweep.hpp"

namespace rcstats
{

struct KEstimate
{
    double k_hat_linear = 0.0; ///< unbiased estimate, may be negative
    double k2_hat = 0.0;       ///< |<S>|^2 / s^2, sample variance with n - 1 divisor
    std::size_t n_eff = 0;
    bool excluded = false;     ///< k_hat_linear < 0
    std::optional<double> ci_low_db;
    std::optional<double> ci_high_db;
};

/// Scales samples by sqrt(omega_hat / <|S|^2>) so their mean power equals omega_hat.
/// Non-positive omega_hat throws ValidationError, zero-power input DegenerateDataError.
std::vector<std::complex<double>> normalize_s21(std::span<const std::complex<double>> samples, double omega_hat_mw);

/*!
 * Unbiased K-factor estimator:
 *   K2 = |<S>|^2 / s^2,   s^2 = sum |S - <S>|^2 / (n - 1),
 *   K  = (N-2)/(N-1) * K2 - 1/N,   N = n_eff.
 * Means are taken over all n provided samples. With the n - 1 divisor in s^2
 * the correction factor removes the bias exactly for independent Gaussian
 * scatter (N = n); the 1/n variance would leave a factor n/(n-1) on K.
 * The result is invariant to a common complex scale of the samples.
 *
 * Throws ValidationError for n_eff < 3 or fewer than 2 samples, and
 * DegenerateDataError when the stirred variance vanishes (pure LOS).
 */
KEstimate estimate_k(std::span<const std::complex<double>> samples, std::size_t n_eff);

/// Equal-tail interval of the estimator distribution.
struct KInterval
{
    double low_linear = 0.0;
    double high_linear = 0.0;
    double low_db = 0.0;  ///< -inf when low_linear <= 0
    double high_db = 0.0;
    bool lower_saturated = false; ///< lower percentile non-positive

    bool contains_linear(double k) const noexcept { return k >= low_linear && k <= high_linear; }
};

struct KIntervalOptions
{
    double level = 0.95;
    std::size_t trials = 20000;
    std::uint64_t seed = 0;
};

/*!
 * Parametric Monte Carlo interval for the estimator at K = k_linear:
 * simulates `trials` datasets of n_eff Rician samples (unit power), applies
 * estimate_k to each and returns the (1-level)/2 and (1+level)/2 percentiles
 * (linear interpolation between order statistics). Negative draws stay in
 * the sample, so the lower bound saturates (-inf dB) at small K.
 *
 * Trial t always uses stream (seed, t), so intervals at different K share
 * random numbers and vary smoothly with K. Requires k_linear >= 0 and
 * trials >= 10^4.
 */
KInterval k_ci(double k_linear, std::size_t n_eff, const KIntervalOptions &options = {});

/// The same interval expressed only in dB.
std::pair<double, double> k_ci_db(double k_linear, std::size_t n_eff, const KIntervalOptions &options = {});

/// Percentile intervals tabulated on a uniform K[dB] grid, interpolated linearly in dB.
class KIntervalTable
{
public:
    KIntervalTable(double k_db_min, double k_db_max, double step_db, std::size_t n_eff,
                   const KIntervalOptions &options = {});

    /// Interval at k_linear; k_linear <= 0 maps to the K = 0 interval and
    /// values outside the grid are clamped to the end nodes.
    KInterval operator()(double k_linear) const;

    std::size_t size() const noexcept { return k_db_.size(); }

private:
    std::vector<double> k_db_;
    std::vector<KInterval> nodes_;
    KInterval at_zero_;
};

enum class FsStatus : unsigned char
{
    ok,
    negative_k, ///< excluded: estimate below zero
    degenerate  ///< estimator failed (zero stirred variance, zero power)
};

/*!
 * Per-frequency Rician decomposition of one case.
 * On usable frequencies p_d + p_s = omega and k_hat = p_d / p_s; excluded
 * frequencies carry NaN in all four series.
 */
struct CaseDecomposition
{
    std::vector<double> freqs_hz;
    std::vector<double> omega_mw;
    std::vector<double> p_d_mw;
    std::vector<double> p_s_mw;
    std::vector<double> k_hat;     ///< raw estimates, negative values kept
    std::vector<FsStatus> status;
    std::size_t n_eff = 0;

    bool usable(std::size_t i) const noexcept { return status[i] == FsStatus::ok; }
    std::vector<bool> excluded_mask() const;
    std::size_t n_usable() const noexcept;
    std::size_t n_negative() const noexcept;
};

/*!
 * Per frequency: omega from the mean received power, K from the normalised
 * S21 samples, then p_d = omega K/(1+K) and p_s = omega/(1+K). Estimator
 * failures mark the frequency degenerate instead of aborting.
 */
CaseDecomposition decompose_case(const ComplexSweep &sweep, const LinkBudget &budget, std::size_t n_eff);

} // namespace rcstats
