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

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rcstats/sweep.hpp"

namespace rcstats
{

// Received power, noise level and SNR. Linear power is always mW.

inline double db_to_linear(double db) noexcept;
inline double linear_to_db(double linear) noexcept;

/// Link budget terms at one frequency.
struct BudgetPoint
{
    double p_out_dbm = 0.0;
    double l_cal_db = 0.0;
    double l_eff_db = 0.0;
};

/// Source power and per-frequency losses on the exact sweep grid.
struct LinkBudget
{
    std::vector<double> freqs_hz;
    double p_out_dbm = 10.0;
    std::vector<double> l_cal_db;
    std::vector<double> l_eff_db;

    /// Zero losses on the given grid.
    static LinkBudget lossless(std::vector<double> freqs_hz, double p_out_dbm = 0.0);

    BudgetPoint at(std::size_t freq_index) const;

    /// Sizes consistent and grid identical (relative 1e-12) to freqs; throws ValidationError otherwise.
    void validate_against(std::span<const double> freqs) const;
};

/// Per-frequency noise level of the receiver.
struct NoiseProfile
{
    std::vector<double> freqs_hz;
    std::vector<double> nl_dbm;
    std::vector<std::size_t> n_noise_samples; ///< empty when given as levels

    static NoiseProfile flat(std::vector<double> freqs_hz, double nl_dbm);

    void validate_against(std::span<const double> freqs) const;
};

/// Received power in mW for every (frequency, stirrer position), frequency-major.
struct PowerMatrix
{
    std::size_t n_fs = 0;
    std::size_t n_sp = 0;
    std::vector<double> mw;

    std::span<const double> row(std::size_t freq_index) const;
};

/// P_rec[dBm] = P_out - L_cal - L_eff + S21[dB].
double received_power_dbm(double s21_db, const BudgetPoint &budget) noexcept;

/// Received power of every sample of a sweep.
PowerMatrix received_power_mw(const ComplexSweep &sweep, const LinkBudget &budget);

/// Mean received power in linear units. Empty, negative or non-finite input throws ValidationError.
double omega_estimate(std::span<const double> p_rec_mw);

/// 10 log10 <|S21|^2> of raw noise samples, |S21|^2 read as mW.
double noise_level_dbm(std::span<const std::complex<double>> noise_s21);

/// Noise profile from raw noise samples, one list per frequency.
NoiseProfile noise_profile_from_samples(std::vector<double> freqs_hz,
                                        const std::vector<std::vector<std::complex<double>>> &samples);

/// SNR of one sample: P_rec - NL (dB, may be negative).
double snr_sample_db(double p_rec_dbm, double nl_dbm) noexcept;

/// Per-frequency SNR of the stirrer-averaged power: 10 log10 <P_rec>_SP - NL(f).
std::vector<double> snr_per_fs_db(const PowerMatrix &p_rec, const NoiseProfile &noise);

/// Average SNR: both averages are taken on linear values before the dB conversion.
double snr_avg_db(const PowerMatrix &p_rec, const NoiseProfile &noise);

struct SnrFractions
{
    double at_least_5db = 0.0;
    double at_least_10db = 0.0;
};

/// Fraction of frequencies whose SNR meets 5 dB and 10 dB.
SnrFractions snr_threshold_fractions(std::span<const double> snr_per_fs_db);

/// Fraction meeting an arbitrary threshold.
double snr_fraction_at_least(std::span<const double> snr_per_fs_db, double threshold_db);

// ------------------------------------------------------------------------

inline double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

inline double linear_to_db(double linear) noexcept
{
    return 10.0 * std::log10(linear);
}

} // namespace rcstats
