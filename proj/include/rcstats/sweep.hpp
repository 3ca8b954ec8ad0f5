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
#include <span>
#include <vector>

#include "rcstats/case_config.hpp"

namespace rcstats
{

/*!
 * Complex S21 samples of one measurement case.
 *
 * Samples are stored frequency-major: the n_sp stirrer-position samples of
 * one frequency are contiguous, so per-frequency statistics see a span.
 * Immutable after construction.
 */
class ComplexSweep
{
public:
    /// Validates: strictly increasing finite grid, samples.size() == n_fs * n_sp,
    /// every sample finite, n_sp >= 1.
    ComplexSweep(std::vector<double> freqs_hz, std::size_t n_sp, std::vector<std::complex<double>> samples,
                 CaseConfig config = {});

    std::size_t n_fs() const noexcept { return freqs_.size(); }
    std::size_t n_sp() const noexcept { return n_sp_; }
    const std::vector<double> &freqs_hz() const noexcept { return freqs_; }
    const CaseConfig &config() const noexcept { return config_; }

    std::complex<double> at(std::size_t sp_index, std::size_t freq_index) const;

    /// The n_sp samples of one frequency.
    std::span<const std::complex<double>> frequency_samples(std::size_t freq_index) const;

    std::span<const std::complex<double>> samples() const noexcept { return samples_; }

    bool operator==(const ComplexSweep &) const = default;

private:
    std::vector<double> freqs_;
    std::size_t n_sp_;
    std::vector<std::complex<double>> samples_;
    CaseConfig config_;
};

/// Throws ValidationError unless the grid is non-empty, finite and strictly increasing.
void validate_frequency_grid(std::span<const double> freqs_hz);

/// f_start + i * f_step for i in [0, n).
std::vector<double> uniform_grid(double f_start_hz, double f_step_hz, std::size_t n);

// Default measurement grid: 24.25-29.5 GHz in 10 MHz steps, 600 stirrer positions.
inline constexpr double default_f_start_hz = 24.25e9;
inline constexpr double default_f_step_hz = 10e6;
inline constexpr std::size_t default_n_fs = 526;
inline constexpr std::size_t default_n_sp = 600;
inline constexpr double default_f0_hz = 27e9;

std::vector<double> default_grid();

} // namespace rcstats
