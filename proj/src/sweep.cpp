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

#include "rcstats/sweep.hpp"

#include <cmath>
#include <string>

#include "rcstats/error.hpp"

namespace rcstats
{

void validate_frequency_grid(std::span<const double> freqs_hz)
{
    if (freqs_hz.empty())
        throw ValidationError("frequency grid is empty");
    for (std::size_t i = 0; i < freqs_hz.size(); ++i)
    {
        if (!std::isfinite(freqs_hz[i]))
            throw ValidationError("frequency grid: non-finite value at index " + std::to_string(i));
        if (i > 0 && !(freqs_hz[i] > freqs_hz[i - 1]))
            throw ValidationError("frequency grid not strictly increasing at index " + std::to_string(i));
    }
}

std::vector<double> uniform_grid(double f_start_hz, double f_step_hz, std::size_t n)
{
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = f_start_hz + static_cast<double>(i) * f_step_hz;
    return g;
}

std::vector<double> default_grid()
{
    return uniform_grid(default_f_start_hz, default_f_step_hz, default_n_fs);
}

ComplexSweep::ComplexSweep(std::vector<double> freqs_hz, std::size_t n_sp, std::vector<std::complex<double>> samples,
                           CaseConfig config)
    : freqs_(std::move(freqs_hz)), n_sp_(n_sp), samples_(std::move(samples)), config_(std::move(config))
{
    validate_frequency_grid(freqs_);
    if (n_sp_ == 0)
        throw ValidationError("sweep: n_sp must be >= 1");
    if (samples_.size() != freqs_.size() * n_sp_)
        throw ValidationError("sweep: expected " + std::to_string(freqs_.size() * n_sp_) + " samples (n_fs x n_sp), got " +
                              std::to_string(samples_.size()));
    for (std::size_t i = 0; i < samples_.size(); ++i)
        if (!std::isfinite(samples_[i].real()) || !std::isfinite(samples_[i].imag()))
            throw ValidationError("sweep: non-finite sample at freq_index " + std::to_string(i / n_sp_) +
                                  ", sp_index " + std::to_string(i % n_sp_));
}

std::complex<double> ComplexSweep::at(std::size_t sp_index, std::size_t freq_index) const
{
    if (sp_index >= n_sp_ || freq_index >= freqs_.size())
        throw ValidationError("sweep: index out of range");
    return samples_[freq_index * n_sp_ + sp_index];
}

std::span<const std::complex<double>> ComplexSweep::frequency_samples(std::size_t freq_index) const
{
    if (freq_index >= freqs_.size())
        throw ValidationError("sweep: frequency index out of range");
    return std::span<const std::complex<double>>(samples_).subspan(freq_index * n_sp_, n_sp_);
}

} // namespace rcstats
