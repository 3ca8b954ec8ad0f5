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

#include <cstdint>
#include <optional>
#include <span>

#include "rcstats/rician.hpp"
#include "rcstats/sweep.hpp"

namespace rcstats
{

/// Phase of the deterministic component across frequency.
struct PhaseLaw
{
    enum class Kind
    {
        constant,
        linear_delay
    };

    Kind kind = Kind::constant;
    double phase0_rad = 0.0;
    double delay_s = 0.0; ///< linear_delay: phase(f) = phase0 - 2*pi*f*delay

    double at(double f_hz) const noexcept;
};

/*!
 * Synthetic hybrid-chamber case.
 *
 * Powers follow p_d(f) = p_d(f0) (f/f0)^n_d and p_s(f) = p_s(f0) (f/f0)^n_s,
 * in |S21|^2 units. The optional noise floor is additive receiver noise of
 * mean power 10^(dBm/10) in the same units, i.e. referenced to a lossless
 * 0 dBm link, matching how the noise level of the instrument is measured.
 */
struct SynthScenario
{
    RicianParams params_at_f0 = RicianParams::from_k_omega(1.0, 1.0);
    double f0_hz = default_f0_hz;
    double n_d = 0.0;
    double n_s = 0.0;
    PhaseLaw phase_d{};
    std::optional<double> noise_floor_dbm;
    CaseConfig config{};

    /// Parameters at frequency f (noise excluded).
    RicianParams params_at(double f_hz) const;
};

/*!
 * Generates a sweep by drawing one sample per (frequency, stirrer position).
 *
 * Each cell uses its own counter-based stream keyed by
 * (master_seed, freq_index, sp_index): the stirred part is the first complex
 * normal of that stream and the receiver noise the second, so the output is
 * bit-identical for any evaluation order or thread count.
 *
 * Throws ValidationError for a non-increasing grid, n_sp == 0, or f0 outside
 * the grid span.
 */
ComplexSweep synth_sweep(const SynthScenario &scenario, std::span<const double> freqs_hz, std::size_t n_sp,
                         std::uint64_t master_seed);

} // namespace rcstats
