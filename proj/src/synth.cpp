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

#include "rcstats/synth.hpp"

#include <cmath>
#include <numbers>

#include "rcstats/error.hpp"
#include "rcstats/parallel.hpp"

namespace rcstats
{

double PhaseLaw::at(double f_hz) const noexcept
{
    if (kind == Kind::constant)
        return phase0_rad;
    return phase0_rad - 2.0 * std::numbers::pi * f_hz * delay_s;
}

RicianParams SynthScenario::params_at(double f_hz) const
{
    const double ratio = f_hz / f0_hz;
    const double p_s = params_at_f0.p_s() * std::pow(ratio, n_s);
    if (params_at_f0.is_pure_los())
        return RicianParams::pure_los(params_at_f0.p_d() * std::pow(ratio, n_d));
    return RicianParams::from_powers(params_at_f0.p_d() * std::pow(ratio, n_d), p_s);
}

ComplexSweep synth_sweep(const SynthScenario &scenario, std::span<const double> freqs_hz, std::size_t n_sp,
                         std::uint64_t master_seed)
{
    validate_frequency_grid(freqs_hz);
    if (n_sp == 0)
        throw ValidationError("synth_sweep: n_sp must be >= 1");
    if (!(scenario.f0_hz > 0.0))
        throw ValidationError("synth_sweep: f0 must be > 0");
    if (scenario.f0_hz < freqs_hz.front() || scenario.f0_hz > freqs_hz.back())
        throw ValidationError("synth_sweep: f0 outside the generated grid span");

    const double noise_amplitude =
        scenario.noise_floor_dbm ? std::sqrt(std::pow(10.0, *scenario.noise_floor_dbm / 10.0)) : 0.0;

    const std::size_t n_fs = freqs_hz.size();
    std::vector<std::complex<double>> samples(n_fs * n_sp);
    parallel_for(n_fs, [&](std::size_t fi) {
        const RicianParams p = scenario.params_at(freqs_hz[fi]);
        const std::complex<double> d = std::polar(std::sqrt(p.p_d()), scenario.phase_d.at(freqs_hz[fi]));
        const double stirred = std::sqrt(p.p_s());
        for (std::size_t sp = 0; sp < n_sp; ++sp)
        {
            CounterRng rng(master_seed, stream_id({stream_tag::synth_sweep, fi, sp}));
            std::complex<double> v = d + stirred * rng.complex_normal();
            if (scenario.noise_floor_dbm)
                v += noise_amplitude * rng.complex_normal();
            samples[fi * n_sp + sp] = v;
        }
    });
    return ComplexSweep(std::vector<double>(freqs_hz.begin(), freqs_hz.end()), n_sp, std::move(samples),
                        scenario.config);
}

} // namespace rcstats
