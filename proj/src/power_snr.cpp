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

#include "rcstats/power_snr.hpp"

#include <string>

#include "rcstats/error.hpp"

namespace rcstats
{

namespace
{

void check_grid(std::span<const double> own, std::span<const double> freqs, const char *what)
{
    if (own.size() != freqs.size())
        throw ValidationError(std::string(what) + ": grid has " + std::to_string(own.size()) +
                              " frequencies, sweep has " + std::to_string(freqs.size()));
    for (std::size_t i = 0; i < own.size(); ++i)
        if (std::abs(own[i] - freqs[i]) > 1e-12 * std::abs(freqs[i]))
            throw ValidationError(std::string(what) + ": frequency mismatch at index " + std::to_string(i) +
                                  " (no interpolation is applied; resample the profile first)");
}

void check_finite(std::span<const double> v, const char *what)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i]))
            throw ValidationError(std::string(what) + ": non-finite value at index " + std::to_string(i));
}

} // namespace

LinkBudget LinkBudget::lossless(std::vector<double> freqs_hz, double p_out_dbm)
{
    LinkBudget b;
    const std::size_t n = freqs_hz.size();
    b.freqs_hz = std::move(freqs_hz);
    b.p_out_dbm = p_out_dbm;
    b.l_cal_db.assign(n, 0.0);
    b.l_eff_db.assign(n, 0.0);
    return b;
}

BudgetPoint LinkBudget::at(std::size_t freq_index) const
{
    if (freq_index >= l_cal_db.size() || freq_index >= l_eff_db.size())
        throw ValidationError("link budget: frequency index out of range");
    return {p_out_dbm, l_cal_db[freq_index], l_eff_db[freq_index]};
}

void LinkBudget::validate_against(std::span<const double> freqs) const
{
    check_grid(freqs_hz, freqs, "link budget");
    if (l_cal_db.size() != freqs_hz.size() || l_eff_db.size() != freqs_hz.size())
        throw ValidationError("link budget: loss profiles do not cover the grid");
    if (!std::isfinite(p_out_dbm))
        throw ValidationError("link budget: non-finite source power");
    check_finite(l_cal_db, "link budget l_cal_db");
    check_finite(l_eff_db, "link budget l_eff_db");
}

NoiseProfile NoiseProfile::flat(std::vector<double> freqs_hz, double nl_dbm)
{
    NoiseProfile p;
    p.nl_dbm.assign(freqs_hz.size(), nl_dbm);
    p.freqs_hz = std::move(freqs_hz);
    return p;
}

void NoiseProfile::validate_against(std::span<const double> freqs) const
{
    check_grid(freqs_hz, freqs, "noise profile");
    if (nl_dbm.size() != freqs_hz.size())
        throw ValidationError("noise profile: level count does not match the grid");
    if (!n_noise_samples.empty() && n_noise_samples.size() != freqs_hz.size())
        throw ValidationError("noise profile: sample counts do not match the grid");
    check_finite(nl_dbm, "noise profile nl_dbm");
}

std::span<const double> PowerMatrix::row(std::size_t freq_index) const
{
    if (freq_index >= n_fs)
        throw ValidationError("power matrix: frequency index out of range");
    return std::span<const double>(mw).subspan(freq_index * n_sp, n_sp);
}

double received_power_dbm(double s21_db, const BudgetPoint &budget) noexcept
{
    return budget.p_out_dbm - budget.l_cal_db - budget.l_eff_db + s21_db;
}

PowerMatrix received_power_mw(const ComplexSweep &sweep, const LinkBudget &budget)
{
    budget.validate_against(sweep.freqs_hz());
    PowerMatrix p{sweep.n_fs(), sweep.n_sp(), std::vector<double>(sweep.samples().size())};
    for (std::size_t fi = 0; fi < p.n_fs; ++fi)
    {
        const double gain = db_to_linear(received_power_dbm(0.0, budget.at(fi)));
        const auto s = sweep.frequency_samples(fi);
        for (std::size_t sp = 0; sp < p.n_sp; ++sp)
            p.mw[fi * p.n_sp + sp] = gain * std::norm(s[sp]);
    }
    return p;
}

double omega_estimate(std::span<const double> p_rec_mw)
{
    if (p_rec_mw.empty())
        throw ValidationError("omega estimate: empty power list");
    double sum = 0.0;
    for (double v : p_rec_mw)
    {
        if (!std::isfinite(v) || v < 0.0)
            throw ValidationError("omega estimate: powers must be finite and non-negative");
        sum += v;
    }
    return sum / static_cast<double>(p_rec_mw.size());
}

double noise_level_dbm(std::span<const std::complex<double>> noise_s21)
{
    if (noise_s21.empty())
        throw ValidationError("noise level: no samples");
    double sum = 0.0;
    for (const auto &v : noise_s21)
        sum += std::norm(v);
    if (!std::isfinite(sum))
        throw ValidationError("noise level: non-finite sample");
    if (sum == 0.0)
        throw ValidationError("noise level: all noise samples are zero");
    return linear_to_db(sum / static_cast<double>(noise_s21.size()));
}

NoiseProfile noise_profile_from_samples(std::vector<double> freqs_hz,
                                        const std::vector<std::vector<std::complex<double>>> &samples)
{
    if (samples.size() != freqs_hz.size())
        throw ValidationError("noise profile: one sample list per frequency required");
    validate_frequency_grid(freqs_hz);
    NoiseProfile p;
    p.freqs_hz = std::move(freqs_hz);
    for (const auto &s : samples)
    {
        p.nl_dbm.push_back(noise_level_dbm(s));
        p.n_noise_samples.push_back(s.size());
    }
    return p;
}

double snr_sample_db(double p_rec_dbm, double nl_dbm) noexcept
{
    return p_rec_dbm - nl_dbm;
}

std::vector<double> snr_per_fs_db(const PowerMatrix &p_rec, const NoiseProfile &noise)
{
    if (noise.nl_dbm.size() != p_rec.n_fs)
        throw ValidationError("SNR: noise profile and power grid differ in size");
    std::vector<double> out(p_rec.n_fs);
    for (std::size_t fi = 0; fi < p_rec.n_fs; ++fi)
        out[fi] = snr_sample_db(linear_to_db(omega_estimate(p_rec.row(fi))), noise.nl_dbm[fi]);
    return out;
}

double snr_avg_db(const PowerMatrix &p_rec, const NoiseProfile &noise)
{
    if (noise.nl_dbm.size() != p_rec.n_fs || p_rec.n_fs == 0)
        throw ValidationError("SNR: noise profile and power grid differ in size");
    double signal = 0.0;
    double floor = 0.0;
    for (std::size_t fi = 0; fi < p_rec.n_fs; ++fi)
    {
        signal += omega_estimate(p_rec.row(fi));
        floor += db_to_linear(noise.nl_dbm[fi]);
    }
    return linear_to_db(signal) - linear_to_db(floor);
}

SnrFractions snr_threshold_fractions(std::span<const double> snr_per_fs_db)
{
    return {snr_fraction_at_least(snr_per_fs_db, 5.0), snr_fraction_at_least(snr_per_fs_db, 10.0)};
}

double snr_fraction_at_least(std::span<const double> snr_per_fs_db, double threshold_db)
{
    if (snr_per_fs_db.empty())
        throw ValidationError("SNR fractions: empty series");
    std::size_t hits = 0;
    for (double v : snr_per_fs_db)
        if (v >= threshold_db)
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(snr_per_fs_db.size());
}

} // namespace rcstats
