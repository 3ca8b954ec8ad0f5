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

#include "rcstats/independence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rcstats/error.hpp"

namespace rcstats
{

std::string_view to_string(ThresholdMode m) noexcept
{
    return m == ThresholdMode::fixed_1_over_e ? "fixed_1_over_e" : "significance_95";
}

ThresholdMode parse_threshold_mode(std::string_view s)
{
    if (s == "fixed_1_over_e")
        return ThresholdMode::fixed_1_over_e;
    if (s == "significance_95")
        return ThresholdMode::significance_95;
    throw ValidationError("unknown threshold mode '" + std::string(s) + "' (expected fixed_1_over_e or significance_95)");
}

double correlation_threshold(ThresholdMode mode, std::size_t n)
{
    if (mode == ThresholdMode::fixed_1_over_e)
        return std::exp(-1.0);
    if (n < 2)
        throw ValidationError("correlation threshold needs n >= 2");
    // |r|^2 of independent circular Gaussians is ~Exp(mean 1/n); 5% over n/2 distinct lags.
    const double m = std::max<double>(1.0, std::floor(static_cast<double>(n) / 2.0));
    return std::sqrt(std::log(20.0 * m) / static_cast<double>(n));
}

namespace
{

struct Centered
{
    std::vector<std::complex<double>> x;
    double energy = 0.0;
};

Centered center(std::span<const std::complex<double>> samples)
{
    const std::size_t n = samples.size();
    if (n < 2)
        throw ValidationError("circular correlation needs at least 2 samples");
    std::complex<double> mean = 0.0;
    for (const auto &v : samples)
        mean += v;
    mean /= static_cast<double>(n);

    Centered c;
    c.x.resize(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        c.x[i] = samples[i] - mean;
        c.energy += std::norm(c.x[i]);
        scale += std::norm(samples[i]);
    }
    if (!(c.energy > 64.0 * std::numeric_limits<double>::epsilon() * scale) || !std::isfinite(c.energy))
        throw DegenerateDataError("circular correlation: samples have zero variance (non-stirred data)");
    return c;
}

double corr_at(const Centered &c, std::size_t lag)
{
    const std::size_t n = c.x.size();
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t j = i + lag;
        if (j >= n)
            j -= n;
        acc += c.x[i] * std::conj(c.x[j]);
    }
    return std::min(1.0, std::abs(acc) / c.energy);
}

} // namespace

double circular_corr(std::span<const std::complex<double>> samples, std::size_t lag)
{
    if (lag < 1 || lag >= samples.size())
        throw ValidationError("circular correlation: lag must be in [1, n-1]");
    return corr_at(center(samples), lag);
}

std::vector<double> circular_corr_all(std::span<const std::complex<double>> samples)
{
    const Centered c = center(samples);
    const std::size_t n = c.x.size();
    std::vector<double> out(n - 1);
    // |r(lag)| = |r(n - lag)|, so only half the lags are summed.
    for (std::size_t lag = 1; lag <= n / 2; ++lag)
    {
        out[lag - 1] = corr_at(c, lag);
        out[n - lag - 1] = out[lag - 1];
    }
    return out;
}

IndependenceResult estimate_n_eff(std::span<const std::complex<double>> samples, ThresholdMode mode)
{
    IndependenceResult r;
    r.n = samples.size();
    r.mode = mode;
    r.small_sample = r.n < 100;
    r.per_lag_corr = circular_corr_all(samples);
    r.threshold_used = correlation_threshold(mode, r.n);
    r.n_eff = r.n;
    r.recurrence_threshold = r.threshold_used;

    const auto exceeds = [&](std::size_t lag) { return r.per_lag_corr[lag - 1] >= r.threshold_used; };
    for (std::size_t lag = 1; lag < r.n; ++lag)
        if (exceeds(lag))
        {
            r.first_exceeding_lag = lag;
            break;
        }
    if (!r.first_exceeding_lag)
        return r;

    std::size_t run = 0;
    while (run + 1 < r.n && exceeds(run + 1))
        ++run;
    r.correlation_length = std::min(r.n, run + 1);

    // Sample correlations of a correlated sequence spread wider than the iid
    // threshold assumes (Bartlett: var ~ (1 + 2 sum rho_k^2) / n), so the
    // recurrence search uses the inflated threshold.
    double inflation = 1.0;
    for (std::size_t lag = 1; lag < r.correlation_length; ++lag)
        inflation += 2.0 * r.per_lag_corr[lag - 1] * r.per_lag_corr[lag - 1];
    r.recurrence_threshold = std::min(1.0, r.threshold_used * std::sqrt(inflation));
    for (std::size_t lag = r.correlation_length + 1; lag <= r.n / 2; ++lag)
        if (r.per_lag_corr[lag - 1] >= r.recurrence_threshold)
        {
            r.recurrence_lag = lag;
            break;
        }

    const std::size_t span = r.recurrence_lag ? *r.recurrence_lag : r.n;
    r.n_eff = std::max<std::size_t>(1, span / r.correlation_length);
    return r;
}

} // namespace rcstats
