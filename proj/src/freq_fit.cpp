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

#include "rcstats/freq_fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rcstats/error.hpp"

namespace rcstats
{

double FitResult::evaluate(double f_hz) const noexcept
{
    return a + 10.0 * n * std::log10(f_hz / f0_hz);
}

FitResult fit_loglinear(std::span<const double> freqs_hz, std::span<const double> y_db,
                        const std::vector<bool> &excluded, double f0_hz)
{
    if (freqs_hz.size() != y_db.size() || (!excluded.empty() && excluded.size() != y_db.size()))
        throw ValidationError("fit: frequency, value and mask lengths differ");
    if (!(f0_hz > 0.0) || !std::isfinite(f0_hz))
        throw ValidationError("fit: f0 must be positive");

    std::vector<double> x;
    std::vector<double> y;
    for (std::size_t i = 0; i < y_db.size(); ++i)
    {
        if (!excluded.empty() && excluded[i])
            continue;
        if (!(freqs_hz[i] > 0.0) || !std::isfinite(y_db[i]))
            throw ValidationError("fit: non-positive frequency or non-finite value at index " + std::to_string(i));
        x.push_back(10.0 * std::log10(freqs_hz[i] / f0_hz));
        y.push_back(y_db[i]);
    }
    if (x.size() < 2)
        throw ValidationError("fit: fewer than two usable points");

    const double m = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        mx += x[i];
        my += y[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (!(sxx > 0.0))
        throw ValidationError("fit: usable frequencies are not distinct");

    FitResult r;
    r.f0_hz = f0_hz;
    r.n_points_used = x.size();
    r.n = sxy / sxx;
    r.a = my - r.n * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        const double e = y[i] - (r.a + r.n * x[i]);
        ss_res += e * e;
    }
    // Exact fits (constant or noiseless series) leave only rounding in both sums.
    const double tiny = 1e-24 * std::max(1.0, my * my) * m;
    if (syy <= tiny)
        r.r2 = 1.0;
    else
        r.r2 = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return r;
}

double ci_coverage_check(std::span<const double> freqs_hz, std::span<const double> k_series_db,
                         const std::vector<bool> &excluded, const FitResult &fit, const KIntervalFn &interval)
{
    if (freqs_hz.size() != k_series_db.size() || (!excluded.empty() && excluded.size() != k_series_db.size()))
        throw ValidationError("CI coverage: frequency, value and mask lengths differ");
    if (!interval)
        throw ValidationError("CI coverage: no interval function");

    std::size_t used = 0;
    std::size_t outside = 0;
    for (std::size_t i = 0; i < k_series_db.size(); ++i)
    {
        if (!excluded.empty() && excluded[i])
            continue;
        if (std::isnan(k_series_db[i]))
            throw ValidationError("CI coverage: NaN K at unmasked index " + std::to_string(i));
        const KInterval ci = interval(std::pow(10.0, fit.evaluate(freqs_hz[i]) / 10.0));
        ++used;
        if (!ci.contains_linear(std::pow(10.0, k_series_db[i] / 10.0)))
            ++outside;
    }
    if (used == 0)
        throw ValidationError("CI coverage: every frequency is masked");
    return static_cast<double>(outside) / static_cast<double>(used);
}

} // namespace rcstats
