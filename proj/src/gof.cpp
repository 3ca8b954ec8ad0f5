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

#include "rcstats/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rcstats/error.hpp"
#include "rcstats/kfactor.hpp"
#include "rcstats/parallel.hpp"
#include "rcstats/rng.hpp"

namespace rcstats
{

std::string_view to_string(NullFamily f) noexcept
{
    return f == NullFamily::rayleigh ? "rayleigh" : "rician";
}

NullFamily parse_null_family(std::string_view s)
{
    if (s == "rayleigh")
        return NullFamily::rayleigh;
    if (s == "rician")
        return NullFamily::rician;
    throw ValidationError("unknown null family '" + std::string(s) + "' (expected rayleigh or rician)");
}

void GofConfig::validate() const
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ValidationError("GoF: alpha must lie in (0, 1)");
    if (!(mctol > 0.0) || !std::isfinite(mctol))
        throw ValidationError("GoF: mctol must be > 0");
    if (batch_size == 0)
        throw ValidationError("GoF: batch size must be >= 1");
}

double ad_statistic(std::span<const double> u)
{
    const std::size_t n = u.size();
    if (n < 2)
        throw ValidationError("AD statistic needs n >= 2");
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!(u[i] > 0.0 && u[i] < 1.0))
            throw DomainError("AD statistic: probabilities must lie strictly inside (0, 1)");
        if (i > 0 && u[i] < u[i - 1])
            throw ValidationError("AD statistic: probabilities must be sorted ascending");
    }
    // The sum is O(n^2) while A^2 is O(1); a double accumulator loses ~1e-12.
    long double s = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
        s += static_cast<long double>(2 * i + 1) * (std::log(u[i]) + std::log1p(-u[n - 1 - i]));
    return static_cast<double>(-static_cast<long double>(n) - s / static_cast<long double>(n));
}

double ad_statistic(std::span<const double> cdf, std::span<const double> sf)
{
    const std::size_t n = cdf.size();
    if (n < 2 || sf.size() != n)
        throw ValidationError("AD statistic needs n >= 2 matching CDF and survival values");
    long double s = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double lo = cdf[i];
        const double hi = sf[n - 1 - i];
        if (!(lo >= 0.0 && lo <= 1.0) || !(hi >= 0.0 && hi <= 1.0))
            throw DomainError("AD statistic: probabilities outside [0, 1]");
        s += static_cast<long double>(2 * i + 1) *
             (std::log(std::max(lo, ad_clamp_low)) + std::log(std::max(hi, ad_clamp_high_tail)));
    }
    return static_cast<double>(-static_cast<long double>(n) - s / static_cast<long double>(n));
}

RicianParams fit_null_params(std::span<const std::complex<double>> samples, NullFamily family)
{
    if (samples.size() < 3)
        throw ValidationError("GoF fit needs at least 3 samples");
    double omega = 0.0;
    for (const auto &v : samples)
        omega += std::norm(v);
    omega /= static_cast<double>(samples.size());
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw DegenerateDataError("GoF fit: samples have zero or non-finite power");
    if (family == NullFamily::rayleigh)
        return RicianParams::from_k_omega(0.0, omega);
    const double k = estimate_k(samples, samples.size()).k_hat_linear;
    return RicianParams::from_k_omega(std::max(0.0, k), omega);
}

namespace
{

double ad_of_envelopes(std::vector<double> &env, const RicianParams &params, std::vector<double> &cdf,
                       std::vector<double> &sf)
{
    std::sort(env.begin(), env.end());
    cdf.resize(env.size());
    sf.resize(env.size());
    rician_cdf_sorted(env, params, cdf, sf);
    return ad_statistic(cdf, sf);
}

double replicate_statistic(const RicianParams &fitted, NullFamily family, std::size_t n, std::uint64_t seed,
                           std::size_t r)
{
    CounterRng rng(seed, stream_id({stream_tag::gof_replicate, r}));
    std::vector<std::complex<double>> rep(n);
    sample_complex(fitted, rng, rep);
    const RicianParams refit = fit_null_params(rep, family);
    std::vector<double> env(n), cdf, sf;
    for (std::size_t i = 0; i < n; ++i)
        env[i] = std::abs(rep[i]);
    return ad_of_envelopes(env, refit, cdf, sf);
}

} // namespace

double ad_statistic_for(std::span<const std::complex<double>> samples, const RicianParams &params)
{
    std::vector<double> env(samples.size()), cdf, sf;
    for (std::size_t i = 0; i < samples.size(); ++i)
        env[i] = std::abs(samples[i]);
    return ad_of_envelopes(env, params, cdf, sf);
}

GofResult bootstrap_ad_test(std::span<const std::complex<double>> samples, const GofConfig &cfg)
{
    cfg.validate();
    GofResult res;
    res.family = cfg.family;
    res.fitted = fit_null_params(samples, cfg.family);
    res.a2_statistic = ad_statistic_for(samples, res.fitted);

    const std::size_t n = samples.size();
    std::vector<double> batch(cfg.batch_size);
    std::size_t b = 0;
    std::size_t hits = 0;
    while (true)
    {
        parallel_for(cfg.batch_size,
                     [&](std::size_t j) { batch[j] = replicate_statistic(res.fitted, cfg.family, n, cfg.seed, b + j); });
        for (double a2 : batch)
            if (a2 >= res.a2_statistic)
                ++hits;
        b += cfg.batch_size;
        const double p = static_cast<double>(hits) / static_cast<double>(b);
        if (b >= cfg.min_bootstrap && std::sqrt(p * (1.0 - p) / static_cast<double>(b)) < cfg.mctol)
            break;
    }
    res.n_bootstrap_used = b;
    res.p_value = static_cast<double>(hits) / static_cast<double>(b);
    res.reject = res.p_value < cfg.alpha;
    return res;
}

std::vector<PassRatePoint> simulate_pass_rate_curve(std::span<const double> k_points_db, std::size_t n_samples,
                                                    std::size_t n_trials, const GofConfig &cfg)
{
    cfg.validate();
    if (n_samples < 3 || n_trials == 0)
        throw ValidationError("pass-rate simulation needs n_samples >= 3 and n_trials >= 1");
    for (double k : k_points_db)
        if (std::isnan(k) || k == std::numeric_limits<double>::infinity())
            throw ValidationError("pass-rate simulation: K grid values must be finite or -inf");

    std::vector<PassRatePoint> out;
    for (double k_db : k_points_db)
    {
        const RicianParams p = std::isinf(k_db) ? RicianParams::from_k_omega(0.0, 1.0)
                                                : RicianParams::from_k_db_omega(k_db, 1.0);
        std::vector<unsigned char> pass(n_trials);
        parallel_for(n_trials, [&](std::size_t j) {
            CounterRng rng(cfg.seed, stream_id({stream_tag::pass_rate_dataset, j}));
            std::vector<std::complex<double>> data(n_samples);
            sample_complex(p, rng, data);
            GofConfig c = cfg;
            c.seed = stream_id({cfg.seed, stream_tag::pass_rate_dataset, j});
            pass[j] = bootstrap_ad_test(data, c).reject ? 0 : 1;
        });
        std::size_t passed = 0;
        for (unsigned char v : pass)
            passed += v;
        out.push_back({k_db, static_cast<double>(passed) / static_cast<double>(n_trials), n_trials});
    }
    return out;
}

} // namespace rcstats
