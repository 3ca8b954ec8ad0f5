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

#include "rcstats/kfactor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rcstats/error.hpp"
#include "rcstats/parallel.hpp"
#include "rcstats/rician.hpp"
#include "rcstats/rng.hpp"

namespace rcstats
{

std::vector<std::complex<double>> normalize_s21(std::span<const std::complex<double>> samples, double omega_hat_mw)
{
    if (samples.empty())
        throw ValidationError("normalize_s21: no samples");
    if (!(omega_hat_mw > 0.0) || !std::isfinite(omega_hat_mw))
        throw ValidationError("normalize_s21: omega_hat must be positive and finite");
    double power = 0.0;
    for (const auto &v : samples)
        power += std::norm(v);
    power /= static_cast<double>(samples.size());
    if (!(power > 0.0))
        throw DegenerateDataError("normalize_s21: samples have zero mean power");
    const double scale = std::sqrt(omega_hat_mw / power);
    std::vector<std::complex<double>> out(samples.begin(), samples.end());
    for (auto &v : out)
        v *= scale;
    return out;
}

KEstimate estimate_k(std::span<const std::complex<double>> samples, std::size_t n_eff)
{
    if (n_eff < 3)
        throw ValidationError("estimate_k: n_eff must be >= 3, got " + std::to_string(n_eff));
    if (samples.size() < 2)
        throw ValidationError("estimate_k: at least 2 samples required");

    const double n = static_cast<double>(samples.size());
    std::complex<double> mean = 0.0;
    for (const auto &v : samples)
        mean += v;
    mean /= n;

    double power = 0.0;
    double var = 0.0;
    for (const auto &v : samples)
    {
        power += std::norm(v);
        var += std::norm(v - mean);
    }
    power /= n;
    var /= n - 1.0;
    if (!std::isfinite(power) || !(var > 64.0 * std::numeric_limits<double>::epsilon() * power))
        throw DegenerateDataError("estimate_k: zero stirred variance (pure line-of-sight data)");

    const double N = static_cast<double>(n_eff);
    KEstimate e;
    e.n_eff = n_eff;
    e.k2_hat = std::norm(mean) / var;
    e.k_hat_linear = (N - 2.0) / (N - 1.0) * e.k2_hat - 1.0 / N;
    e.excluded = e.k_hat_linear < 0.0;
    return e;
}

namespace
{

double percentile(const std::vector<double> &sorted, double q)
{
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double w = pos - static_cast<double>(lo);
    return sorted[lo] + w * (sorted[hi] - sorted[lo]);
}

double to_db_or_neg_inf(double v)
{
    return v > 0.0 ? linear_to_db(v) : -std::numeric_limits<double>::infinity();
}

} // namespace

KInterval k_ci(double k_linear, std::size_t n_eff, const KIntervalOptions &options)
{
    if (!(k_linear >= 0.0) || !std::isfinite(k_linear))
        throw ValidationError("k_ci: K must be finite and >= 0");
    if (options.trials < 10000)
        throw ValidationError("k_ci: at least 10^4 trials required");
    if (!(options.level > 0.0 && options.level < 1.0))
        throw ValidationError("k_ci: level must lie in (0, 1)");
    if (n_eff < 3)
        throw ValidationError("k_ci: n_eff must be >= 3");

    const RicianParams p = RicianParams::from_k_omega(k_linear, 1.0);
    std::vector<double> draws(options.trials);
    parallel_for(options.trials, [&](std::size_t t) {
        CounterRng rng(options.seed, stream_id({stream_tag::k_interval, t}));
        std::vector<std::complex<double>> s(n_eff);
        sample_complex(p, rng, s);
        draws[t] = estimate_k(s, n_eff).k_hat_linear;
    });
    std::sort(draws.begin(), draws.end());

    KInterval ci;
    ci.low_linear = percentile(draws, (1.0 - options.level) / 2.0);
    ci.high_linear = percentile(draws, (1.0 + options.level) / 2.0);
    ci.low_db = to_db_or_neg_inf(ci.low_linear);
    ci.high_db = to_db_or_neg_inf(ci.high_linear);
    ci.lower_saturated = ci.low_linear <= 0.0;
    return ci;
}

std::pair<double, double> k_ci_db(double k_linear, std::size_t n_eff, const KIntervalOptions &options)
{
    const KInterval ci = k_ci(k_linear, n_eff, options);
    return {ci.low_db, ci.high_db};
}

KIntervalTable::KIntervalTable(double k_db_min, double k_db_max, double step_db, std::size_t n_eff,
                               const KIntervalOptions &options)
{
    if (!(step_db > 0.0) || !(k_db_max >= k_db_min) || !std::isfinite(k_db_min) || !std::isfinite(k_db_max))
        throw ValidationError("KIntervalTable: invalid dB grid");
    const auto n = static_cast<std::size_t>(std::floor((k_db_max - k_db_min) / step_db + 1e-9)) + 1;
    for (std::size_t i = 0; i < n; ++i)
    {
        k_db_.push_back(k_db_min + static_cast<double>(i) * step_db);
        nodes_.push_back(k_ci(db_to_linear(k_db_.back()), n_eff, options));
    }
    at_zero_ = k_ci(0.0, n_eff, options);
}

KInterval KIntervalTable::operator()(double k_linear) const
{
    if (!(k_linear > 0.0))
        return at_zero_;
    const double x = linear_to_db(k_linear);
    if (x <= k_db_.front())
        return nodes_.front();
    if (x >= k_db_.back())
        return nodes_.back();

    const auto it = std::upper_bound(k_db_.begin(), k_db_.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - k_db_.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - k_db_[lo]) / (k_db_[hi] - k_db_[lo]);
    const KInterval &a = nodes_[lo];
    const KInterval &b = nodes_[hi];
    const auto lerp = [w](double u, double v) { return u + w * (v - u); };

    KInterval r;
    r.high_linear = (a.high_linear > 0.0 && b.high_linear > 0.0) ? db_to_linear(lerp(a.high_db, b.high_db))
                                                                 : lerp(a.high_linear, b.high_linear);
    r.low_linear = (a.low_linear > 0.0 && b.low_linear > 0.0) ? db_to_linear(lerp(a.low_db, b.low_db))
                                                              : lerp(a.low_linear, b.low_linear);
    r.low_db = to_db_or_neg_inf(r.low_linear);
    r.high_db = to_db_or_neg_inf(r.high_linear);
    r.lower_saturated = r.low_linear <= 0.0;
    return r;
}

std::vector<bool> CaseDecomposition::excluded_mask() const
{
    std::vector<bool> m(status.size());
    for (std::size_t i = 0; i < status.size(); ++i)
        m[i] = status[i] != FsStatus::ok;
    return m;
}

std::size_t CaseDecomposition::n_usable() const noexcept
{
    return static_cast<std::size_t>(std::count(status.begin(), status.end(), FsStatus::ok));
}

std::size_t CaseDecomposition::n_negative() const noexcept
{
    return static_cast<std::size_t>(std::count(status.begin(), status.end(), FsStatus::negative_k));
}

CaseDecomposition decompose_case(const ComplexSweep &sweep, const LinkBudget &budget, std::size_t n_eff)
{
    const PowerMatrix p_rec = received_power_mw(sweep, budget);
    const std::size_t n_fs = sweep.n_fs();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    CaseDecomposition d;
    d.freqs_hz = sweep.freqs_hz();
    d.n_eff = n_eff;
    d.omega_mw.assign(n_fs, nan);
    d.p_d_mw.assign(n_fs, nan);
    d.p_s_mw.assign(n_fs, nan);
    d.k_hat.assign(n_fs, nan);
    d.status.assign(n_fs, FsStatus::degenerate);

    parallel_for(n_fs, [&](std::size_t fi) {
        try
        {
            const double omega = omega_estimate(p_rec.row(fi));
            if (!(omega > 0.0))
                return;
            const auto s = normalize_s21(sweep.frequency_samples(fi), omega);
            const KEstimate k = estimate_k(s, n_eff);
            d.k_hat[fi] = k.k_hat_linear;
            if (k.excluded)
            {
                d.status[fi] = FsStatus::negative_k;
                return;
            }
            d.omega_mw[fi] = omega;
            d.p_d_mw[fi] = omega * k.k_hat_linear / (1.0 + k.k_hat_linear);
            d.p_s_mw[fi] = omega / (1.0 + k.k_hat_linear);
            d.status[fi] = FsStatus::ok;
        }
        catch (const NumericalError &)
        {
            d.status[fi] = FsStatus::degenerate;
        }
    });
    return d;
}

} // namespace rcstats
