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

#include "rcstats/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rcstats/error.hpp"
#include "rcstats/parallel.hpp"
#include "rcstats/rng.hpp"

namespace rcstats
{

QuantityStats quantity_stats(std::span<const double> linear, const std::vector<bool> &excluded)
{
    if (!excluded.empty() && excluded.size() != linear.size())
        throw ValidationError("quantity stats: mask length differs from series");
    std::vector<double> v;
    for (std::size_t i = 0; i < linear.size(); ++i)
        if (excluded.empty() || !excluded[i])
            v.push_back(linear[i]);
    if (v.empty())
        throw NumericalError("quantity stats: every frequency is excluded");

    const double n = static_cast<double>(v.size());
    double mean = 0.0;
    for (double x : v)
        mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : v)
        ss += (x - mean) * (x - mean);

    QuantityStats s;
    s.mean_db = linear_to_db(mean);
    s.cv = v.size() > 1 ? std::sqrt(ss / (n - 1.0)) / mean : 0.0;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    s.dr_db = linear_to_db(*hi) - linear_to_db(*lo);
    return s;
}

namespace
{

std::vector<double> to_db(const std::vector<double> &linear, const std::vector<bool> &excluded)
{
    std::vector<double> out(linear.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < linear.size(); ++i)
        if (!excluded[i])
            out[i] = linear_to_db(linear[i]);
    return out;
}

} // namespace

CaseAnalysis analyze_case(const ComplexSweep &sweep, const LinkBudget &budget, const std::optional<NoiseProfile> &noise,
                          const AnalysisOptions &options)
{
    budget.validate_against(sweep.freqs_hz());
    if (noise)
        noise->validate_against(sweep.freqs_hz());
    if (options.gof_stride == 0)
        throw ValidationError("analysis: gof stride must be >= 1");

    const std::size_t n_fs = sweep.n_fs();
    const std::size_t n_sp = sweep.n_sp();
    CaseAnalysis out;
    CaseReport &rep = out.report;
    CaseSeries &ser = out.series;
    rep.config = sweep.config();
    rep.n_fs = n_fs;
    rep.n_sp = n_sp;
    rep.threshold_mode = options.threshold_mode;
    rep.threshold_used = correlation_threshold(options.threshold_mode, n_sp);

    // Independence per frequency; zero-variance frequencies are left to the decomposition.
    ser.n_eff_per_fs.assign(n_fs, 0);
    parallel_for(n_fs, [&](std::size_t fi) {
        try
        {
            ser.n_eff_per_fs[fi] = estimate_n_eff(sweep.frequency_samples(fi), options.threshold_mode).n_eff;
        }
        catch (const NumericalError &)
        {
            ser.n_eff_per_fs[fi] = 0;
        }
    });
    std::size_t n_eff = n_sp;
    for (std::size_t v : ser.n_eff_per_fs)
        if (v > 0)
            n_eff = std::min(n_eff, v);
    if (n_eff < 3)
        throw NumericalError("analysis: fewer than 3 independent samples per frequency (n_eff = " +
                             std::to_string(n_eff) + ")");
    rep.n_eff = n_eff;

    ser.decomposition = decompose_case(sweep, budget, n_eff);
    const CaseDecomposition &d = ser.decomposition;
    const std::vector<bool> mask = d.excluded_mask();
    const std::size_t n_usable = d.n_usable();
    if (n_usable == 0)
        throw NumericalError("analysis: every frequency is excluded (negative or degenerate K estimate)");
    if (n_usable < 2)
        throw NumericalError("analysis: fewer than two usable frequencies, frequency fits are undefined");

    rep.excluded_fs_fraction = static_cast<double>(d.n_negative()) / static_cast<double>(n_fs);
    rep.degenerate_fs_fraction =
        static_cast<double>(n_fs - n_usable - d.n_negative()) / static_cast<double>(n_fs);

    rep.k = quantity_stats(d.k_hat, mask);
    rep.omega = quantity_stats(d.omega_mw, mask);
    rep.ps = quantity_stats(d.p_s_mw, mask);
    rep.pd = quantity_stats(d.p_d_mw, mask);

    if (noise)
    {
        const PowerMatrix p_rec = received_power_mw(sweep, budget);
        ser.snr_db = snr_per_fs_db(p_rec, *noise);
        rep.snr_avg_db = snr_avg_db(p_rec, *noise);
        const SnrFractions fr = snr_threshold_fractions(ser.snr_db);
        rep.snr_fraction_5db = fr.at_least_5db;
        rep.snr_fraction_10db = fr.at_least_10db;
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    ser.p_rician.assign(n_fs, nan);
    ser.p_rayleigh.assign(n_fs, nan);
    if (options.run_gof)
    {
        std::vector<std::size_t> tested;
        for (std::size_t fi = 0, k = 0; fi < n_fs; ++fi)
            if (d.usable(fi) && (k++ % options.gof_stride) == 0)
                tested.push_back(fi);

        std::vector<unsigned char> pass_rice(tested.size()), pass_rayl(tested.size());
        parallel_for(tested.size(), [&](std::size_t t) {
            const std::size_t fi = tested[t];
            const auto s = sweep.frequency_samples(fi);
            GofConfig cfg;
            cfg.alpha = options.alpha;
            cfg.mctol = options.mctol;
            cfg.min_bootstrap = options.min_bootstrap;

            cfg.family = NullFamily::rician;
            cfg.seed = stream_id({options.seed, stream_tag::analysis_gof, fi, 1});
            const GofResult rice = bootstrap_ad_test(s, cfg);
            cfg.family = NullFamily::rayleigh;
            cfg.seed = stream_id({options.seed, stream_tag::analysis_gof, fi, 0});
            const GofResult rayl = bootstrap_ad_test(s, cfg);

            ser.p_rician[fi] = rice.p_value;
            ser.p_rayleigh[fi] = rayl.p_value;
            pass_rice[t] = rice.reject ? 0 : 1;
            pass_rayl[t] = rayl.reject ? 0 : 1;
        });
        rep.n_gof_fs = tested.size();
        const auto rate = [&](const std::vector<unsigned char> &v) {
            std::size_t c = 0;
            for (unsigned char x : v)
                c += x;
            return static_cast<double>(c) / static_cast<double>(v.size());
        };
        rep.pr_rician = rate(pass_rice);
        rep.pr_rayleigh = rate(pass_rayl);
    }

    rep.k_fit = fit_loglinear(d.freqs_hz, to_db(d.k_hat, mask), mask, options.f0_hz);
    rep.omega_fit = fit_loglinear(d.freqs_hz, to_db(d.omega_mw, mask), mask, options.f0_hz);
    rep.ps_fit = fit_loglinear(d.freqs_hz, to_db(d.p_s_mw, mask), mask, options.f0_hz);
    rep.pd_fit = fit_loglinear(d.freqs_hz, to_db(d.p_d_mw, mask), mask, options.f0_hz);
    return out;
}

SortedKTable sorted_k_table(std::vector<SortedKEntry> entries)
{
    if (entries.size() < 2)
        throw ValidationError("sorted K table needs at least two cases");
    for (const auto &e : entries)
        if (std::isnan(e.k_db))
            throw ValidationError("sorted K table: case " + e.case_id + " has no K value");
    std::stable_sort(entries.begin(), entries.end(),
                     [](const SortedKEntry &a, const SortedKEntry &b) { return a.k_db < b.k_db; });

    SortedKTable t;
    t.entries = std::move(entries);
    double sum = 0.0;
    for (std::size_t i = 1; i < t.entries.size(); ++i)
    {
        const double inc = t.entries[i].k_db - t.entries[i - 1].k_db;
        t.increments_db.push_back(inc);
        sum += inc;
        t.max_increment_db = std::max(t.max_increment_db, inc);
    }
    t.mean_increment_db = sum / static_cast<double>(t.increments_db.size());
    return t;
}

SortedKTable sorted_k_table(const std::vector<CaseReport> &reports)
{
    std::vector<SortedKEntry> e;
    for (const auto &r : reports)
        e.push_back({r.config.case_id, r.k.mean_db});
    return sorted_k_table(std::move(e));
}

} // namespace rcstats
