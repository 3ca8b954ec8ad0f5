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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcstats/freq_fit.hpp"
#include "rcstats/gof.hpp"
#include "rcstats/independence.hpp"
#include "rcstats/kfactor.hpp"
#include "rcstats/power_snr.hpp"
#include "rcstats/sweep.hpp"

namespace rcstats
{

inline constexpr int report_schema_version = 1;

struct AnalysisOptions
{
    ThresholdMode threshold_mode = ThresholdMode::fixed_1_over_e;
    bool run_gof = true;
    double alpha = 0.05;
    double mctol = 0.01;
    std::size_t min_bootstrap = 1000;
    std::size_t gof_stride = 1; ///< test every gof_stride-th usable frequency
    double f0_hz = default_f0_hz;
    std::uint64_t seed = 0;
};

/// Frequency statistics of one per-FS quantity over usable frequencies.
struct QuantityStats
{
    double mean_db = 0.0; ///< 10 log10 of the linear mean (dB for K, dBm for powers)
    double cv = 0.0;      ///< sample std / mean of the linear series
    double dr_db = 0.0;   ///< max - min of the dB series
};

/// Mean, CV and DR of a linear-unit series restricted to usable entries.
QuantityStats quantity_stats(std::span<const double> linear, const std::vector<bool> &excluded);

struct CaseReport
{
    int schema_version = report_schema_version;
    CaseConfig config{};
    std::size_t n_fs = 0;
    std::size_t n_sp = 0;
    std::size_t n_eff = 0;
    ThresholdMode threshold_mode = ThresholdMode::fixed_1_over_e;
    double threshold_used = 0.0;

    QuantityStats k{};
    QuantityStats omega{};
    QuantityStats ps{};
    QuantityStats pd{};

    std::optional<double> pr_rician;   ///< fraction in [0,1]
    std::optional<double> pr_rayleigh;
    std::size_t n_gof_fs = 0;

    std::optional<double> snr_avg_db;
    std::optional<double> snr_fraction_5db;
    std::optional<double> snr_fraction_10db;

    double excluded_fs_fraction = 0.0;   ///< negative-K frequencies / n_fs
    double degenerate_fs_fraction = 0.0; ///< estimator failures / n_fs

    FitResult k_fit{};
    FitResult omega_fit{};
    FitResult ps_fit{};
    FitResult pd_fit{};
};

/// Plot-ready per-frequency series behind a report.
struct CaseSeries
{
    CaseDecomposition decomposition;
    std::vector<std::size_t> n_eff_per_fs;
    std::vector<double> snr_db;              ///< empty without a noise profile
    std::vector<double> p_rician;            ///< NaN where not tested
    std::vector<double> p_rayleigh;
};

struct CaseAnalysis
{
    CaseReport report;
    CaseSeries series;
};

/*!
 * Full per-case pipeline: sample independence per frequency (the case uses
 * the minimum n_eff), Rician decomposition with negative-K exclusion, SNR
 * statistics, Rayleigh and Rician bootstrap tests per frequency, and the
 * four log-frequency fits. Frequencies excluded for negative K enter none of
 * the averages, CVs, DRs or fits.
 *
 * Throws ValidationError for misaligned grids and NumericalError when no
 * frequency survives the exclusion.
 */
CaseAnalysis analyze_case(const ComplexSweep &sweep, const LinkBudget &budget, const std::optional<NoiseProfile> &noise,
                          const AnalysisOptions &options = {});

struct SortedKEntry
{
    std::string case_id;
    double k_db = 0.0;
};

struct SortedKTable
{
    std::vector<SortedKEntry> entries; ///< ascending K
    std::vector<double> increments_db; ///< entries[i+1] - entries[i]
    double mean_increment_db = 0.0;
    double max_increment_db = 0.0;
};

/// Cases sorted by frequency-averaged K with successive increments. Needs >= 2 entries.
SortedKTable sorted_k_table(std::vector<SortedKEntry> entries);
SortedKTable sorted_k_table(const std::vector<CaseReport> &reports);

} // namespace rcstats
