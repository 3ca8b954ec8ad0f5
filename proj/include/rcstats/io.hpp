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

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rcstats/power_snr.hpp"
#include "rcstats/sweep.hpp"

namespace rcstats
{

// File formats.
//
// Sweep:          CSV "freq_hz,sp_index,s21_re,s21_im" plus a JSON manifest
//                 {schema_version, case_id, config{absorbers,excitation,switch,attenuation},
//                  f_start_hz, f_step_hz, n_fs, n_sp, units}.
// Loss profile:   CSV "freq_hz,l_cal_db,l_eff_db".
// Noise profile:  CSV "freq_hz,nl_dbm" or raw "freq_hz,sample_index,s21_re,s21_im".
// Samples:        CSV "s21_re,s21_im" (one frequency, for the standalone GoF test).
// Series:         CSV "freq_hz,value_db[,excluded]" (standalone fitting).
//
// Numbers are written with 17 significant digits, so every double survives
// a write/read cycle unchanged.

inline constexpr int sweep_schema_version = 1;

struct SweepManifest
{
    int schema_version = sweep_schema_version;
    CaseConfig config{};
    double f_start_hz = 0.0;
    double f_step_hz = 0.0;
    std::size_t n_fs = 0;
    std::size_t n_sp = 0;
    std::string units = "freq_hz: Hz; s21: linear complex (re, im)";

    std::vector<double> grid() const;
};

/// Manifest describing a sweep; the grid must be uniform (relative 1e-9).
SweepManifest manifest_for(const ComplexSweep &sweep);

std::string format_double(double v);

SweepManifest parse_manifest(const std::string &json_text);
std::string manifest_to_json(const SweepManifest &m);

/*!
 * Parses sweep CSV text against a manifest. Rows may come in any order.
 * Errors name the offending line: unparsable or non-finite numbers, a
 * frequency not on the manifest grid, sp_index out of range, duplicated
 * cells, and (after reading) the first missing (frequency, position) cell.
 */
ComplexSweep parse_sweep_csv(std::istream &in, const SweepManifest &manifest);
void write_sweep_csv(std::ostream &out, const ComplexSweep &sweep);

ComplexSweep load_sweep(const std::filesystem::path &csv_path, const SweepManifest &manifest);
ComplexSweep load_sweep(const std::filesystem::path &csv_path, const std::filesystem::path &manifest_path);
void save_sweep(const ComplexSweep &sweep, const std::filesystem::path &csv_path,
                const std::filesystem::path &manifest_path);

LinkBudget parse_loss_profile(std::istream &in, double p_out_dbm);
void write_loss_profile(std::ostream &out, const LinkBudget &budget);
LinkBudget load_loss_profile(const std::filesystem::path &path, double p_out_dbm);

/// Accepts both the level form and the raw-sample form (detected from the header).
NoiseProfile parse_noise_profile(std::istream &in);
void write_noise_profile(std::ostream &out, const NoiseProfile &noise);
NoiseProfile load_noise_profile(const std::filesystem::path &path);

std::vector<std::complex<double>> parse_samples_csv(std::istream &in);

struct Series
{
    std::vector<double> freqs_hz;
    std::vector<double> values_db;
    std::vector<bool> excluded;
};
Series parse_series_csv(std::istream &in);

/// Linear interpolation of a loss profile onto a target grid (explicit preprocessing step).
/// Targets outside the profile span throw ValidationError.
LinkBudget resample_loss_profile(const LinkBudget &profile, std::span<const double> target_freqs_hz);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &content);

} // namespace rcstats
