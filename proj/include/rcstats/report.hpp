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

#include <string>
#include <string_view>
#include <vector>

#include "rcstats/analysis.hpp"

namespace rcstats
{

enum class ReportFormat
{
    json,
    csv
};

ReportFormat parse_report_format(std::string_view s);

/// Fixed CSV column order. The first columns follow the per-case summary
/// table (K, Omega, Ps, Pd statistics, pass rates, SNR, exclusions); the
/// remaining ones carry every other numeric field of CaseReport.
const std::vector<std::string> &report_csv_columns();

std::string emit_report_json(const std::vector<CaseReport> &reports);
std::string emit_report_csv(const std::vector<CaseReport> &reports);
std::string emit_report(const std::vector<CaseReport> &reports, ReportFormat format);

std::vector<CaseReport> parse_report_json(const std::string &text);
std::vector<CaseReport> parse_report_csv(const std::string &text);

/// Per-frequency series as CSV (one row per frequency).
std::string emit_series_csv(const CaseSeries &series);

std::string emit_sorted_k_csv(const SortedKTable &table);

} // namespace rcstats
