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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "rcstats/analysis.hpp"
#include "rcstats/error.hpp"
#include "rcstats/report.hpp"
#include "rcstats/synth.hpp"

using namespace rcstats;

namespace
{

// Same structure, strings equal, numbers within 1e-12 relative.
void require_close(const nlohmann::json &a, const nlohmann::json &b, const std::string &path)
{
    INFO(path);
    REQUIRE(a.type() == b.type());
    if (a.is_object())
    {
        REQUIRE(a.size() == b.size());
        for (auto it = a.begin(); it != a.end(); ++it)
        {
            REQUIRE(b.contains(it.key()));
            require_close(it.value(), b.at(it.key()), path + "." + it.key());
        }
    }
    else if (a.is_array())
    {
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            require_close(a[i], b[i], path + "[" + std::to_string(i) + "]");
    }
    else if (a.is_number_float())
    {
        const double x = a.get<double>(), y = b.get<double>();
        CHECK(std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x)));
    }
    else
        CHECK(a == b);
}

std::vector<std::string> split_lines(const std::string &s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

CaseAnalysis small_case(std::uint64_t seed, bool gof, bool noise)
{
    const auto grid = uniform_grid(26e9, 10e6, 30);
    SynthScenario sc;
    sc.params_at_f0 = RicianParams::from_k_db_omega(-5.0, 1e-4);
    sc.n_d = -1.3;
    sc.f0_hz = grid[10];
    const auto sweep = synth_sweep(sc, grid, 200, seed);
    AnalysisOptions o;
    o.run_gof = gof;
    o.min_bootstrap = 100;
    o.mctol = 0.05;
    o.seed = seed;
    std::optional<NoiseProfile> n;
    if (noise)
        n = NoiseProfile::flat(grid, -75.0);
    return analyze_case(sweep, LinkBudget::lossless(grid), n, o);
}

} // namespace

TEST_CASE("CSV columns start with the summary set", "[report]")
{
    const auto &c = report_csv_columns();
    const std::vector<std::string> head{"case_id",      "absorbers", "excitation",      "switch",    "attenuation",
                                        "k_mean_db",    "k_cv",      "k_dr_db",         "omega_mean_dbm", "omega_cv",
                                        "omega_dr_db",  "ps_mean_dbm", "ps_cv",         "ps_dr_db",  "pd_mean_dbm",
                                        "pd_cv",        "pd_dr_db",  "pr_rician_pct",   "pr_rayleigh_pct", "snr_avg_db",
                                        "excluded_fs_pct"};
    REQUIRE(c.size() > head.size());
    for (std::size_t i = 0; i < head.size(); ++i)
        CHECK(c[i] == head[i]);
    std::vector<std::string> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("one report gives a one-row CSV with every column", "[report]")
{
    const auto csv = emit_report_csv({CaseReport{}});
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 2);
    CHECK(std::count(lines[0].begin(), lines[0].end(), ',') + 1 == static_cast<long>(report_csv_columns().size()));
    CHECK(std::count(lines[1].begin(), lines[1].end(), ',') == std::count(lines[0].begin(), lines[0].end(), ','));
}

TEST_CASE("JSON to CSV to JSON keeps every value", "[report]")
{
    std::vector<CaseReport> reps{small_case(1, true, true).report, small_case(2, false, false).report};
    reps[1].config.case_id = "free, \"form\" id";
    const auto j1 = emit_report_json(reps);
    const auto back = parse_report_csv(emit_report_csv(parse_report_json(j1)));
    require_close(nlohmann::json::parse(j1), nlohmann::json::parse(emit_report_json(back)), "");

    REQUIRE(back.size() == 2);
    CHECK(back[1].config.case_id == "free, \"form\" id");
    CHECK_FALSE(back[1].pr_rician.has_value());
    CHECK_FALSE(back[1].snr_avg_db.has_value());
    CHECK(std::abs(*back[0].pr_rician - *reps[0].pr_rician) <= 1e-12);
    CHECK(std::abs(back[0].k_fit.n - reps[0].k_fit.n) <= 1e-12 * std::abs(reps[0].k_fit.n));
    CHECK(back[0].k_fit.n_points_used == reps[0].k_fit.n_points_used);
}

TEST_CASE("non-finite values survive the round trip", "[report]")
{
    CaseReport r;
    r.k.dr_db = INFINITY;
    r.k.mean_db = -INFINITY;
    r.snr_avg_db = std::nan("");
    const auto j = parse_report_json(emit_report_json({r}));
    CHECK(j[0].k.dr_db == INFINITY);
    CHECK(j[0].k.mean_db == -INFINITY);
    CHECK(std::isnan(*j[0].snr_avg_db));
    const auto c = parse_report_csv(emit_report_csv({r}));
    CHECK(c[0].k.dr_db == INFINITY);
    CHECK(std::isnan(*c[0].snr_avg_db));
}

TEST_CASE("report output is deterministic", "[report]")
{
    const auto a = small_case(7, true, true);
    const auto b = small_case(7, true, true);
    CHECK(emit_report_json({a.report}) == emit_report_json({b.report}));
    CHECK(emit_report_csv({a.report}) == emit_report_csv({b.report}));
    CHECK(emit_series_csv(a.series) == emit_series_csv(b.series));
}

TEST_CASE("malformed reports are rejected", "[report]")
{
    CHECK_THROWS_AS(parse_report_json("[]"), ValidationError);
    CHECK_THROWS_AS(parse_report_json(R"({"schema_version": 2, "reports": []})"), ValidationError);
    CHECK_THROWS_AS(parse_report_csv("case_id\n1\n"), ValidationError);
    CHECK_THROWS_AS(parse_report_format("xml"), ValidationError);
    CHECK(parse_report_format("csv") == ReportFormat::csv);
}

TEST_CASE("series CSV has one row per frequency", "[report]")
{
    const auto a = small_case(3, true, true);
    const auto lines = split_lines(emit_series_csv(a.series));
    REQUIRE(lines.size() == 31);
    CHECK(lines[0].rfind("freq_hz,", 0) == 0);
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == std::count(lines[0].begin(), lines[0].end(), ','));
}

TEST_CASE("sorted-K CSV", "[report]")
{
    const auto t = sorted_k_table(std::vector<SortedKEntry>{{"b", 3.0}, {"a", 0.0}, {"c", 1.0}});
    const auto lines = split_lines(emit_sorted_k_csv(t));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "rank,case_id,k_db,increment_db");
    CHECK(lines[1].rfind("1,a,0,", 0) == 0);
    CHECK(lines[3] == "3,b,3,2");
}
