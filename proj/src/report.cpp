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

#include "rcstats/report.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "rcstats/error.hpp"
#include "rcstats/io.hpp"

namespace rcstats
{

using ojson = nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view s)
{
    if (s == "json")
        return ReportFormat::json;
    if (s == "csv")
        return ReportFormat::csv;
    throw ValidationError("unknown report format '" + std::string(s) + "' (expected json or csv)");
}

namespace
{

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

/// One CSV column: how to print it from a report and how to read it back.
struct Column
{
    std::string name;
    std::function<std::string(const CaseReport &)> get;
    std::function<void(CaseReport &, const std::string &)> set;
};

double parse_cell(const std::string &s)
{
    if (s == "nan")
        return nan_v;
    if (s == "inf")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    std::size_t pos = 0;
    double v = 0.0;
    try
    {
        v = std::stod(s, &pos);
    }
    catch (const std::exception &)
    {
        throw ValidationError("report CSV: cannot parse number '" + s + "'");
    }
    if (pos != s.size())
        throw ValidationError("report CSV: cannot parse number '" + s + "'");
    return v;
}

std::size_t parse_count(const std::string &s)
{
    const double v = parse_cell(s);
    if (!(v >= 0.0) || v != std::floor(v))
        throw ValidationError("report CSV: expected a count, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

Column num(std::string name, std::function<double &(CaseReport &)> ref, double scale = 1.0)
{
    return {std::move(name),
            [ref, scale](const CaseReport &r) { return format_double(ref(const_cast<CaseReport &>(r)) * scale); },
            [ref, scale](CaseReport &r, const std::string &s) { ref(r) = parse_cell(s) / scale; }};
}

Column opt(std::string name, std::optional<double> CaseReport::*m, double scale = 1.0)
{
    return {std::move(name),
            [m, scale](const CaseReport &r) { return (r.*m) ? format_double(*(r.*m) * scale) : std::string(); },
            [m, scale](CaseReport &r, const std::string &s) {
                if (s.empty())
                    r.*m = std::nullopt;
                else
                    r.*m = parse_cell(s) / scale;
            }};
}

Column count(std::string name, std::size_t CaseReport::*m)
{
    return {std::move(name), [m](const CaseReport &r) { return std::to_string(r.*m); },
            [m](CaseReport &r, const std::string &s) { r.*m = parse_count(s); }};
}

template <class Get, class Set>
Column text(std::string name, Get get, Set set)
{
    return {std::move(name), get, set};
}

void add_stats(std::vector<Column> &c, const std::string &prefix, const char *unit, QuantityStats CaseReport::*q)
{
    c.push_back(num(prefix + "_mean_" + unit, [q](CaseReport &r) -> double & { return (r.*q).mean_db; }));
    c.push_back(num(prefix + "_cv", [q](CaseReport &r) -> double & { return (r.*q).cv; }));
    c.push_back(num(prefix + "_dr_db", [q](CaseReport &r) -> double & { return (r.*q).dr_db; }));
}

void add_fit(std::vector<Column> &c, const std::string &prefix, const char *unit, FitResult CaseReport::*f)
{
    c.push_back(num(prefix + "_fit_a_" + unit, [f](CaseReport &r) -> double & { return (r.*f).a; }));
    c.push_back(num(prefix + "_fit_n", [f](CaseReport &r) -> double & { return (r.*f).n; }));
    c.push_back(num(prefix + "_fit_r2", [f](CaseReport &r) -> double & { return (r.*f).r2; }));
    c.push_back(text(
        prefix + "_fit_points", [f](const CaseReport &r) { return std::to_string((r.*f).n_points_used); },
        [f](CaseReport &r, const std::string &s) { (r.*f).n_points_used = parse_count(s); }));
    c.push_back(num(prefix + "_fit_f0_hz", [f](CaseReport &r) -> double & { return (r.*f).f0_hz; }));
}

std::vector<Column> build_columns()
{
    std::vector<Column> c;
    c.push_back(text(
        "case_id", [](const CaseReport &r) { return r.config.case_id; },
        [](CaseReport &r, const std::string &s) { r.config.case_id = s; }));
    c.push_back(text(
        "absorbers", [](const CaseReport &r) { return std::string(to_string(r.config.absorbers)); },
        [](CaseReport &r, const std::string &s) { r.config.absorbers = parse_absorbers(s); }));
    c.push_back(text(
        "excitation", [](const CaseReport &r) { return std::string(to_string(r.config.excitation)); },
        [](CaseReport &r, const std::string &s) { r.config.excitation = parse_excitation(s); }));
    c.push_back(text(
        "switch", [](const CaseReport &r) { return std::string(to_string(r.config.pol_switch)); },
        [](CaseReport &r, const std::string &s) { r.config.pol_switch = parse_switch(s); }));
    c.push_back(text(
        "attenuation", [](const CaseReport &r) { return std::string(to_string(r.config.attenuation)); },
        [](CaseReport &r, const std::string &s) { r.config.attenuation = parse_attenuation(s); }));
    add_stats(c, "k", "db", &CaseReport::k);
    add_stats(c, "omega", "dbm", &CaseReport::omega);
    add_stats(c, "ps", "dbm", &CaseReport::ps);
    add_stats(c, "pd", "dbm", &CaseReport::pd);
    c.push_back(opt("pr_rician_pct", &CaseReport::pr_rician, 100.0));
    c.push_back(opt("pr_rayleigh_pct", &CaseReport::pr_rayleigh, 100.0));
    c.push_back(opt("snr_avg_db", &CaseReport::snr_avg_db));
    c.push_back(num("excluded_fs_pct", [](CaseReport &r) -> double & { return r.excluded_fs_fraction; },
                    100.0));

    c.push_back(text(
        "schema_version", [](const CaseReport &r) { return std::to_string(r.schema_version); },
        [](CaseReport &r, const std::string &s) { r.schema_version = static_cast<int>(parse_count(s)); }));
    c.push_back(count("n_fs", &CaseReport::n_fs));
    c.push_back(count("n_sp", &CaseReport::n_sp));
    c.push_back(count("n_eff", &CaseReport::n_eff));
    c.push_back(text(
        "threshold_mode", [](const CaseReport &r) { return std::string(to_string(r.threshold_mode)); },
        [](CaseReport &r, const std::string &s) { r.threshold_mode = parse_threshold_mode(s); }));
    c.push_back(num("threshold_used", [](CaseReport &r) -> double & { return r.threshold_used; }));
    c.push_back(count("n_gof_fs", &CaseReport::n_gof_fs));
    c.push_back(opt("snr_fraction_5db", &CaseReport::snr_fraction_5db));
    c.push_back(opt("snr_fraction_10db", &CaseReport::snr_fraction_10db));
    c.push_back(num("degenerate_fs_pct", [](CaseReport &r) -> double & { return r.degenerate_fs_fraction; },
                    100.0));
    add_fit(c, "k", "db", &CaseReport::k_fit);
    add_fit(c, "omega", "dbm", &CaseReport::omega_fit);
    add_fit(c, "ps", "dbm", &CaseReport::ps_fit);
    add_fit(c, "pd", "dbm", &CaseReport::pd_fit);
    return c;
}

const std::vector<Column> &columns()
{
    static const std::vector<Column> c = build_columns();
    return c;
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
    {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string &line)
{
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        const char ch = line[i];
        if (quoted)
        {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"')
            {
                out.back() += '"';
                ++i;
            }
            else if (ch == '"')
                quoted = false;
            else
                out.back() += ch;
        }
        else if (ch == '"')
            quoted = true;
        else if (ch == ',')
            out.emplace_back();
        else if (ch != '\r')
            out.back() += ch;
    }
    if (quoted)
        throw ValidationError("report CSV: unterminated quoted field");
    return out;
}

// JSON numbers cannot hold NaN or infinities; those are written as strings.
ojson jnum(double v)
{
    if (std::isfinite(v))
        return v;
    return format_double(v);
}

double from_jnum(const ojson &j)
{
    if (j.is_string())
        return parse_cell(j.get<std::string>());
    return j.get<double>();
}

ojson jopt(const std::optional<double> &v)
{
    return v ? jnum(*v) : ojson(nullptr);
}

std::optional<double> from_jopt(const ojson &j)
{
    if (j.is_null())
        return std::nullopt;
    return from_jnum(j);
}

ojson stats_json(const QuantityStats &q, const char *mean_key)
{
    ojson j;
    j[mean_key] = jnum(q.mean_db);
    j["cv"] = jnum(q.cv);
    j["dr_db"] = jnum(q.dr_db);
    return j;
}

QuantityStats stats_from(const ojson &j, const char *mean_key)
{
    return {from_jnum(j.at(mean_key)), from_jnum(j.at("cv")), from_jnum(j.at("dr_db"))};
}

ojson fit_json(const FitResult &f)
{
    ojson j;
    j["a"] = jnum(f.a);
    j["n"] = jnum(f.n);
    j["r2"] = jnum(f.r2);
    j["f0_hz"] = jnum(f.f0_hz);
    j["n_points_used"] = f.n_points_used;
    return j;
}

FitResult fit_from(const ojson &j)
{
    FitResult f;
    f.a = from_jnum(j.at("a"));
    f.n = from_jnum(j.at("n"));
    f.r2 = from_jnum(j.at("r2"));
    f.f0_hz = from_jnum(j.at("f0_hz"));
    f.n_points_used = j.at("n_points_used").get<std::size_t>();
    return f;
}

ojson report_json(const CaseReport &r)
{
    ojson j;
    j["schema_version"] = r.schema_version;
    j["case_id"] = r.config.case_id;
    j["config"] = {{"absorbers", to_string(r.config.absorbers)},
                   {"excitation", to_string(r.config.excitation)},
                   {"switch", to_string(r.config.pol_switch)},
                   {"attenuation", to_string(r.config.attenuation)}};
    j["n_fs"] = r.n_fs;
    j["n_sp"] = r.n_sp;
    j["n_eff"] = r.n_eff;
    j["threshold_mode"] = to_string(r.threshold_mode);
    j["threshold_used"] = jnum(r.threshold_used);
    j["k"] = stats_json(r.k, "mean_db");
    j["omega"] = stats_json(r.omega, "mean_dbm");
    j["ps"] = stats_json(r.ps, "mean_dbm");
    j["pd"] = stats_json(r.pd, "mean_dbm");
    j["pr_rician"] = jopt(r.pr_rician);
    j["pr_rayleigh"] = jopt(r.pr_rayleigh);
    j["n_gof_fs"] = r.n_gof_fs;
    j["snr_avg_db"] = jopt(r.snr_avg_db);
    j["snr_fraction_5db"] = jopt(r.snr_fraction_5db);
    j["snr_fraction_10db"] = jopt(r.snr_fraction_10db);
    j["excluded_fs_fraction"] = jnum(r.excluded_fs_fraction);
    j["degenerate_fs_fraction"] = jnum(r.degenerate_fs_fraction);
    j["fits"] = {{"k", fit_json(r.k_fit)},
                 {"omega", fit_json(r.omega_fit)},
                 {"ps", fit_json(r.ps_fit)},
                 {"pd", fit_json(r.pd_fit)}};
    return j;
}

CaseReport report_from(const ojson &j)
{
    CaseReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != report_schema_version)
        throw ValidationError("report: unsupported schema_version " + std::to_string(r.schema_version));
    const auto &id = j.at("case_id");
    r.config.case_id = id.is_string() ? id.get<std::string>() : std::to_string(id.get<long long>());
    const auto &c = j.at("config");
    r.config.absorbers = parse_absorbers(c.at("absorbers").get<std::string>());
    r.config.excitation = parse_excitation(c.at("excitation").get<std::string>());
    r.config.pol_switch = parse_switch(c.at("switch").get<std::string>());
    r.config.attenuation = parse_attenuation(c.at("attenuation").get<std::string>());
    r.n_fs = j.at("n_fs").get<std::size_t>();
    r.n_sp = j.at("n_sp").get<std::size_t>();
    r.n_eff = j.at("n_eff").get<std::size_t>();
    r.threshold_mode = parse_threshold_mode(j.at("threshold_mode").get<std::string>());
    r.threshold_used = from_jnum(j.at("threshold_used"));
    r.k = stats_from(j.at("k"), "mean_db");
    r.omega = stats_from(j.at("omega"), "mean_dbm");
    r.ps = stats_from(j.at("ps"), "mean_dbm");
    r.pd = stats_from(j.at("pd"), "mean_dbm");
    r.pr_rician = from_jopt(j.at("pr_rician"));
    r.pr_rayleigh = from_jopt(j.at("pr_rayleigh"));
    r.n_gof_fs = j.at("n_gof_fs").get<std::size_t>();
    r.snr_avg_db = from_jopt(j.at("snr_avg_db"));
    r.snr_fraction_5db = from_jopt(j.at("snr_fraction_5db"));
    r.snr_fraction_10db = from_jopt(j.at("snr_fraction_10db"));
    r.excluded_fs_fraction = from_jnum(j.at("excluded_fs_fraction"));
    r.degenerate_fs_fraction = from_jnum(j.at("degenerate_fs_fraction"));
    const auto &f = j.at("fits");
    r.k_fit = fit_from(f.at("k"));
    r.omega_fit = fit_from(f.at("omega"));
    r.ps_fit = fit_from(f.at("ps"));
    r.pd_fit = fit_from(f.at("pd"));
    return r;
}

std::string cell(double v)
{
    return std::isnan(v) ? std::string() : format_double(v);
}

} // namespace

const std::vector<std::string> &report_csv_columns()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto &c : columns())
            n.push_back(c.name);
        return n;
    }();
    return names;
}

std::string emit_report_json(const std::vector<CaseReport> &reports)
{
    ojson root;
    root["schema_version"] = report_schema_version;
    root["reports"] = ojson::array();
    for (const auto &r : reports)
        root["reports"].push_back(report_json(r));
    return root.dump(2) + "\n";
}

std::string emit_report_csv(const std::vector<CaseReport> &reports)
{
    std::string out;
    const auto &cols = columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + cols[i].name;
    out += '\n';
    for (const auto &r : reports)
    {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out += (i ? "," : "") + csv_escape(cols[i].get(r));
        out += '\n';
    }
    return out;
}

std::string emit_report(const std::vector<CaseReport> &reports, ReportFormat format)
{
    return format == ReportFormat::json ? emit_report_json(reports) : emit_report_csv(reports);
}

std::vector<CaseReport> parse_report_json(const std::string &text)
{
    try
    {
        const ojson root = ojson::parse(text);
        if (root.at("schema_version").get<int>() != report_schema_version)
            throw ValidationError("report: unsupported schema_version");
        std::vector<CaseReport> out;
        for (const auto &j : root.at("reports"))
            out.push_back(report_from(j));
        return out;
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ValidationError(std::string("report JSON: ") + e.what());
    }
}

std::vector<CaseReport> parse_report_csv(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ValidationError("report CSV: empty input");
    const auto head = csv_split(line);
    const auto &cols = columns();
    if (head.size() != cols.size())
        throw ValidationError("report CSV: unexpected column count in header");
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (head[i] != cols[i].name)
            throw ValidationError("report CSV: column " + std::to_string(i + 1) + " should be '" + cols[i].name + "'");

    std::vector<CaseReport> out;
    std::size_t line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        const auto f = csv_split(line);
        if (f.size() != cols.size())
            throw ValidationError("report CSV, line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(cols.size()) + " fields");
        CaseReport r;
        try
        {
            for (std::size_t i = 0; i < cols.size(); ++i)
                cols[i].set(r, f[i]);
        }
        catch (const ValidationError &e)
        {
            throw ValidationError("report CSV, line " + std::to_string(line_no) + ": " + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string emit_series_csv(const CaseSeries &s)
{
    const CaseDecomposition &d = s.decomposition;
    std::string out = "freq_hz,status,n_eff,k_hat,k_db,omega_dbm,ps_dbm,pd_dbm,snr_db,p_rician,p_rayleigh\n";
    for (std::size_t i = 0; i < d.freqs_hz.size(); ++i)
    {
        const char *status = d.status[i] == FsStatus::ok           ? "ok"
                             : d.status[i] == FsStatus::negative_k ? "negative_k"
                                                                   : "degenerate";
        const bool ok = d.usable(i);
        out += format_double(d.freqs_hz[i]) + ',' + status + ',' + std::to_string(s.n_eff_per_fs[i]) + ',' +
               cell(d.k_hat[i]) + ',' + (ok ? cell(linear_to_db(d.k_hat[i])) : "") + ',' +
               (ok ? cell(linear_to_db(d.omega_mw[i])) : "") + ',' + (ok ? cell(linear_to_db(d.p_s_mw[i])) : "") +
               ',' + (ok ? cell(linear_to_db(d.p_d_mw[i])) : "") + ',' + (s.snr_db.empty() ? "" : cell(s.snr_db[i])) +
               ',' + cell(s.p_rician[i]) + ',' + cell(s.p_rayleigh[i]) + '\n';
    }
    return out;
}

std::string emit_sorted_k_csv(const SortedKTable &t)
{
    std::string out = "rank,case_id,k_db,increment_db\n";
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        out += std::to_string(i + 1) + ',' + csv_escape(t.entries[i].case_id) + ',' + format_double(t.entries[i].k_db) +
               ',' + (i ? format_double(t.increments_db[i - 1]) : std::string()) + '\n';
    return out;
}

} // namespace rcstats
