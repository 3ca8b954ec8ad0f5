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

#include "rcstats/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

#include "json.hpp"

#include "rcstats/error.hpp"

namespace rcstats
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

/// Line-oriented CSV reader that remembers line numbers for error messages.
class CsvReader
{
public:
    CsvReader(std::istream &in, std::string what) : in_(in), what_(std::move(what)) {}

    /// Reads the header row; returns it as trimmed fields.
    std::vector<std::string> header()
    {
        std::vector<std::string> f;
        if (!next(f))
            throw ValidationError(what_ + ": empty input (missing header)");
        return f;
    }

    bool next(std::vector<std::string> &fields)
    {
        std::string line;
        while (std::getline(in_, line))
        {
            ++line_no_;
            if (trim(line).empty())
                continue;
            fields.clear();
            std::string_view rest = line;
            while (true)
            {
                const auto comma = rest.find(',');
                fields.emplace_back(trim(rest.substr(0, comma)));
                if (comma == std::string_view::npos)
                    break;
                rest.remove_prefix(comma + 1);
            }
            return true;
        }
        if (in_.bad())
            throw IoError(what_ + ": read failure");
        return false;
    }

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ValidationError(what_ + ", line " + std::to_string(line_no_) + ": " + msg);
    }

    double number(const std::string &s, const char *column) const
    {
        double v = 0.0;
        const char *b = s.data();
        const char *e = b + s.size();
        if (!s.empty() && *b == '+')
            ++b;
        const auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || ptr != e)
            fail(std::string("cannot parse ") + column + " value '" + s + "'");
        return v;
    }

    double finite(const std::string &s, const char *column) const
    {
        const double v = number(s, column);
        if (!std::isfinite(v))
            fail(std::string("non-finite ") + column + " value '" + s + "'");
        return v;
    }

    std::size_t index(const std::string &s, const char *column) const
    {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            fail(std::string("cannot parse ") + column + " index '" + s + "'");
        return v;
    }

    std::size_t line() const noexcept { return line_no_; }

private:
    std::istream &in_;
    std::string what_;
    std::size_t line_no_ = 0;
};

void expect_header(const std::vector<std::string> &got, std::initializer_list<std::string_view> want, const char *what)
{
    bool ok = got.size() == want.size();
    std::string joined;
    std::size_t i = 0;
    for (auto w : want)
    {
        if (ok && got[i] != w)
            ok = false;
        joined.append(i ? "," : "").append(w);
        ++i;
    }
    if (!ok)
        throw ValidationError(std::string(what) + ": expected header '" + joined + "'");
}

void expect_fields(const CsvReader &r, const std::vector<std::string> &f, std::size_t n)
{
    if (f.size() != n)
        r.fail("expected " + std::to_string(n) + " fields, got " + std::to_string(f.size()));
}

nlohmann::json case_id_json(const std::string &id)
{
    if (!id.empty() && id.size() < 10 && std::all_of(id.begin(), id.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::stoi(id);
    return id;
}

} // namespace

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> SweepManifest::grid() const
{
    return uniform_grid(f_start_hz, f_step_hz, n_fs);
}

SweepManifest manifest_for(const ComplexSweep &sweep)
{
    const auto &f = sweep.freqs_hz();
    SweepManifest m;
    m.config = sweep.config();
    m.n_fs = f.size();
    m.n_sp = sweep.n_sp();
    m.f_start_hz = f.front();
    m.f_step_hz = f.size() > 1 ? (f.back() - f.front()) / static_cast<double>(f.size() - 1) : 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (std::abs(f[i] - (m.f_start_hz + static_cast<double>(i) * m.f_step_hz)) > 1e-9 * std::abs(f[i]))
            throw ValidationError("sweep grid is not uniform; the manifest format needs start + step");
    return m;
}

SweepManifest parse_manifest(const std::string &json_text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(json_text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ValidationError(std::string("manifest: invalid JSON: ") + e.what());
    }
    try
    {
        SweepManifest m;
        m.schema_version = j.at("schema_version").get<int>();
        if (m.schema_version != sweep_schema_version)
            throw ValidationError("manifest: unsupported schema_version " + std::to_string(m.schema_version));
        const auto &id = j.at("case_id");
        m.config.case_id = id.is_string() ? id.get<std::string>() : std::to_string(id.get<long long>());
        const auto &c = j.at("config");
        m.config.absorbers = parse_absorbers(c.at("absorbers").get<std::string>());
        m.config.excitation = parse_excitation(c.at("excitation").get<std::string>());
        m.config.pol_switch = parse_switch(c.at("switch").get<std::string>());
        m.config.attenuation = parse_attenuation(c.at("attenuation").get<std::string>());
        m.config.validate();
        m.f_start_hz = j.at("f_start_hz").get<double>();
        m.f_step_hz = j.at("f_step_hz").get<double>();
        m.n_fs = j.at("n_fs").get<std::size_t>();
        m.n_sp = j.at("n_sp").get<std::size_t>();
        if (j.contains("units"))
            m.units = j.at("units").get<std::string>();
        if (m.n_fs == 0 || m.n_sp == 0)
            throw ValidationError("manifest: n_fs and n_sp must be >= 1");
        if (!std::isfinite(m.f_start_hz) || !(m.f_start_hz > 0.0) || !std::isfinite(m.f_step_hz) ||
            (m.n_fs > 1 && !(m.f_step_hz > 0.0)))
            throw ValidationError("manifest: invalid frequency grid parameters");
        return m;
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ValidationError(std::string("manifest: ") + e.what());
    }
}

std::string manifest_to_json(const SweepManifest &m)
{
    nlohmann::ordered_json j;
    j["schema_version"] = m.schema_version;
    j["case_id"] = case_id_json(m.config.case_id);
    j["config"] = {{"absorbers", to_string(m.config.absorbers)},
                   {"excitation", to_string(m.config.excitation)},
                   {"switch", to_string(m.config.pol_switch)},
                   {"attenuation", to_string(m.config.attenuation)}};
    j["f_start_hz"] = m.f_start_hz;
    j["f_step_hz"] = m.f_step_hz;
    j["n_fs"] = m.n_fs;
    j["n_sp"] = m.n_sp;
    j["units"] = m.units;
    return j.dump(2) + "\n";
}

ComplexSweep parse_sweep_csv(std::istream &in, const SweepManifest &manifest)
{
    CsvReader r(in, "sweep CSV");
    expect_header(r.header(), {"freq_hz", "sp_index", "s21_re", "s21_im"}, "sweep CSV");

    const std::vector<double> grid = manifest.grid();
    const std::size_t n_fs = manifest.n_fs;
    const std::size_t n_sp = manifest.n_sp;
    std::vector<double> freqs(n_fs, std::numeric_limits<double>::quiet_NaN());
    std::vector<std::complex<double>> samples(n_fs * n_sp);
    std::vector<unsigned char> seen(n_fs * n_sp, 0);

    std::vector<std::string> f;
    while (r.next(f))
    {
        expect_fields(r, f, 4);
        const double freq = r.finite(f[0], "freq_hz");
        const std::size_t sp = r.index(f[1], "sp_index");
        const double re = r.finite(f[2], "s21_re");
        const double im = r.finite(f[3], "s21_im");

        std::size_t fi = 0;
        if (n_fs > 1)
        {
            const double pos = std::round((freq - manifest.f_start_hz) / manifest.f_step_hz);
            if (pos < 0.0 || pos >= static_cast<double>(n_fs))
                r.fail("frequency " + f[0] + " outside the manifest grid");
            fi = static_cast<std::size_t>(pos);
        }
        if (std::abs(freq - grid[fi]) > 1e-9 * std::abs(grid[fi]))
            r.fail("frequency " + f[0] + " is not on the manifest grid");
        if (std::isnan(freqs[fi]))
            freqs[fi] = freq;
        else if (freqs[fi] != freq)
            r.fail("frequency " + f[0] + " differs from an earlier row of the same grid point");
        if (sp >= n_sp)
            r.fail("sp_index " + f[1] + " out of range (n_sp = " + std::to_string(n_sp) + ")");
        const std::size_t cell = fi * n_sp + sp;
        if (seen[cell])
            r.fail("duplicate cell (freq_hz " + f[0] + ", sp_index " + f[1] + ")");
        seen[cell] = 1;
        samples[cell] = {re, im};
    }
    for (std::size_t cell = 0; cell < seen.size(); ++cell)
        if (!seen[cell])
            throw ValidationError("sweep CSV: missing cell (freq_hz " + format_double(grid[cell / n_sp]) +
                                  ", sp_index " + std::to_string(cell % n_sp) + ")");
    return ComplexSweep(std::move(freqs), n_sp, std::move(samples), manifest.config);
}

void write_sweep_csv(std::ostream &out, const ComplexSweep &sweep)
{
    out << "freq_hz,sp_index,s21_re,s21_im\n";
    for (std::size_t fi = 0; fi < sweep.n_fs(); ++fi)
    {
        const std::string f = format_double(sweep.freqs_hz()[fi]);
        const auto s = sweep.frequency_samples(fi);
        for (std::size_t sp = 0; sp < sweep.n_sp(); ++sp)
            out << f << ',' << sp << ',' << format_double(s[sp].real()) << ',' << format_double(s[sp].imag()) << '\n';
    }
}

ComplexSweep load_sweep(const std::filesystem::path &csv_path, const SweepManifest &manifest)
{
    std::ifstream in(csv_path);
    if (!in)
        throw IoError("cannot open sweep file " + csv_path.string());
    return parse_sweep_csv(in, manifest);
}

ComplexSweep load_sweep(const std::filesystem::path &csv_path, const std::filesystem::path &manifest_path)
{
    return load_sweep(csv_path, parse_manifest(read_text_file(manifest_path)));
}

void save_sweep(const ComplexSweep &sweep, const std::filesystem::path &csv_path,
                const std::filesystem::path &manifest_path)
{
    const SweepManifest m = manifest_for(sweep);
    std::ostringstream csv;
    write_sweep_csv(csv, sweep);
    write_text_file(csv_path, csv.str());
    write_text_file(manifest_path, manifest_to_json(m));
}

LinkBudget parse_loss_profile(std::istream &in, double p_out_dbm)
{
    CsvReader r(in, "loss profile");
    expect_header(r.header(), {"freq_hz", "l_cal_db", "l_eff_db"}, "loss profile");
    LinkBudget b;
    b.p_out_dbm = p_out_dbm;
    std::vector<std::string> f;
    while (r.next(f))
    {
        expect_fields(r, f, 3);
        const double freq = r.finite(f[0], "freq_hz");
        if (!b.freqs_hz.empty() && !(freq > b.freqs_hz.back()))
            r.fail("frequencies must be strictly increasing");
        b.freqs_hz.push_back(freq);
        b.l_cal_db.push_back(r.finite(f[1], "l_cal_db"));
        b.l_eff_db.push_back(r.finite(f[2], "l_eff_db"));
    }
    if (b.freqs_hz.empty())
        throw ValidationError("loss profile: no data rows");
    return b;
}

void write_loss_profile(std::ostream &out, const LinkBudget &budget)
{
    out << "freq_hz,l_cal_db,l_eff_db\n";
    for (std::size_t i = 0; i < budget.freqs_hz.size(); ++i)
        out << format_double(budget.freqs_hz[i]) << ',' << format_double(budget.l_cal_db[i]) << ','
            << format_double(budget.l_eff_db[i]) << '\n';
}

LinkBudget load_loss_profile(const std::filesystem::path &path, double p_out_dbm)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open loss profile " + path.string());
    return parse_loss_profile(in, p_out_dbm);
}

NoiseProfile parse_noise_profile(std::istream &in)
{
    CsvReader r(in, "noise profile");
    const auto head = r.header();
    std::vector<std::string> f;
    if (head.size() == 2)
    {
        expect_header(head, {"freq_hz", "nl_dbm"}, "noise profile");
        NoiseProfile p;
        while (r.next(f))
        {
            expect_fields(r, f, 2);
            const double freq = r.finite(f[0], "freq_hz");
            if (!p.freqs_hz.empty() && !(freq > p.freqs_hz.back()))
                r.fail("frequencies must be strictly increasing");
            p.freqs_hz.push_back(freq);
            p.nl_dbm.push_back(r.finite(f[1], "nl_dbm"));
        }
        if (p.freqs_hz.empty())
            throw ValidationError("noise profile: no data rows");
        return p;
    }

    expect_header(head, {"freq_hz", "sample_index", "s21_re", "s21_im"}, "noise profile (raw form)");
    std::map<double, std::map<std::size_t, std::complex<double>>> cells;
    while (r.next(f))
    {
        expect_fields(r, f, 4);
        const double freq = r.finite(f[0], "freq_hz");
        const std::size_t idx = r.index(f[1], "sample_index");
        const std::complex<double> v{r.finite(f[2], "s21_re"), r.finite(f[3], "s21_im")};
        if (!cells[freq].emplace(idx, v).second)
            r.fail("duplicate noise sample (freq_hz " + f[0] + ", sample_index " + f[1] + ")");
    }
    if (cells.empty())
        throw ValidationError("noise profile: no data rows");
    std::vector<double> freqs;
    std::vector<std::vector<std::complex<double>>> samples;
    for (const auto &[freq, by_index] : cells)
    {
        freqs.push_back(freq);
        auto &list = samples.emplace_back();
        for (const auto &[idx, v] : by_index)
            list.push_back(v);
    }
    return noise_profile_from_samples(std::move(freqs), samples);
}

void write_noise_profile(std::ostream &out, const NoiseProfile &noise)
{
    out << "freq_hz,nl_dbm\n";
    for (std::size_t i = 0; i < noise.freqs_hz.size(); ++i)
        out << format_double(noise.freqs_hz[i]) << ',' << format_double(noise.nl_dbm[i]) << '\n';
}

NoiseProfile load_noise_profile(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open noise profile " + path.string());
    return parse_noise_profile(in);
}

std::vector<std::complex<double>> parse_samples_csv(std::istream &in)
{
    CsvReader r(in, "samples CSV");
    expect_header(r.header(), {"s21_re", "s21_im"}, "samples CSV");
    std::vector<std::complex<double>> out;
    std::vector<std::string> f;
    while (r.next(f))
    {
        expect_fields(r, f, 2);
        out.emplace_back(r.finite(f[0], "s21_re"), r.finite(f[1], "s21_im"));
    }
    if (out.empty())
        throw ValidationError("samples CSV: no data rows");
    return out;
}

Series parse_series_csv(std::istream &in)
{
    CsvReader r(in, "series CSV");
    const auto head = r.header();
    const bool has_mask = head.size() == 3;
    if (has_mask)
        expect_header(head, {"freq_hz", "value_db", "excluded"}, "series CSV");
    else
        expect_header(head, {"freq_hz", "value_db"}, "series CSV");

    Series s;
    std::vector<std::string> f;
    while (r.next(f))
    {
        expect_fields(r, f, has_mask ? 3 : 2);
        const double freq = r.finite(f[0], "freq_hz");
        if (!s.freqs_hz.empty() && !(freq > s.freqs_hz.back()))
            r.fail("frequencies must be strictly increasing");
        s.freqs_hz.push_back(freq);
        // Blank cells (NaN in emitted series) read back as NaN.
        s.values_db.push_back(f[1].empty() ? std::numeric_limits<double>::quiet_NaN() : r.number(f[1], "value_db"));
        bool excluded = false;
        if (has_mask)
        {
            if (f[2] == "1" || f[2] == "true")
                excluded = true;
            else if (f[2] != "0" && f[2] != "false")
                r.fail("excluded must be 0/1 or true/false");
        }
        s.excluded.push_back(excluded);
    }
    if (s.freqs_hz.empty())
        throw ValidationError("series CSV: no data rows");
    return s;
}

LinkBudget resample_loss_profile(const LinkBudget &profile, std::span<const double> target_freqs_hz)
{
    validate_frequency_grid(profile.freqs_hz);
    validate_frequency_grid(target_freqs_hz);
    if (profile.l_cal_db.size() != profile.freqs_hz.size() || profile.l_eff_db.size() != profile.freqs_hz.size())
        throw ValidationError("resample: loss profile columns do not match its grid");

    const auto &x = profile.freqs_hz;
    LinkBudget out;
    out.p_out_dbm = profile.p_out_dbm;
    out.freqs_hz.assign(target_freqs_hz.begin(), target_freqs_hz.end());
    for (double f : target_freqs_hz)
    {
        if (f < x.front() || f > x.back())
            throw ValidationError("resample: target frequency " + format_double(f) + " outside the profile span");
        auto it = std::lower_bound(x.begin(), x.end(), f);
        std::size_t hi = static_cast<std::size_t>(it - x.begin());
        if (x[hi] == f)
        {
            out.l_cal_db.push_back(profile.l_cal_db[hi]);
            out.l_eff_db.push_back(profile.l_eff_db[hi]);
            continue;
        }
        const std::size_t lo = hi - 1;
        const double w = (f - x[lo]) / (x[hi] - x[lo]);
        out.l_cal_db.push_back(profile.l_cal_db[lo] + w * (profile.l_cal_db[hi] - profile.l_cal_db[lo]));
        out.l_eff_db.push_back(profile.l_eff_db[lo] + w * (profile.l_eff_db[hi] - profile.l_eff_db[lo]));
    }
    return out;
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw IoError("read failure on " + path.string());
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out)
        throw IoError("write failure on " + path.string());
}

} // namespace rcstats
