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

// rcstats command-line front end.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rcstats/analysis.hpp"
#include "rcstats/error.hpp"
#include "rcstats/freq_fit.hpp"
#include "rcstats/gof.hpp"
#include "rcstats/io.hpp"
#include "rcstats/kfactor.hpp"
#include "rcstats/parallel.hpp"
#include "rcstats/report.hpp"
#include "rcstats/synth.hpp"

using namespace rcstats;
using ojson = nlohmann::ordered_json;

namespace
{

struct Globals
{
    std::uint64_t seed = 0;
    int threads = 0;
    std::string threshold_mode = "fixed_1_over_e";
    double alpha = 0.05;
    double mctol = 0.01;
    std::string format = "json";
};

/// Writes to a file, or to stdout when path is empty or "-".
void emit(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-")
    {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw IoError("write failure on stdout");
    }
    else
        write_text_file(path, text);
}

ojson json_num(double v)
{
    return std::isfinite(v) ? ojson(v) : ojson(format_double(v));
}

// ---- synth --------------------------------------------------------------

struct SynthArgs
{
    std::string scenario;
    std::string out_csv;
    std::string out_manifest;
    std::string noise_out;
    double p_out_dbm = 10.0;
    std::optional<std::size_t> n_sp;
    std::optional<std::size_t> n_fs;
    std::optional<double> f_start_hz;
    std::optional<double> f_step_hz;
};

double get_or(const ojson &j, const char *key, double fallback)
{
    return j.contains(key) ? j.at(key).get<double>() : fallback;
}

/*
 * Scenario file:
 * {
 *   "case_id": 1, "config": {"absorbers": "NoAs", "excitation": "RaC", "switch": "PS1", "attenuation": "NAT"},
 *   "k_db": 10 | "k_linear": 10,  "omega_mw": 1e-6 | "omega_dbm": -60
 *     (or "p_d_mw" and "p_s_mw"; p_s_mw = 0 gives a pure line-of-sight case),
 *   "f0_hz": 27e9, "n_d": -2, "n_s": -1,
 *   "phase": {"kind": "constant" | "linear_delay", "phase0_rad": 0, "delay_s": 0},
 *   "noise_floor_dbm": -96.3,
 *   "grid": {"f_start_hz": 24.25e9, "f_step_hz": 1e7, "n_fs": 526}, "n_sp": 600
 * }
 * Every field is optional; defaults give a flat K = 0 dB, 0 dBm case on the default grid.
 */
void run_synth(const SynthArgs &a, const Globals &g)
{
    ojson j;
    try
    {
        j = ojson::parse(read_text_file(a.scenario));
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ValidationError(std::string("scenario: invalid JSON: ") + e.what());
    }

    SynthScenario s;
    std::vector<double> grid;
    std::size_t n_sp = default_n_sp;
    try
    {
        if (j.contains("case_id"))
        {
            const auto &id = j.at("case_id");
            s.config.case_id = id.is_string() ? id.get<std::string>() : std::to_string(id.get<long long>());
        }
        if (j.contains("config"))
        {
            const auto &c = j.at("config");
            s.config.absorbers = parse_absorbers(c.value("absorbers", std::string("NoAs")));
            s.config.excitation = parse_excitation(c.value("excitation", std::string("R")));
            s.config.pol_switch = parse_switch(c.value("switch", std::string("PSX")));
            s.config.attenuation = parse_attenuation(c.value("attenuation", std::string("NAT")));
        }
        s.config.validate();

        if (j.contains("p_d_mw") || j.contains("p_s_mw"))
        {
            const double p_d = j.at("p_d_mw").get<double>();
            const double p_s = j.at("p_s_mw").get<double>();
            s.params_at_f0 = p_s == 0.0 ? RicianParams::pure_los(p_d) : RicianParams::from_powers(p_d, p_s);
        }
        else
        {
            const double omega = j.contains("omega_dbm") ? db_to_linear(j.at("omega_dbm").get<double>())
                                                         : get_or(j, "omega_mw", 1.0);
            const double k = j.contains("k_db") ? db_to_linear(j.at("k_db").get<double>()) : get_or(j, "k_linear", 1.0);
            s.params_at_f0 = RicianParams::from_k_omega(k, omega);
        }
        s.f0_hz = get_or(j, "f0_hz", default_f0_hz);
        s.n_d = get_or(j, "n_d", 0.0);
        s.n_s = get_or(j, "n_s", 0.0);
        if (j.contains("phase"))
        {
            const auto &ph = j.at("phase");
            const std::string kind = ph.value("kind", std::string("constant"));
            if (kind == "constant")
                s.phase_d.kind = PhaseLaw::Kind::constant;
            else if (kind == "linear_delay")
                s.phase_d.kind = PhaseLaw::Kind::linear_delay;
            else
                throw ValidationError("scenario: unknown phase kind '" + kind + "'");
            s.phase_d.phase0_rad = get_or(ph, "phase0_rad", 0.0);
            s.phase_d.delay_s = get_or(ph, "delay_s", 0.0);
        }
        if (j.contains("noise_floor_dbm") && !j.at("noise_floor_dbm").is_null())
            s.noise_floor_dbm = j.at("noise_floor_dbm").get<double>();

        double f_start = default_f_start_hz;
        double f_step = default_f_step_hz;
        std::size_t n_fs = default_n_fs;
        if (j.contains("grid"))
        {
            const auto &gr = j.at("grid");
            f_start = get_or(gr, "f_start_hz", f_start);
            f_step = get_or(gr, "f_step_hz", f_step);
            n_fs = gr.value("n_fs", n_fs);
        }
        n_sp = j.value("n_sp", n_sp);
        grid = uniform_grid(a.f_start_hz.value_or(f_start), a.f_step_hz.value_or(f_step), a.n_fs.value_or(n_fs));
        n_sp = a.n_sp.value_or(n_sp);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ValidationError(std::string("scenario: ") + e.what());
    }

    const ComplexSweep sweep = synth_sweep(s, grid, n_sp, g.seed);
    std::ostringstream csv;
    write_sweep_csv(csv, sweep);
    emit(a.out_csv, csv.str());
    write_text_file(a.out_manifest, manifest_to_json(manifest_for(sweep)));
    if (!a.noise_out.empty())
    {
        if (!s.noise_floor_dbm)
            throw ValidationError("--noise-out needs noise_floor_dbm in the scenario");
        // Receiver noise referred to the same source power that analyze applies.
        std::ostringstream nl;
        write_noise_profile(nl, NoiseProfile::flat(grid, *s.noise_floor_dbm + a.p_out_dbm));
        write_text_file(a.noise_out, nl.str());
    }
}

// ---- analyze ------------------------------------------------------------

struct AnalyzeArgs
{
    std::string sweep;
    std::string manifest;
    std::string loss;
    std::string noise;
    double p_out_dbm = 10.0;
    std::string out;
    std::string series_out;
    bool no_gof = false;
    std::size_t gof_stride = 1;
    std::size_t min_bootstrap = 1000;
    double f0_hz = default_f0_hz;
};

void run_analyze(const AnalyzeArgs &a, const Globals &g)
{
    const ComplexSweep sweep = load_sweep(a.sweep, a.manifest);
    const LinkBudget budget = a.loss.empty() ? LinkBudget::lossless(sweep.freqs_hz(), a.p_out_dbm)
                                             : load_loss_profile(a.loss, a.p_out_dbm);
    std::optional<NoiseProfile> noise;
    if (!a.noise.empty())
        noise = load_noise_profile(a.noise);

    AnalysisOptions o;
    o.threshold_mode = parse_threshold_mode(g.threshold_mode);
    o.run_gof = !a.no_gof;
    o.alpha = g.alpha;
    o.mctol = g.mctol;
    o.min_bootstrap = a.min_bootstrap;
    o.gof_stride = a.gof_stride;
    o.f0_hz = a.f0_hz;
    o.seed = g.seed;
    const CaseAnalysis res = analyze_case(sweep, budget, noise, o);

    emit(a.out, emit_report({res.report}, parse_report_format(g.format)));
    if (!a.series_out.empty())
        write_text_file(a.series_out, emit_series_csv(res.series));
}

// ---- gof ----------------------------------------------------------------

struct GofArgs
{
    std::string samples;
    std::string sweep;
    std::string manifest;
    std::size_t freq_index = 0;
    std::string family = "both";
    std::size_t min_bootstrap = 1000;
    std::string out;
};

void run_gof(const GofArgs &a, const Globals &g)
{
    std::vector<std::complex<double>> data;
    if (!a.samples.empty())
    {
        std::ifstream in(a.samples);
        if (!in)
            throw IoError("cannot open samples file " + a.samples);
        data = parse_samples_csv(in);
    }
    else if (!a.sweep.empty())
    {
        const ComplexSweep sweep = load_sweep(a.sweep, a.manifest);
        const auto s = sweep.frequency_samples(a.freq_index);
        data.assign(s.begin(), s.end());
    }
    else
        throw ValidationError("gof: give --samples or --sweep with --manifest");

    std::vector<NullFamily> families;
    if (a.family == "both")
        families = {NullFamily::rayleigh, NullFamily::rician};
    else
        families = {parse_null_family(a.family)};

    ojson out = ojson::array();
    for (NullFamily f : families)
    {
        GofConfig cfg;
        cfg.alpha = g.alpha;
        cfg.mctol = g.mctol;
        cfg.min_bootstrap = a.min_bootstrap;
        cfg.family = f;
        cfg.seed = g.seed;
        const GofResult r = bootstrap_ad_test(data, cfg);
        ojson j;
        j["family"] = to_string(f);
        j["n_samples"] = data.size();
        j["a2_statistic"] = json_num(r.a2_statistic);
        j["p_value"] = json_num(r.p_value);
        j["reject"] = r.reject;
        j["alpha"] = cfg.alpha;
        j["n_bootstrap_used"] = r.n_bootstrap_used;
        j["fitted_k_linear"] = json_num(r.fitted.k_linear());
        j["fitted_omega"] = json_num(r.fitted.omega());
        j["fit_method"] = std::string(r.fit_method);
        out.push_back(j);
    }
    emit(a.out, out.dump(2) + "\n");
}

// ---- fit ----------------------------------------------------------------

struct FitArgs
{
    std::string series;
    double f0_hz = default_f0_hz;
    std::string out;
};

void run_fit(const FitArgs &a)
{
    std::ifstream in(a.series);
    if (!in)
        throw IoError("cannot open series file " + a.series);
    const Series s = parse_series_csv(in);
    const FitResult f = fit_loglinear(s.freqs_hz, s.values_db, s.excluded, a.f0_hz);
    ojson j;
    j["a"] = json_num(f.a);
    j["n"] = json_num(f.n);
    j["r2"] = json_num(f.r2);
    j["f0_hz"] = f.f0_hz;
    j["n_points_used"] = f.n_points_used;
    emit(a.out, j.dump(2) + "\n");
}

// ---- simulate -----------------------------------------------------------

struct CiArgs
{
    std::vector<double> k_db{-30, -25, -20, -18, -15, -10, -5, 0, 5, 10, 20, 30, 40};
    std::size_t n = default_n_sp;
    std::size_t trials = 20000;
    double level = 0.95;
    std::string out;
};

void run_simulate_ci(const CiArgs &a, const Globals &g)
{
    KIntervalOptions o;
    o.level = a.level;
    o.trials = a.trials;
    o.seed = g.seed;
    std::string csv = "k_db,ci_low_db,ci_high_db,ci_low_linear,ci_high_linear,lower_saturated\n";
    for (double k : a.k_db)
    {
        const KInterval ci = k_ci(db_to_linear(k), a.n, o);
        csv += format_double(k) + ',' + format_double(ci.low_db) + ',' + format_double(ci.high_db) + ',' +
               format_double(ci.low_linear) + ',' + format_double(ci.high_linear) + ',' +
               (ci.lower_saturated ? "1" : "0") + '\n';
    }
    emit(a.out, csv);
}

struct PrArgs
{
    std::vector<double> k_db{-10, 0, 10, 20, 30};
    std::size_t n_samples = default_n_sp;
    std::size_t trials = 1000;
    std::string family = "rician";
    std::size_t min_bootstrap = 1000;
    std::string out;
};

void run_simulate_pr(const PrArgs &a, const Globals &g)
{
    GofConfig cfg;
    cfg.alpha = g.alpha;
    cfg.mctol = g.mctol;
    cfg.min_bootstrap = a.min_bootstrap;
    cfg.family = parse_null_family(a.family);
    cfg.seed = g.seed;
    const auto curve = simulate_pass_rate_curve(a.k_db, a.n_samples, a.trials, cfg);
    std::string csv = "k_db,pass_rate,n_trials\n";
    for (const auto &p : curve)
        csv += format_double(p.k_db) + ',' + format_double(p.pass_rate) + ',' + std::to_string(p.n_trials) + '\n';
    emit(a.out, csv);
}

// ---- report -------------------------------------------------------------

struct ReportArgs
{
    std::vector<std::string> inputs;
    std::string out;
    std::string sorted_k_out;
};

void run_report(const ReportArgs &a, const Globals &g)
{
    std::vector<CaseReport> all;
    for (const auto &path : a.inputs)
    {
        const std::string text = read_text_file(path);
        const bool is_json = text.find_first_not_of(" \t\r\n") != std::string::npos &&
                             text[text.find_first_not_of(" \t\r\n")] == '{';
        auto part = is_json ? parse_report_json(text) : parse_report_csv(text);
        all.insert(all.end(), part.begin(), part.end());
    }
    emit(a.out, emit_report(all, parse_report_format(g.format)));
    if (!a.sorted_k_out.empty())
    {
        const SortedKTable t = sorted_k_table(all);
        write_text_file(a.sorted_k_out, emit_sorted_k_csv(t));
        std::cerr << "sorted K: " << t.entries.size() << " cases, mean increment "
                  << format_double(t.mean_increment_db) << " dB, max increment " << format_double(t.max_increment_db)
                  << " dB\n";
    }
}

// ---- resample-profile ---------------------------------------------------

struct ResampleArgs
{
    std::string loss;
    std::string manifest;
    std::string out;
};

void run_resample(const ResampleArgs &a)
{
    const LinkBudget in = load_loss_profile(a.loss, 0.0);
    const SweepManifest m = parse_manifest(read_text_file(a.manifest));
    std::ostringstream os;
    write_loss_profile(os, resample_loss_profile(in, m.grid()));
    emit(a.out, os.str());
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"rcstats: Rician channel statistics for hybrid reverberation chamber sweeps"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Master seed for every random stream");
    app.add_option("--threads", g.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_option("--threshold-mode", g.threshold_mode, "fixed_1_over_e | significance_95");
    app.add_option("--alpha", g.alpha, "GoF significance level");
    app.add_option("--mctol", g.mctol, "Target standard error of bootstrap p-values");
    app.add_option("--format", g.format, "Report format: json | csv");

    SynthArgs sa;
    auto *synth = app.add_subcommand("synth", "Generate a synthetic sweep from a scenario file");
    synth->add_option("--scenario", sa.scenario, "Scenario JSON")->required();
    synth->add_option("--out", sa.out_csv, "Sweep CSV (default stdout)");
    synth->add_option("--manifest", sa.out_manifest, "Manifest JSON to write")->required();
    synth->add_option("--noise-out", sa.noise_out, "Also write the scenario noise level as a noise profile");
    synth->add_option("--p-out-dbm", sa.p_out_dbm, "Source power assumed by --noise-out");
    synth->add_option("--n-sp", sa.n_sp, "Override stirrer positions");
    synth->add_option("--n-fs", sa.n_fs, "Override frequency count");
    synth->add_option("--f-start-hz", sa.f_start_hz, "Override grid start");
    synth->add_option("--f-step-hz", sa.f_step_hz, "Override grid step");

    AnalyzeArgs aa;
    auto *analyze = app.add_subcommand("analyze", "Run the per-case pipeline and emit a report");
    analyze->add_option("--sweep", aa.sweep, "Sweep CSV")->required();
    analyze->add_option("--manifest", aa.manifest, "Manifest JSON")->required();
    analyze->add_option("--loss", aa.loss, "Loss profile CSV on the sweep grid (default: no losses)");
    analyze->add_option("--noise", aa.noise, "Noise profile CSV (levels or raw samples)");
    analyze->add_option("--p-out-dbm", aa.p_out_dbm, "Source power");
    analyze->add_option("--out", aa.out, "Report file (default stdout)");
    analyze->add_option("--series", aa.series_out, "Per-frequency series CSV");
    analyze->add_flag("--no-gof", aa.no_gof, "Skip the bootstrap tests");
    analyze->add_option("--gof-stride", aa.gof_stride, "Test every n-th usable frequency")->check(CLI::PositiveNumber);
    analyze->add_option("--min-bootstrap", aa.min_bootstrap, "Minimum bootstrap replicates");
    analyze->add_option("--f0-hz", aa.f0_hz, "Reference frequency of the fits");

    GofArgs ga;
    auto *gof = app.add_subcommand("gof", "Bootstrap Anderson-Darling test on one frequency");
    gof->add_option("--samples", ga.samples, "CSV s21_re,s21_im");
    gof->add_option("--sweep", ga.sweep, "Sweep CSV");
    gof->add_option("--manifest", ga.manifest, "Manifest JSON");
    gof->add_option("--freq-index", ga.freq_index, "Frequency index in the sweep");
    gof->add_option("--family", ga.family, "rayleigh | rician | both");
    gof->add_option("--min-bootstrap", ga.min_bootstrap, "Minimum bootstrap replicates");
    gof->add_option("--out", ga.out, "Result JSON (default stdout)");

    FitArgs fa;
    auto *fit = app.add_subcommand("fit", "Fit y_dB = A + 10 n log10(f/f0) to a series");
    fit->add_option("--series", fa.series, "CSV freq_hz,value_db[,excluded]")->required();
    fit->add_option("--f0-hz", fa.f0_hz, "Reference frequency");
    fit->add_option("--out", fa.out, "Result JSON (default stdout)");

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo curves");
    simulate->require_subcommand(1);
    CiArgs ca;
    auto *sim_ci = simulate->add_subcommand("ci", "Estimator interval versus true K");
    sim_ci->add_option("--k-db", ca.k_db, "True K values in dB");
    sim_ci->add_option("--n", ca.n, "Samples per dataset");
    sim_ci->add_option("--trials", ca.trials, "Datasets per K (>= 10000)");
    sim_ci->add_option("--level", ca.level, "Interval level");
    sim_ci->add_option("--out", ca.out, "CSV (default stdout)");
    PrArgs pa;
    auto *sim_pr = simulate->add_subcommand("pr", "GoF pass rate versus true K");
    sim_pr->add_option("--k-db", pa.k_db, "True K values in dB (-inf for Rayleigh data)");
    sim_pr->add_option("--n-samples", pa.n_samples, "Samples per dataset");
    sim_pr->add_option("--trials", pa.trials, "Datasets per K");
    sim_pr->add_option("--family", pa.family, "Null family: rayleigh | rician");
    sim_pr->add_option("--min-bootstrap", pa.min_bootstrap, "Minimum bootstrap replicates");
    sim_pr->add_option("--out", pa.out, "CSV (default stdout)");

    ReportArgs ra;
    auto *report = app.add_subcommand("report", "Aggregate case reports and build the sorted-K table");
    report->add_option("--inputs", ra.inputs, "Report files (JSON or CSV)")->required();
    report->add_option("--out", ra.out, "Aggregated report (default stdout)");
    report->add_option("--sorted-k", ra.sorted_k_out, "Sorted-K table CSV");

    ResampleArgs rsa;
    auto *resample = app.add_subcommand("resample-profile", "Interpolate a loss profile onto a sweep grid");
    resample->add_option("--loss", rsa.loss, "Loss profile CSV")->required();
    resample->add_option("--manifest", rsa.manifest, "Manifest JSON giving the target grid")->required();
    resample->add_option("--out", rsa.out, "Resampled profile (default stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::validation);
    }

    try
    {
        if (g.threads > 0)
            set_thread_count(g.threads);
        if (*synth)
            run_synth(sa, g);
        else if (*analyze)
            run_analyze(aa, g);
        else if (*gof)
            run_gof(ga, g);
        else if (*fit)
            run_fit(fa);
        else if (*sim_ci)
            run_simulate_ci(ca, g);
        else if (*sim_pr)
            run_simulate_pr(pa, g);
        else if (*report)
            run_report(ra, g);
        else if (*resample)
            run_resample(rsa);
    }
    catch (const Error &e)
    {
        std::cerr << "rcstats: " << e.what() << '\n';
        return static_cast<int>(e.code());
    }
    catch (const std::exception &e)
    {
        std::cerr << "rcstats: " << e.what() << '\n';
        return static_cast<int>(ExitCode::numerical);
    }
    return 0;
}
