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

#include <cmath>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "rcstats/error.hpp"
#include "rcstats/kfactor.hpp"
#include "rcstats/rician.hpp"
#include "rcstats/synth.hpp"

using namespace rcstats;
using C = std::complex<double>;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

std::vector<C> draw(double k, double omega, std::size_t n, std::uint64_t seed, double phase = 0.0)
{
    CounterRng r(seed, 0);
    return sample_complex(RicianParams::from_k_omega(k, omega), n, r, phase);
}

double mean_power(const std::vector<C> &v)
{
    double p = 0.0;
    for (const auto &x : v)
        p += std::norm(x);
    return p / static_cast<double>(v.size());
}

} // namespace

TEST_CASE("normalize_s21", "[kfactor]")
{
    const auto v = draw(2.0, 3.0, 600, 1);
    const auto same = normalize_s21(v, mean_power(v));
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK_THAT(std::abs(same[i] - v[i]), WithinAbs(0.0, 1e-14));

    const std::vector<C> four{C(2, 0), C(0, 2), C(-2, 0), C(0, -2)};
    const auto halved = normalize_s21(four, 1.0);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK_THAT(std::abs(halved[i]), WithinRel(1.0, 1e-15));

    CounterRng r(2, 2);
    for (int t = 0; t < 50; ++t)
    {
        const double target = std::pow(10.0, 10.0 * (r.uniform() - 0.5));
        CHECK_THAT(mean_power(normalize_s21(draw(r.uniform() * 10, 1e-6, 64, 10 + t), target)),
                   WithinRel(target, 1e-12));
    }
    CHECK_THROWS_AS(normalize_s21(std::vector<C>(5, C(0.0)), 1.0), DegenerateDataError);
    CHECK_THROWS_AS(normalize_s21(v, 0.0), ValidationError);
}

TEST_CASE("estimate_k on zero-mean input", "[kfactor]")
{
    std::vector<C> v;
    const auto half = draw(0.0, 1.0, 300, 3);
    for (const auto &x : half)
    {
        v.push_back(x);
        v.push_back(-x);
    }
    const KEstimate e = estimate_k(v, 600);
    CHECK(e.k2_hat == 0.0);
    CHECK_THAT(e.k_hat_linear, WithinAbs(-1.0 / 600.0, 1e-12));
    CHECK(e.excluded);
}

TEST_CASE("estimate_k rejects degenerate input", "[kfactor]")
{
    CHECK_THROWS_AS(estimate_k(std::vector<C>(600, C(0.3, -0.2)), 600), DegenerateDataError);
    CHECK_THROWS_AS(estimate_k(draw(1.0, 1.0, 600, 4), 2), ValidationError);
    CHECK_THROWS_AS(estimate_k(std::vector<C>{C(1.0)}, 3), ValidationError);
}

TEST_CASE("estimate_k matches the moment formula", "[kfactor]")
{
    for (double k : {0.0, 0.5, 10.0, 1000.0})
        for (std::size_t n_eff : {3u, 100u, 600u})
        {
            const auto v = draw(k, 2.0, 600, 5 + n_eff);
            const KEstimate e = estimate_k(v, n_eff);
            CHECK_THAT(e.k_hat_linear, WithinAbs(oracle::k_hat(v, n_eff), 1e-10 * std::max(1.0, k)));
            CHECK(e.excluded == (e.k_hat_linear < 0.0));
            CHECK(e.n_eff == n_eff);
        }
}

TEST_CASE("estimate_k is invariant to a common complex scale", "[kfactor][property]")
{
    const auto v = draw(3.0, 1.0, 600, 6, 0.4);
    const double k = estimate_k(v, 600).k_hat_linear;
    for (C c : {C(2.0, 0.0), C(0.0, -1e-4), C(1e3, 5e2)})
    {
        auto w = v;
        for (auto &x : w)
            x *= c;
        CHECK_THAT(estimate_k(w, 600).k_hat_linear, WithinRel(k, 1e-10));
    }
    CHECK_THAT(estimate_k(normalize_s21(v, 7.0), 600).k_hat_linear, WithinRel(k, 1e-12));
}

TEST_CASE("estimate_k is unbiased", "[kfactor][property]")
{
    const int trials = 20000;
    for (double k : {0.0, 1.0, 10.0, 100.0})
    {
        double s = 0.0, s2 = 0.0;
        for (int t = 0; t < trials; ++t)
        {
            CounterRng r(77, static_cast<std::uint64_t>(t));
            const double x = estimate_k(sample_complex(RicianParams::from_k_omega(k, 1.0), 600, r), 600).k_hat_linear;
            s += x;
            s2 += x * x;
        }
        const double mean = s / trials;
        const double se = std::sqrt((s2 / trials - mean * mean) / trials);
        INFO("K = " << k << " mean = " << mean << " se = " << se);
        CHECK(std::abs(mean - k) < 3.0 * se);
    }
}

TEST_CASE("k_ci shrinks at high K and saturates at low K", "[kfactor]")
{
    KIntervalOptions o;
    o.trials = 10000;
    o.seed = 3;
    const auto hi = k_ci(1000.0, 600, o);
    CHECK(hi.high_db - hi.low_db < 1.0);
    CHECK(hi.contains_linear(1000.0));
    CHECK_FALSE(hi.lower_saturated);

    const auto lo = k_ci(db_to_linear(-25.0), 600, o);
    CHECK(lo.lower_saturated);
    CHECK(std::isinf(lo.low_db));
    CHECK(lo.low_db < 0.0);
    CHECK(k_ci(0.0, 600, o).lower_saturated);

    const auto [a, b] = k_ci_db(10.0, 600, o);
    CHECK(a < 10.0);
    CHECK(b > 10.0);
}

TEST_CASE("k_ci is deterministic per seed", "[kfactor]")
{
    KIntervalOptions o;
    o.trials = 10000;
    o.seed = 12;
    const auto a = k_ci(2.0, 600, o);
    const auto b = k_ci(2.0, 600, o);
    CHECK(a.low_linear == b.low_linear);
    CHECK(a.high_linear == b.high_linear);
    o.seed = 13;
    CHECK(k_ci(2.0, 600, o).low_linear != a.low_linear);
}

TEST_CASE("k_ci validates its arguments", "[kfactor]")
{
    KIntervalOptions o;
    o.trials = 9999;
    CHECK_THROWS_AS(k_ci(1.0, 600, o), ValidationError);
    o.trials = 10000;
    CHECK_THROWS_AS(k_ci(-1.0, 600, o), ValidationError);
    o.level = 1.0;
    CHECK_THROWS_AS(k_ci(1.0, 600, o), ValidationError);
}

TEST_CASE("KIntervalTable reproduces its nodes and interpolates between them", "[kfactor]")
{
    KIntervalOptions o;
    o.trials = 10000;
    o.seed = 4;
    const KIntervalTable t(0.0, 10.0, 5.0, 600, o);
    REQUIRE(t.size() == 3);
    const auto direct = k_ci(db_to_linear(5.0), 600, o);
    CHECK_THAT(t(db_to_linear(5.0)).low_linear, WithinRel(direct.low_linear, 1e-9));
    CHECK_THAT(t(db_to_linear(5.0)).high_linear, WithinRel(direct.high_linear, 1e-9));
    const auto mid = t(db_to_linear(7.5));
    CHECK(mid.low_db > t(db_to_linear(5.0)).low_db);
    CHECK(mid.low_db < t(db_to_linear(10.0)).low_db);
    CHECK(t(-0.01).lower_saturated);
    CHECK(t(0.0).high_linear == k_ci(0.0, 600, o).high_linear);
}

TEST_CASE("decompose_case on a flat K = 1 case", "[kfactor]")
{
    SynthScenario sc;
    sc.params_at_f0 = RicianParams::from_k_omega(1.0, 2.0);
    const auto grid = uniform_grid(26.5e9, 10e6, 101);
    const auto sweep = synth_sweep(sc, grid, 600, 21);
    const auto d = decompose_case(sweep, LinkBudget::lossless(grid), 600);
    REQUIRE(d.n_usable() == 101);
    double pd = 0.0, ps = 0.0;
    for (std::size_t i = 0; i < 101; ++i)
    {
        CHECK_THAT(d.p_d_mw[i] + d.p_s_mw[i], WithinRel(d.omega_mw[i], 1e-12));
        CHECK_THAT(d.p_d_mw[i] / d.p_s_mw[i], WithinRel(d.k_hat[i], 1e-12));
        pd += d.p_d_mw[i];
        ps += d.p_s_mw[i];
    }
    // Per-FS p_d has a few percent spread at K = 1, n = 600.
    CHECK_THAT(pd / 101.0, WithinAbs(1.0, 0.03));
    CHECK_THAT(ps / 101.0, WithinAbs(1.0, 0.03));
}

TEST_CASE("decompose_case applies the link budget to omega only", "[kfactor]")
{
    SynthScenario sc;
    sc.params_at_f0 = RicianParams::from_k_omega(3.0, 1e-6);
    const auto grid = uniform_grid(26.9e9, 10e6, 21);
    const auto sweep = synth_sweep(sc, grid, 200, 5);
    const auto a = decompose_case(sweep, LinkBudget::lossless(grid, 0.0), 200);
    LinkBudget b = LinkBudget::lossless(grid, 10.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        b.l_cal_db[i] = 3.0 + 0.1 * static_cast<double>(i);
        b.l_eff_db[i] = 1.0;
    }
    const auto c = decompose_case(sweep, b, 200);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        CHECK_THAT(c.k_hat[i], WithinRel(a.k_hat[i], 1e-12));
        CHECK_THAT(10.0 * std::log10(c.omega_mw[i] / a.omega_mw[i]), WithinAbs(10.0 - 4.0 - 0.1 * i, 1e-9));
    }
}

TEST_CASE("decompose_case excludes negative estimates at the expected rate", "[kfactor]")
{
    SynthScenario sc;
    sc.params_at_f0 = RicianParams::from_k_db_omega(-30.0, 1.0);
    const auto grid = default_grid();
    const auto sweep = synth_sweep(sc, grid, 600, 8);
    const auto d = decompose_case(sweep, LinkBudget::lossless(grid), 600);

    // Brute-force probability that the estimate falls below zero at this K.
    int neg = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t)
    {
        CounterRng r(999, static_cast<std::uint64_t>(t));
        if (oracle::k_hat(sample_complex(RicianParams::from_k_db_omega(-30.0, 1.0), 600, r), 600) < 0.0)
            ++neg;
    }
    const double p = static_cast<double>(neg) / trials;
    const double frac = static_cast<double>(d.n_negative()) / static_cast<double>(grid.size());
    INFO("P(K < 0) = " << p << ", excluded fraction = " << frac);
    CHECK(p > 0.0);
    CHECK(std::abs(frac - p) < 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(grid.size())) + 0.005);

    const auto mask = d.excluded_mask();
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        CHECK(mask[i] == (d.k_hat[i] < 0.0));
        if (mask[i])
        {
            CHECK(std::isnan(d.p_d_mw[i]));
            CHECK(std::isnan(d.p_s_mw[i]));
            CHECK(std::isnan(d.omega_mw[i]));
        }
    }
}

TEST_CASE("decompose_case flags pure LOS frequencies as degenerate", "[kfactor]")
{
    SynthScenario sc;
    sc.params_at_f0 = RicianParams::pure_los(1.0);
    const auto grid = uniform_grid(26.9e9, 10e6, 21);
    const auto d = decompose_case(synth_sweep(sc, grid, 100, 1), LinkBudget::lossless(grid), 100);
    CHECK(d.n_usable() == 0);
    for (auto s : d.status)
        CHECK(s == FsStatus::degenerate);
}
