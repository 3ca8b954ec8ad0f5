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
#include <complex>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "rcstats/error.hpp"
#include "rcstats/gof.hpp"
#include "rcstats/kfactor.hpp"
#include "rcstats/power_snr.hpp"
#include "rcstats/rng.hpp"

using namespace rcstats;
using C = std::complex<double>;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

std::vector<C> draw(double k, std::size_t n, std::uint64_t seed)
{
    CounterRng r(seed, 1);
    return sample_complex(RicianParams::from_k_omega(k, 1.0), n, r);
}

GofConfig quick(NullFamily f, std::uint64_t seed)
{
    GofConfig c;
    c.family = f;
    c.seed = seed;
    c.min_bootstrap = 200;
    c.batch_size = 100;
    c.mctol = 0.03;
    return c;
}

} // namespace

TEST_CASE("ad_statistic on four points", "[gof]")
{
    const std::vector<double> u{0.125, 0.375, 0.625, 0.875};
    CHECK_THAT(ad_statistic(u), WithinRel(oracle::ad_direct(u), 1e-14));
}

TEST_CASE("ad_statistic matches the direct sum on random input", "[gof]")
{
    CounterRng r(5, 0);
    for (int t = 0; t < 50; ++t)
    {
        std::vector<double> u(2 + t * 13);
        for (auto &x : u)
            x = r.uniform();
        std::sort(u.begin(), u.end());
        CHECK_THAT(ad_statistic(u), WithinRel(oracle::ad_direct(u), 1e-12));
    }
}

TEST_CASE("ad_statistic has mean one for uniform input", "[gof][property]")
{
    const int trials = 10000;
    double s = 0.0, s2 = 0.0;
    std::vector<double> u(600);
    for (int t = 0; t < trials; ++t)
    {
        CounterRng r(6, static_cast<std::uint64_t>(t));
        for (auto &x : u)
            x = r.uniform();
        std::sort(u.begin(), u.end());
        const double a = ad_statistic(u);
        s += a;
        s2 += a * a;
    }
    const double mean = s / trials;
    const double se = std::sqrt((s2 / trials - mean * mean) / trials);
    INFO("mean " << mean << " se " << se);
    CHECK(std::abs(mean - 1.0) < 3.0 * se);
}

TEST_CASE("ad_statistic is symmetric under reflection", "[gof][property]")
{
    CounterRng r(7, 0);
    for (int t = 0; t < 20; ++t)
    {
        std::vector<double> u(100);
        for (auto &x : u)
            x = r.uniform();
        std::sort(u.begin(), u.end());
        std::vector<double> v(u.size());
        std::transform(u.rbegin(), u.rend(), v.begin(), [](double x) { return 1.0 - x; });
        CHECK_THAT(ad_statistic(v), WithinRel(ad_statistic(u), 1e-12));
    }
}

TEST_CASE("ad_statistic from cdf and survival values", "[gof]")
{
    const std::vector<double> u{0.1, 0.2, 0.5, 0.9};
    std::vector<double> sf(u.size());
    std::transform(u.begin(), u.end(), sf.begin(), [](double x) { return 1.0 - x; });
    CHECK_THAT(ad_statistic(u, sf), WithinRel(ad_statistic(u), 1e-14));

    // Saturated values are clamped instead of producing infinities.
    const std::vector<double> c{0.0, 0.3, 0.6, 1.0};
    const std::vector<double> s{1.0, 0.7, 0.4, 0.0};
    const double a = ad_statistic(c, s);
    CHECK(std::isfinite(a));
    CHECK(a > 0.0);
}

TEST_CASE("ad_statistic rejects invalid input", "[gof]")
{
    CHECK_THROWS_AS(ad_statistic(std::vector<double>{0.0, 0.5}), DomainError);
    CHECK_THROWS_AS(ad_statistic(std::vector<double>{0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(ad_statistic(std::vector<double>{0.6, 0.5}), ValidationError);
    CHECK_THROWS_AS(ad_statistic(std::vector<double>{0.5}), ValidationError);
}

TEST_CASE("ad_statistic_for matches an integrated Rician cdf", "[gof]")
{
    for (double k : {0.0, 0.8, 20.0})
    {
        const auto v = draw(k, 40, 11);
        const double omega = 1.3;
        std::vector<double> env;
        for (const auto &x : v)
            env.push_back(std::abs(x));
        std::sort(env.begin(), env.end());
        const double a = std::sqrt(2.0 * k);
        const double scale = std::sqrt(2.0 * (k + 1.0) / omega);
        std::vector<double> u;
        for (double e : env)
            u.push_back(oracle::marcum_cdf(a, e * scale));
        CHECK_THAT(ad_statistic_for(v, RicianParams::from_k_omega(k, omega)), WithinRel(oracle::ad_direct(u), 1e-8));
    }
}

TEST_CASE("fit_null_params", "[gof]")
{
    const auto v = draw(5.0, 600, 3);
    double p = 0.0;
    for (const auto &x : v)
        p += std::norm(x);
    p /= 600.0;

    const auto ray = fit_null_params(v, NullFamily::rayleigh);
    CHECK(ray.k_linear() == 0.0);
    CHECK_THAT(ray.omega(), WithinRel(p, 1e-12));

    const auto ric = fit_null_params(v, NullFamily::rician);
    CHECK_THAT(ric.k_linear(), WithinRel(estimate_k(v, 600).k_hat_linear, 1e-12));
    CHECK_THAT(ric.omega(), WithinRel(p, 1e-12));
    KIntervalOptions o;
    o.trials = 10000;
    CHECK(k_ci(5.0, 600, o).contains_linear(ric.k_linear()));

    // Find a zero-mean-ish dataset whose estimate is negative.
    for (std::uint64_t s = 0; s < 200; ++s)
    {
        const auto z = draw(0.0, 600, 100 + s);
        if (estimate_k(z, 600).k_hat_linear < 0.0)
        {
            CHECK(fit_null_params(z, NullFamily::rician).k_linear() == 0.0);
            break;
        }
    }
    CHECK_THROWS_AS(fit_null_params(std::vector<C>(10, C(1.0, 1.0)), NullFamily::rician), NumericalError);
    CHECK_THROWS_AS(fit_null_params(std::vector<C>(10, C(0.0)), NullFamily::rayleigh), NumericalError);
}

TEST_CASE("bootstrap_ad_test rejects a uniform envelope", "[gof]")
{
    CounterRng r(9, 0);
    std::vector<C> v(600);
    for (auto &x : v)
        x = std::polar(0.5 + r.uniform(), 2.0 * std::numbers::pi * r.uniform());
    for (NullFamily f : {NullFamily::rician, NullFamily::rayleigh})
    {
        const auto res = bootstrap_ad_test(v, quick(f, 1));
        CHECK(res.p_value < 0.01);
        CHECK(res.reject);
        CHECK(res.family == f);
    }
}

TEST_CASE("bootstrap_ad_test result invariants and determinism", "[gof]")
{
    const auto v = draw(10.0, 300, 4);
    GofConfig c = quick(NullFamily::rician, 5);
    const auto a = bootstrap_ad_test(v, c);
    CHECK(a.reject == (a.p_value < c.alpha));
    CHECK(a.n_bootstrap_used >= c.min_bootstrap);
    CHECK(a.n_bootstrap_used % c.batch_size == 0);
    CHECK(a.a2_statistic > 0.0);
    const double p = a.p_value;
    CHECK((a.n_bootstrap_used == c.min_bootstrap ||
           std::sqrt(p * (1.0 - p) / static_cast<double>(a.n_bootstrap_used - c.batch_size)) >= c.mctol));

    const auto b = bootstrap_ad_test(v, c);
    CHECK(a.p_value == b.p_value);
    CHECK(a.n_bootstrap_used == b.n_bootstrap_used);

    c.mctol = 0.0;
    CHECK_THROWS_AS(bootstrap_ad_test(v, c), ValidationError);
    c.mctol = 0.01;
    c.alpha = 1.0;
    CHECK_THROWS_AS(bootstrap_ad_test(v, c), ValidationError);
}

TEST_CASE("bootstrap_ad_test is calibrated under a true Rayleigh null", "[gof]")
{
    // 300 datasets of 200 samples; rejection rate near alpha and p-values
    // roughly uniform.
    const int m = 300;
    int rejected = 0;
    std::vector<double> ps;
    for (int j = 0; j < m; ++j)
    {
        const auto v = draw(0.0, 200, 1000 + static_cast<std::uint64_t>(j));
        const auto res = bootstrap_ad_test(v, quick(NullFamily::rayleigh, static_cast<std::uint64_t>(j)));
        rejected += res.reject ? 1 : 0;
        ps.push_back(res.p_value);
    }
    const double rate = static_cast<double>(rejected) / m;
    INFO("rejection rate " << rate);
    CHECK(std::abs(rate - 0.05) < 3.0 * std::sqrt(0.05 * 0.95 / m));

    std::sort(ps.begin(), ps.end());
    double dmax = 0.0;
    for (int i = 0; i < m; ++i)
        dmax = std::max({dmax, std::abs(ps[i] - static_cast<double>(i + 1) / m), std::abs(ps[i] - static_cast<double>(i) / m)});
    INFO("max ecdf deviation " << dmax);
    CHECK(dmax < 0.1);
}

TEST_CASE("simulate_pass_rate_curve basics", "[gof]")
{
    GofConfig c = quick(NullFamily::rician, 3);
    const std::vector<double> k{-INFINITY, 30.0};
    const auto a = simulate_pass_rate_curve(k, 100, 40, c);
    REQUIRE(a.size() == 2);
    for (const auto &p : a)
    {
        CHECK(p.n_trials == 40);
        CHECK(p.pass_rate >= 0.0);
        CHECK(p.pass_rate <= 1.0);
    }
    const auto b = simulate_pass_rate_curve(k, 100, 40, c);
    CHECK(a[0].pass_rate == b[0].pass_rate);
    CHECK(a[1].pass_rate == b[1].pass_rate);
}
