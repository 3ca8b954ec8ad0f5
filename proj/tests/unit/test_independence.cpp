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
#include <numeric>
#include <vector>

#include "rcstats/error.hpp"
#include "rcstats/independence.hpp"
#include "rcstats/rng.hpp"

using namespace rcstats;
using C = std::complex<double>;
using Catch::Matchers::WithinAbs;

namespace
{

std::vector<C> iid(std::size_t n, std::uint64_t seed)
{
    CounterRng r(seed, 0);
    std::vector<C> v(n);
    for (auto &x : v)
        x = r.complex_normal();
    return v;
}

double direct_corr(const std::vector<C> &x, std::size_t lag)
{
    const std::size_t n = x.size();
    C m = 0.0;
    for (const auto &v : x)
        m += v;
    m /= static_cast<double>(n);
    C num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        num += (x[i] - m) * std::conj(x[(i + lag) % n] - m);
        den += std::norm(x[i] - m);
    }
    return std::abs(num) / den;
}

} // namespace

TEST_CASE("circular_corr matches the direct sum on a spike sequence", "[independence]")
{
    std::vector<C> x(8, C(1.0, 0.5));
    x[3] = C(4.0, -2.0);
    x[6] = C(1.5, 0.5);
    for (std::size_t lag = 1; lag < 8; ++lag)
        CHECK_THAT(circular_corr(x, lag), WithinAbs(direct_corr(x, lag), 1e-14));
}

TEST_CASE("circular_corr of a half-period repetition is one", "[independence]")
{
    auto half = iid(300, 4);
    std::vector<C> x(half);
    x.insert(x.end(), half.begin(), half.end());
    CHECK_THAT(circular_corr(x, 300), WithinAbs(1.0, 1e-12));
}

TEST_CASE("circular_corr_all covers every lag within [0, 1]", "[independence]")
{
    const auto x = iid(101, 5);
    const auto all = circular_corr_all(x);
    REQUIRE(all.size() == 100);
    for (std::size_t lag = 1; lag <= 100; ++lag)
    {
        CHECK(all[lag - 1] >= 0.0);
        CHECK(all[lag - 1] <= 1.0);
        CHECK_THAT(all[lag - 1], WithinAbs(direct_corr(x, lag), 1e-12));
    }
}

TEST_CASE("circular_corr rejects bad input", "[independence]")
{
    CHECK_THROWS_AS(circular_corr(std::vector<C>(10, C(2.0, 1.0)), 1), DegenerateDataError);
    const auto x = iid(10, 1);
    CHECK_THROWS_AS(circular_corr(x, 0), ValidationError);
    CHECK_THROWS_AS(circular_corr(x, 10), ValidationError);
    CHECK_THROWS_AS(circular_corr(std::vector<C>{C(1.0)}, 1), ValidationError);
}

TEST_CASE("thresholds", "[independence]")
{
    CHECK_THAT(correlation_threshold(ThresholdMode::fixed_1_over_e, 600), WithinAbs(std::exp(-1.0), 1e-15));
    CHECK_THAT(correlation_threshold(ThresholdMode::significance_95, 600),
               WithinAbs(std::sqrt(std::log(20.0 * 300.0) / 600.0), 1e-15));
    CHECK(parse_threshold_mode(to_string(ThresholdMode::significance_95)) == ThresholdMode::significance_95);
    CHECK_THROWS_AS(parse_threshold_mode("loose"), ValidationError);
}

TEST_CASE("iid samples are all independent", "[independence]")
{
    int full = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        if (estimate_n_eff(iid(600, seed)).n_eff == 600)
            ++full;
    CHECK(full >= 190);
}

TEST_CASE("significance_95 keeps a 5% family-wise false alarm rate", "[independence]")
{
    int full = 0;
    for (std::uint64_t seed = 1000; seed < 1400; ++seed)
        if (estimate_n_eff(iid(600, seed), ThresholdMode::significance_95).n_eff == 600)
            ++full;
    // 95% expected; binomial 3-sigma band at 400 trials is about +-3.3%.
    CHECK(full >= 367);
    CHECK(full <= 394);
}

TEST_CASE("duplicated sequences lose half their samples", "[independence]")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        auto half = iid(300, seed);
        std::vector<C> x(half);
        x.insert(x.end(), half.begin(), half.end());
        for (ThresholdMode m : {ThresholdMode::fixed_1_over_e, ThresholdMode::significance_95})
        {
            const auto r = estimate_n_eff(x, m);
            CHECK(r.n_eff <= 300);
            CHECK(r.recurrence_lag.has_value());
        }
    }
}

TEST_CASE("moving-average correlation of length 5", "[independence]")
{
    // y_i = sum of 5 consecutive innovations: |r(k)| = (5-k)/5 for k < 5.
    double sum = 0.0;
    const int seeds = 30;
    for (int s = 0; s < seeds; ++s)
    {
        const auto e = iid(604, 100 + static_cast<std::uint64_t>(s));
        std::vector<C> y(600);
        for (std::size_t i = 0; i < 600; ++i)
            for (std::size_t k = 0; k < 5; ++k)
                y[i] += e[i + k];
        const auto r = estimate_n_eff(y, ThresholdMode::significance_95);
        CHECK(r.first_exceeding_lag == 1u);
        // lag 4 sits at |r| = 0.2, close enough to the threshold to flip.
        CHECK(r.correlation_length >= 4);
        CHECK(r.correlation_length <= 6);
        sum += static_cast<double>(r.n_eff);
    }
    CHECK(std::abs(sum / seeds - 120.0) < 20.0);
}

TEST_CASE("n_eff is invariant to complex scaling and to permutation of iid data", "[independence][property]")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        auto x = iid(600, 500 + seed);
        const auto base = estimate_n_eff(x).n_eff;
        auto y = x;
        for (auto &v : y)
            v *= C(-3.0, 7.5);
        CHECK(estimate_n_eff(y).n_eff == base);

        CounterRng r(seed, 77);
        for (std::size_t i = x.size() - 1; i > 0; --i)
            std::swap(x[i], x[r() % (i + 1)]);
        CHECK(estimate_n_eff(x).n_eff == 600);
    }
}

TEST_CASE("estimate_n_eff result fields", "[independence]")
{
    const auto r = estimate_n_eff(iid(50, 8));
    CHECK(r.small_sample);
    CHECK(r.n == 50);
    CHECK(r.per_lag_corr.size() == 49);
    CHECK(r.n_eff <= r.n);
    CHECK(r.n_eff >= 1);
    CHECK(r.threshold_used > 0.0);
    CHECK(r.threshold_used < 1.0);
    CHECK_THROWS_AS(estimate_n_eff(std::vector<C>(600, C(1.0, 1.0))), DegenerateDataError);
}
