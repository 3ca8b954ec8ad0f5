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

#include "rcstats/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "quadrature.hpp"
#include "rcstats/error.hpp"

namespace rcstats
{

namespace
{

// Power series is used up to this argument, the exp-scaled asymptotic expansion above.
constexpr double i0_series_limit = 30.0;

// Marcum Q switches from the Bessel series to tail quadrature at a*b >= this.
constexpr double marcum_series_limit = 500.0;

double i0_power_series(double ax)
{
    const double q = 0.25 * ax * ax;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 500; ++m)
    {
        term *= q / (static_cast<double>(m) * m);
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum;
}

// exp(-x) I0(x) for x >= i0_series_limit: I0(x) ~ e^x / sqrt(2 pi x) * sum ((2k-1)!!)^2 / (k! (8x)^k)
double i0e_asymptotic(double ax)
{
    double term = 1.0;
    double sum = 1.0;
    const double inv8x = 1.0 / (8.0 * ax);
    for (int k = 1; k < 200; ++k)
    {
        const double odd = 2.0 * k - 1.0;
        const double next = term * odd * odd * inv8x / k;
        if (next > term)
            break;
        term = next;
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * ax);
}

void check_marcum_args(double a, double b)
{
    if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0)
        throw DomainError("marcum_q1: arguments must be finite and non-negative");
}

// Ratios I_k(z) / I_0(z) for k = 0..n_terms-1 by Miller's backward recurrence.
std::vector<double> bessel_ratios(double z, std::size_t n_terms)
{
    const double n = static_cast<double>(n_terms);
    const auto start = static_cast<std::size_t>(std::ceil(std::sqrt(n * n + 50.0 * z))) + 20;
    std::vector<double> r(n_terms, 0.0);
    double f_next = 0.0; // f_{k+1}
    double f = 1.0;      // f_k, k = start
    for (std::size_t k = start; k >= 1; --k)
    {
        const double f_prev = f_next + (2.0 * static_cast<double>(k) / z) * f;
        f_next = f;
        f = f_prev;
        if (k - 1 < n_terms)
            r[k - 1] = f;
        if (f > 1e100)
        {
            f *= 1e-100;
            f_next *= 1e-100;
            for (std::size_t j = k - 1; j < n_terms; ++j)
                r[j] *= 1e-100;
        }
    }
    for (auto &v : r)
        v /= f;
    return r;
}

// Number of series terms so that rho^k I_k/I_0 < e^-40, using I_k/I_0 <~ exp(-k^2 / (2(z+k))).
std::size_t series_length(double z, double rho)
{
    const double log_inv_rho = rho < 1.0 ? -std::log(rho) : 0.0;
    std::size_t k = 1;
    while (k < 100000)
    {
        const double kd = static_cast<double>(k);
        if (kd * log_inv_rho + kd * kd / (2.0 * (z + kd)) >= 40.0)
            break;
        ++k;
    }
    return k + 1;
}

// sum_{k >= k0} rho^k I_k(z) / I_0(z) with term-ratio stopping.
double bessel_weighted_sum(double z, double rho, std::size_t k0)
{
    if (z < 1e-8)
    {
        // I_1/I_0 = z/2 + O(z^3), I_2/I_0 = z^2/8 + O(z^4)
        const double r1 = rho * 0.5 * z;
        const double r2 = rho * rho * z * z / 8.0;
        return (k0 == 0 ? 1.0 : 0.0) + r1 + r2;
    }
    const auto ratios = bessel_ratios(z, series_length(z, rho));
    double sum = 0.0;
    double rho_k = 1.0;
    for (std::size_t k = 0; k < ratios.size(); ++k)
    {
        if (k >= k0)
        {
            const double term = rho_k * ratios[k];
            sum += term;
            if (term <= 1e-16 * sum)
                break;
        }
        rho_k *= rho;
    }
    return sum;
}

// 1 - Q1(a, b) for small a <= b as a Poisson mixture of regularised lower gamma functions:
// sum_k e^{-lambda} lambda^k / k! * P(k+1, y), lambda = a^2/2, y = b^2/2. All terms positive.
double marcum_cdf_poisson(double a, double b)
{
    const double lambda = 0.5 * a * a;
    const double y = 0.5 * b * b;
    double sum = 0.0;
    double pois = std::exp(-lambda);
    // lead = e^{-y} y^{k+1} / (k+1)!
    double lead = std::exp(-y) * y;
    for (int k = 0; k < 400; ++k)
    {
        // P(k+1, y) = lead * sum_j y^j (k+1)! / (k+1+j)!
        double t = 1.0;
        double series = 1.0;
        for (int j = 1; j < 400; ++j)
        {
            t *= y / (k + 1 + j);
            series += t;
            if (t < 1e-17 * series)
                break;
        }
        const double term = pois * lead * series;
        sum += term;
        if (static_cast<double>(k) > lambda && term < 1e-17 * sum)
            break;
        pois *= lambda / (k + 1);
        lead *= y / (k + 2);
        if (pois == 0.0 || lead == 0.0)
            break;
    }
    return sum;
}

MarcumPair marcum_series(double a, double b)
{
    const double z = a * b;
    const double prefactor = std::exp(-0.5 * (a - b) * (a - b));
    const double i0e = bessel_i0e(z);
    if (b >= a)
    {
        const double q = std::min(1.0, prefactor * i0e * bessel_weighted_sum(z, a / b, 0));
        if (b < 2.0)
            return {q, marcum_cdf_poisson(a, b)};
        return {q, 1.0 - q};
    }
    const double cdf = std::min(1.0, prefactor * i0e * bessel_weighted_sum(z, b / a, 1));
    return {1.0 - cdf, cdf};
}

MarcumPair marcum_tail_quadrature(double a, double b)
{
    // Integrand of Q1 in exp-scaled form: x exp(-(x-a)^2/2) I0e(a x).
    auto integrand = [a](double x) {
        const double d = x - a;
        return x * std::exp(-0.5 * d * d) * bessel_i0e(a * x);
    };
    constexpr double reach = 13.0; // exp(-13^2/2) ~ 2e-37 relative
    constexpr double panel = 0.5;
    if (b >= a)
    {
        const double q = detail::gauss_legendre_composite<8>(integrand, b, b + reach, panel);
        return {q, 1.0 - q};
    }
    const double cdf = detail::gauss_legendre_composite<8>(integrand, std::max(0.0, b - reach), b, panel);
    return {1.0 - cdf, cdf};
}

} // namespace

double bessel_i0e(double x)
{
    const double ax = std::fabs(x);
    if (std::isnan(ax))
        return ax;
    if (ax <= i0_series_limit)
        return std::exp(-ax) * i0_power_series(ax);
    if (std::isinf(ax))
        return 0.0;
    return i0e_asymptotic(ax);
}

double bessel_i0(double x)
{
    const double ax = std::fabs(x);
    if (std::isnan(ax))
        return ax;
    if (ax <= i0_series_limit)
        return i0_power_series(ax);
    if (ax > 713.0)
        return std::numeric_limits<double>::infinity();
    // Split the exponential so that e^ax * scale does not overflow before the product.
    const double half = std::exp(0.5 * ax);
    return half * (half * i0e_asymptotic(ax));
}

MarcumPair marcum_q1_pair(double a, double b)
{
    check_marcum_args(a, b);
    if (b == 0.0)
        return {1.0, 0.0};
    if (a == 0.0)
        return {std::exp(-0.5 * b * b), -std::expm1(-0.5 * b * b)};
    MarcumPair r = (a * b < marcum_series_limit) ? marcum_series(a, b) : marcum_tail_quadrature(a, b);
    r.q = std::clamp(r.q, 0.0, 1.0);
    r.cdf = std::clamp(r.cdf, 0.0, 1.0);
    return r;
}

double marcum_q1(double a, double b)
{
    return marcum_q1_pair(a, b).q;
}

} // namespace rcstats
