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

#include "rcstats/rician.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadrature.hpp"
#include "rcstats/error.hpp"
#include "rcstats/special_functions.hpp"

namespace rcstats
{

RicianParams RicianParams::from_k_omega(double k_linear, double omega)
{
    if (!std::isfinite(k_linear) || k_linear < 0.0)
        throw ValidationError("RicianParams: K must be finite and >= 0 (use pure_los for K = inf)");
    if (!std::isfinite(omega) || omega <= 0.0)
        throw ValidationError("RicianParams: omega must be finite and > 0");
    const double p_s = omega / (1.0 + k_linear);
    return RicianParams(k_linear, omega, omega - p_s, p_s);
}

RicianParams RicianParams::from_k_db_omega(double k_db, double omega)
{
    if (std::isnan(k_db))
        throw ValidationError("RicianParams: K[dB] is NaN");
    return from_k_omega(std::pow(10.0, k_db / 10.0), omega);
}

RicianParams RicianParams::from_powers(double p_d, double p_s)
{
    if (!std::isfinite(p_d) || p_d < 0.0)
        throw ValidationError("RicianParams: p_d must be finite and >= 0");
    if (!std::isfinite(p_s) || p_s <= 0.0)
        throw ValidationError("RicianParams: p_s must be finite and > 0 (use pure_los for p_s = 0)");
    return RicianParams(p_d / p_s, p_d + p_s, p_d, p_s);
}

RicianParams RicianParams::pure_los(double p_d)
{
    if (!std::isfinite(p_d) || p_d <= 0.0)
        throw ValidationError("RicianParams::pure_los: p_d must be finite and > 0");
    return RicianParams(std::numeric_limits<double>::infinity(), p_d, p_d, 0.0);
}

double RicianParams::k_db() const noexcept
{
    return 10.0 * std::log10(k_);
}

double RicianParams::sigma() const noexcept
{
    return std::sqrt(0.5 * p_s_);
}

namespace
{

void check_envelope(double x, const char *who)
{
    if (std::isnan(x) || x < 0.0)
        throw DomainError(std::string(who) + ": envelope must be >= 0");
}

// Envelope density with the Bessel factor in exp-scaled form:
// 2(1+K)x/omega * exp(-(sqrt(K) - x sqrt((K+1)/omega))^2) * I0e(2 sqrt(K(1+K)/omega) x)
struct RicianDensity
{
    explicit RicianDensity(const RicianParams &p)
        : scale(2.0 * (1.0 + p.k_linear()) / p.omega()), sqrt_k(std::sqrt(p.k_linear())),
          c(std::sqrt((1.0 + p.k_linear()) / p.omega())), zc(2.0 * std::sqrt(p.k_linear()) * c)
    {
    }

    double operator()(double x) const
    {
        const double d = sqrt_k - c * x;
        return scale * x * std::exp(-d * d) * bessel_i0e(zc * x);
    }

    double scale, sqrt_k, c, zc;
};

MarcumPair marcum_for(double x, const RicianParams &p)
{
    const double k = p.k_linear();
    return marcum_q1_pair(std::sqrt(2.0 * k), x * std::sqrt(2.0 * (k + 1.0) / p.omega()));
}

} // namespace

double rician_pdf(double x, const RicianParams &p)
{
    check_envelope(x, "rician_pdf");
    if (p.is_pure_los())
        throw DomainError("rician_pdf: pure-LOS parameters have no density");
    if (p.k_linear() == 0.0)
        return 2.0 * x / p.omega() * std::exp(-x * x / p.omega());
    return RicianDensity(p)(x);
}

double rician_cdf(double x, const RicianParams &p)
{
    check_envelope(x, "rician_cdf");
    if (p.is_pure_los())
        return x >= std::sqrt(p.p_d()) ? 1.0 : 0.0;
    if (x == 0.0)
        return 0.0;
    return marcum_for(x, p).cdf;
}

double rician_sf(double x, const RicianParams &p)
{
    check_envelope(x, "rician_sf");
    if (p.is_pure_los())
        return x >= std::sqrt(p.p_d()) ? 0.0 : 1.0;
    if (x == 0.0)
        return 1.0;
    return marcum_for(x, p).q;
}

void rician_cdf_sorted(std::span<const double> sorted_x, const RicianParams &p, std::span<double> cdf,
                       std::span<double> sf)
{
    const std::size_t n = sorted_x.size();
    if (cdf.size() != n || sf.size() != n)
        throw ValidationError("rician_cdf_sorted: output size mismatch");
    if (n == 0)
        return;
    if (p.is_pure_los())
        throw DomainError("rician_cdf_sorted: pure-LOS parameters");
    check_envelope(sorted_x.front(), "rician_cdf_sorted");
    for (std::size_t i = 1; i < n; ++i)
        if (!(sorted_x[i] >= sorted_x[i - 1]))
            throw ValidationError("rician_cdf_sorted: input not ascending");

    if (p.k_linear() == 0.0)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            const double t = sorted_x[i] * sorted_x[i] / p.omega();
            cdf[i] = -std::expm1(-t);
            sf[i] = std::exp(-t);
        }
        return;
    }

    const RicianDensity density(p);
    const double s = p.sigma();
    const double fine_gap = 0.05 * s;
    const double panel = 0.5 * s;

    // Gap integrals are stored in sf temporarily, then both tails are accumulated.
    for (std::size_t i = 0; i + 1 < n; ++i)
    {
        const double lo = sorted_x[i], hi = sorted_x[i + 1];
        if (hi == lo)
            sf[i] = 0.0;
        else if (hi - lo < fine_gap)
            sf[i] = detail::gauss_legendre<3>(density, lo, hi);
        else
            sf[i] = detail::gauss_legendre_composite<5>(density, lo, hi, panel);
    }

    const MarcumPair first = marcum_for(sorted_x.front(), p);
    const MarcumPair last = marcum_for(sorted_x.back(), p);

    cdf[0] = sorted_x.front() == 0.0 ? 0.0 : first.cdf;
    for (std::size_t i = 0; i + 1 < n; ++i)
        cdf[i + 1] = std::min(1.0, cdf[i] + sf[i]);

    double acc = sorted_x.back() == 0.0 ? 1.0 : last.q;
    for (std::size_t i = n - 1; i-- > 0;)
    {
        const double gap = sf[i];
        sf[i + 1] = acc;
        acc = std::min(1.0, acc + gap);
    }
    sf[0] = acc;
}

void sample_complex(const RicianParams &p, CounterRng &rng, std::span<std::complex<double>> out, double phase_rad)
{
    const std::complex<double> d = std::polar(std::sqrt(p.p_d()), phase_rad);
    const double amplitude = std::sqrt(p.p_s());
    for (auto &v : out)
        v = d + amplitude * rng.complex_normal();
}

std::vector<std::complex<double>> sample_complex(const RicianParams &p, std::size_t n, CounterRng &rng,
                                                 double phase_rad)
{
    if (n == 0)
        throw ValidationError("sample_complex: n must be >= 1");
    std::vector<std::complex<double>> out(n);
    sample_complex(p, rng, out, phase_rad);
    return out;
}

} // namespace rcstats
