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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rcstats/rng.hpp"

namespace rcstats
{

/*!
 * Rician channel parameters.
 *
 * Powers are linear and share one unit (mW throughout the pipeline).
 * Invariants: omega = p_d + p_s and k_linear = p_d / p_s. The stirred power
 * p_s is strictly positive except for the pure-LOS value produced by
 * pure_los(), which the estimators reject.
 */
class RicianParams
{
public:
    /// From K (linear, >= 0) and total power omega (> 0).
    static RicianParams from_k_omega(double k_linear, double omega);

    /// From K in dB and total power omega.
    static RicianParams from_k_db_omega(double k_db, double omega);

    /// From unstirred (>= 0) and stirred (> 0) powers.
    static RicianParams from_powers(double p_d, double p_s);

    /// Degenerate K = inf case: deterministic component only.
    static RicianParams pure_los(double p_d);

    double k_linear() const noexcept { return k_; }
    double k_db() const noexcept;
    double omega() const noexcept { return omega_; }
    double p_d() const noexcept { return p_d_; }
    double p_s() const noexcept { return p_s_; }
    bool is_pure_los() const noexcept { return p_s_ == 0.0; }

    /// Per-dimension standard deviation of the stirred part, sqrt(p_s / 2).
    double sigma() const noexcept;

private:
    RicianParams(double k, double omega, double p_d, double p_s) : k_(k), omega_(omega), p_d_(p_d), p_s_(p_s) {}

    double k_;
    double omega_;
    double p_d_;
    double p_s_;
};

/// Envelope density. Throws DomainError for x < 0 and for pure-LOS parameters.
double rician_pdf(double x, const RicianParams &p);

/// Envelope CDF, 1 - Q1(sqrt(2K), x sqrt(2(K+1)/omega)).
double rician_cdf(double x, const RicianParams &p);

/// Envelope survival function 1 - cdf, accurate in the upper tail.
double rician_sf(double x, const RicianParams &p);

/*!
 * CDF and survival function at every point of an ascending envelope list.
 *
 * The end points are evaluated through the Marcum function and the interior
 * by integrating the density across consecutive gaps (Gauss-Legendre),
 * accumulating the CDF from the left and the survival function from the
 * right. Both outputs keep full relative accuracy in their own tail, which
 * is what the Anderson-Darling sum needs, and the cost per point is a few
 * density evaluations instead of a Marcum series.
 */
void rician_cdf_sorted(std::span<const double> sorted_x, const RicianParams &p, std::span<double> cdf,
                       std::span<double> sf);

/*!
 * Draws n complex samples d + s, where d = sqrt(p_d) exp(j*phase) and s is
 * circularly-symmetric complex Gaussian with E|s|^2 = p_s.
 */
std::vector<std::complex<double>> sample_complex(const RicianParams &p, std::size_t n, CounterRng &rng,
                                                 double phase_rad = 0.0);

/// In-place variant writing out.size() samples.
void sample_complex(const RicianParams &p, CounterRng &rng, std::span<std::complex<double>> out,
                    double phase_rad = 0.0);

} // namespace rcstats
