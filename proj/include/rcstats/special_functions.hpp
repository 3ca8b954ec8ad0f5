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

namespace rcstats
{

/// Modified Bessel function of the first kind, order zero. Even in x.
/// Overflows to +inf for |x| > ~713; use bessel_i0e there.
double bessel_i0(double x);

/// Exponentially scaled I0: exp(-|x|) * I0(x). Finite for all finite x.
double bessel_i0e(double x);

/// Q1(a, b) together with its complement, each accurate in relative terms
/// where it is the smaller of the two.
struct MarcumPair
{
    double q;      ///< Q1(a, b)
    double cdf;    ///< 1 - Q1(a, b)
};

/*!
 * First-order Marcum Q function.
 *
 * For a*b below a switch point the Bessel series
 *     Q1 = exp(-(a-b)^2/2) * sum_k rho^k I_k(ab) exp(-ab)
 * is summed with rho = min(a,b)/max(a,b) (for a > b the complement is
 * summed from k = 1). Bessel ratios come from Miller's backward recurrence.
 * Summation stops once the term ratio drops below 1e-16.
 *
 * Above the switch point the smaller tail of the defining integral
 *     Q1 = int_b^inf x exp(-(x-a)^2/2) I0e(ax) dx
 * is integrated with composite Gauss-Legendre panels, which stays finite
 * for the very large arguments produced by K-factors of 40 dB and more.
 *
 * Throws DomainError for negative or non-finite arguments.
 */
MarcumPair marcum_q1_pair(double a, double b);

/// Q1(a, b) in [0, 1].
double marcum_q1(double a, double b);

} // namespace rcstats
