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

#include <array>
#include <cstddef>

// Fixed Gauss-Legendre rules on [-1, 1] (internal).

namespace rcstats::detail
{

template <std::size_t N>
struct GaussLegendre;

template <>
struct GaussLegendre<3>
{
    static constexpr std::array<double, 3> x{-0.7745966692414834, 0.0, 0.7745966692414834};
    static constexpr std::array<double, 3> w{0.5555555555555556, 0.8888888888888889, 0.5555555555555556};
};

template <>
struct GaussLegendre<5>
{
    static constexpr std::array<double, 5> x{-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                             0.9061798459386640};
    static constexpr std::array<double, 5> w{0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                             0.4786286704993665, 0.2369268850561891};
};

template <>
struct GaussLegendre<8>
{
    static constexpr std::array<double, 8> x{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                             -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                             0.7966664774136267,  0.9602898564975363};
    static constexpr std::array<double, 8> w{0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                             0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                             0.2223810344533745, 0.1012285362903763};
};

/// Integral of f over [lo, hi] with one N-point panel.
template <std::size_t N, class F>
double gauss_legendre(F &&f, double lo, double hi)
{
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        s += GaussLegendre<N>::w[i] * f(mid + half * GaussLegendre<N>::x[i]);
    return s * half;
}

/// Composite rule with panels no wider than max_width.
template <std::size_t N, class F>
double gauss_legendre_composite(F &&f, double lo, double hi, double max_width)
{
    if (!(hi > lo))
        return 0.0;
    const auto panels = static_cast<std::size_t>((hi - lo) / max_width) + 1;
    const double h = (hi - lo) / static_cast<double>(panels);
    double s = 0.0;
    for (std::size_t p = 0; p < panels; ++p)
        s += gauss_legendre<N>(f, lo + h * static_cast<double>(p), lo + h * static_cast<double>(p + 1));
    return s;
}

} // namespace rcstats::detail
