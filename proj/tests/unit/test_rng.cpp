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
#include <set>

#include "rcstats/rng.hpp"

using namespace rcstats;

TEST_CASE("philox4x32-10 known-answer vectors", "[rng]")
{
    using B = Philox4x32Block;
    CHECK(philox4x32_10(B{0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10(B{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10(B{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct", "[rng]")
{
    CounterRng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    for (int i = 0; i < 100; ++i)
    {
        const auto x = a();
        CHECK(x == b());
        CHECK(x != c());
        CHECK(x != d());
    }
}

TEST_CASE("stream_id depends on every coordinate and on order", "[rng]")
{
    std::set<std::uint64_t> ids;
    for (std::uint64_t i = 0; i < 50; ++i)
        for (std::uint64_t j = 0; j < 50; ++j)
            ids.insert(stream_id({stream_tag::synth_sweep, i, j}));
    CHECK(ids.size() == 2500);
    CHECK(stream_id({1, 2}) != stream_id({2, 1}));
    CHECK(stream_id({1}) != stream_id({1, 0}));
}

TEST_CASE("uniform draws stay in range with the right mean", "[rng]")
{
    CounterRng r(3, 3);
    double s = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const double u = r.uniform_open_closed();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
        s += u;
    }
    CHECK(std::abs(s / n - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("complex normals are circular with unit power", "[rng]")
{
    CounterRng r(9, 1);
    const int n = 400000;
    double p = 0.0, re2 = 0.0, im2 = 0.0, reim = 0.0;
    std::complex<double> m = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const auto z = r.complex_normal();
        m += z;
        p += std::norm(z);
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
        reim += z.real() * z.imag();
    }
    CHECK(std::abs(p / n - 1.0) < 0.01);
    CHECK(std::abs(re2 / n - 0.5) < 0.01);
    CHECK(std::abs(im2 / n - 0.5) < 0.01);
    CHECK(std::abs(reim / n) < 0.01);
    CHECK(std::abs(m / static_cast<double>(n)) < 0.01);
}
