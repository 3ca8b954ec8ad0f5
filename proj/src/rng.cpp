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

#include "rcstats/rng.hpp"

#include <cmath>
#include <numbers>

namespace rcstats
{

namespace
{
constexpr std::uint32_t philox_m0 = 0xD2511F53U;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57U;
constexpr std::uint32_t philox_w0 = 0x9E3779B9U;
constexpr std::uint32_t philox_w1 = 0xBB67AE85U;

constexpr double two_pow_minus_53 = 1.0 / 9007199254740992.0;
} // namespace

Philox4x32Block philox4x32_10(Philox4x32Block c, std::array<std::uint32_t, 2> k) noexcept
{
    for (int round = 0; round < 10; ++round)
    {
        const std::uint64_t p0 = static_cast<std::uint64_t>(philox_m0) * c[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(philox_m1) * c[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += philox_w0;
        k[1] += philox_w1;
    }
    return c;
}

std::uint64_t stream_id(std::initializer_list<std::uint64_t> coordinates) noexcept
{
    std::uint64_t h = 0x6A09E667F3BCC908ULL;
    for (auto c : coordinates)
        h = splitmix64(h ^ splitmix64(c));
    return h;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream)
{
}

void CounterRng::refill() noexcept
{
    const Philox4x32Block counter{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                                  static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    const auto out = philox4x32_10(counter, key_);
    ++block_;
    buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    buffered_ = 2;
}

CounterRng::result_type CounterRng::operator()() noexcept
{
    if (buffered_ == 0)
        refill();
    return buffer_[2 - buffered_--];
}

double CounterRng::uniform_open_closed() noexcept
{
    return static_cast<double>(((*this)() >> 11) + 1) * two_pow_minus_53;
}

double CounterRng::uniform() noexcept
{
    return static_cast<double>((*this)() >> 11) * two_pow_minus_53;
}

std::complex<double> CounterRng::complex_normal() noexcept
{
    const double r = std::sqrt(-std::log(uniform_open_closed()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
}

} // namespace rcstats
