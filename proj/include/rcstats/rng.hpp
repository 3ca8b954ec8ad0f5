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
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace rcstats
{

// Counter-based random streams.
//
// Every random draw in the library comes from a Philox4x32-10 generator whose
// key is the user's master seed and whose counter high word is a stream id
// derived from the logical coordinates of the draw (frequency index, stirrer
// position, bootstrap replicate, ...). Results therefore never depend on the
// order or the thread in which work items are evaluated.

using Philox4x32Block = std::array<std::uint32_t, 4>;

/// One Philox4x32 bijection with 10 rounds.
Philox4x32Block philox4x32_10(Philox4x32Block counter, std::array<std::uint32_t, 2> key) noexcept;

/// SplitMix64 finaliser.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Hash an ordered tuple of coordinates into a 64-bit stream id.
std::uint64_t stream_id(std::initializer_list<std::uint64_t> coordinates) noexcept;

// Domain tags keep streams of different subsystems disjoint.
namespace stream_tag
{
inline constexpr std::uint64_t synth_sweep = 0x5357454550ULL;      // "SWEEP"
inline constexpr std::uint64_t k_interval = 0x4B4349ULL;           // "KCI"
inline constexpr std::uint64_t gof_replicate = 0x474F46ULL;        // "GOF"
inline constexpr std::uint64_t pass_rate_dataset = 0x5052444154ULL; // "PRDAT"
inline constexpr std::uint64_t analysis_gof = 0x414E474F46ULL;     // "ANGOF"
} // namespace stream_tag

class CounterRng
{
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform on (0, 1], 53-bit resolution.
    double uniform_open_closed() noexcept;

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() noexcept;

    /// Circularly-symmetric complex Gaussian with E|z|^2 = 1 (Box-Muller).
    std::complex<double> complex_normal() noexcept;

private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int buffered_ = 0;
};

} // namespace rcstats
