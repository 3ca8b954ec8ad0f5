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

#include <string>
#include <string_view>
#include <vector>

namespace rcstats
{

// Measurement-case descriptor of the hybrid chamber.

enum class Absorbers
{
    NoAs, ///< no absorbers
    BAs,  ///< back absorber only
    AAs   ///< all absorbers
};

enum class Excitation
{
    R,  ///< multipath (RIMP) port only
    C,  ///< plane-wave (CATR) port only
    RaC ///< both ports through the splitter
};

enum class PolSwitch
{
    PSX, ///< switch position irrelevant (multipath-only cases)
    PS1, ///< co-polarized plane wave
    PS2  ///< cross-polarized plane wave
};

enum class Attenuation
{
    NAT,   ///< no attenuator
    ATC10, ///< 10 dB on the plane-wave branch ("10ATC")
    ATC20, ///< 20 dB on the plane-wave branch ("20ATC")
    ATR10, ///< 10 dB on the multipath branch ("10ATR")
    ATR20  ///< 20 dB on the multipath branch ("20ATR")
};

std::string_view to_string(Absorbers v) noexcept;
std::string_view to_string(Excitation v) noexcept;
std::string_view to_string(PolSwitch v) noexcept;
std::string_view to_string(Attenuation v) noexcept;

// Parsers accept exactly the tags produced by to_string and throw ValidationError otherwise.
Absorbers parse_absorbers(std::string_view s);
Excitation parse_excitation(std::string_view s);
PolSwitch parse_switch(std::string_view s);
Attenuation parse_attenuation(std::string_view s);

struct CaseConfig
{
    std::string case_id = "1";
    Absorbers absorbers = Absorbers::NoAs;
    Excitation excitation = Excitation::R;
    PolSwitch pol_switch = PolSwitch::PSX;
    Attenuation attenuation = Attenuation::NAT;

    /// Throws ValidationError unless PSX <=> R and attenuators only with RaC.
    void validate() const;

    /// e.g. "BAs_RaC_PS1_10ATC"; the attenuation tag is omitted for NAT.
    std::string label() const;

    bool operator==(const CaseConfig &) const = default;
};

/// The 39 admissible combinations, ids "1".."39" in enumeration order
/// (absorbers, then excitation, then switch, then attenuation).
std::vector<CaseConfig> all_case_configs();

} // namespace rcstats
