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

#include "rcstats/case_config.hpp"

#include <array>
#include <utility>

#include "rcstats/error.hpp"

namespace rcstats
{

namespace
{

template <class E, std::size_t N>
E parse_tag(std::string_view s, const std::array<std::pair<std::string_view, E>, N> &table, const char *what)
{
    for (const auto &[tag, value] : table)
        if (tag == s)
            return value;
    throw ValidationError(std::string("unknown ") + what + " tag '" + std::string(s) + "'");
}

constexpr std::array<std::pair<std::string_view, Absorbers>, 3> absorber_tags{
    {{"NoAs", Absorbers::NoAs}, {"BAs", Absorbers::BAs}, {"AAs", Absorbers::AAs}}};
constexpr std::array<std::pair<std::string_view, Excitation>, 3> excitation_tags{
    {{"R", Excitation::R}, {"C", Excitation::C}, {"RaC", Excitation::RaC}}};
constexpr std::array<std::pair<std::string_view, PolSwitch>, 3> switch_tags{
    {{"PSX", PolSwitch::PSX}, {"PS1", PolSwitch::PS1}, {"PS2", PolSwitch::PS2}}};
constexpr std::array<std::pair<std::string_view, Attenuation>, 5> attenuation_tags{{{"NAT", Attenuation::NAT},
                                                                                    {"10ATC", Attenuation::ATC10},
                                                                                    {"20ATC", Attenuation::ATC20},
                                                                                    {"10ATR", Attenuation::ATR10},
                                                                                    {"20ATR", Attenuation::ATR20}}};

template <class E, std::size_t N>
std::string_view tag_of(E v, const std::array<std::pair<std::string_view, E>, N> &table) noexcept
{
    for (const auto &[tag, value] : table)
        if (value == v)
            return tag;
    return "?";
}

} // namespace

std::string_view to_string(Absorbers v) noexcept { return tag_of(v, absorber_tags); }
std::string_view to_string(Excitation v) noexcept { return tag_of(v, excitation_tags); }
std::string_view to_string(PolSwitch v) noexcept { return tag_of(v, switch_tags); }
std::string_view to_string(Attenuation v) noexcept { return tag_of(v, attenuation_tags); }

Absorbers parse_absorbers(std::string_view s) { return parse_tag(s, absorber_tags, "absorbers"); }
Excitation parse_excitation(std::string_view s) { return parse_tag(s, excitation_tags, "excitation"); }
PolSwitch parse_switch(std::string_view s) { return parse_tag(s, switch_tags, "switch"); }
Attenuation parse_attenuation(std::string_view s) { return parse_tag(s, attenuation_tags, "attenuation"); }

void CaseConfig::validate() const
{
    if ((pol_switch == PolSwitch::PSX) != (excitation == Excitation::R))
        throw ValidationError("case " + case_id + ": switch PSX is used exactly for multipath-only (R) excitation");
    if (attenuation != Attenuation::NAT && excitation != Excitation::RaC)
        throw ValidationError("case " + case_id + ": attenuators apply only to RaC excitation");
}

std::string CaseConfig::label() const
{
    std::string s;
    s.append(to_string(absorbers)).append("_").append(to_string(excitation)).append("_").append(to_string(pol_switch));
    if (attenuation != Attenuation::NAT)
        s.append("_").append(to_string(attenuation));
    return s;
}

std::vector<CaseConfig> all_case_configs()
{
    std::vector<CaseConfig> out;
    for (const auto &[a_tag, a] : absorber_tags)
        for (const auto &[e_tag, e] : excitation_tags)
            for (const auto &[s_tag, s] : switch_tags)
                for (const auto &[t_tag, t] : attenuation_tags)
                {
                    CaseConfig c{std::to_string(out.size() + 1), a, e, s, t};
                    try
                    {
                        c.validate();
                    }
                    catch (const ValidationError &)
                    {
                        continue;
                    }
                    out.push_back(std::move(c));
                }
    return out;
}

} // namespace rcstats
