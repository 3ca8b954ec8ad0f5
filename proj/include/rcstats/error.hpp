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

#include <stdexcept>
#include <string>

namespace rcstats
{

// Error categories map one-to-one onto the CLI exit codes.
enum class ExitCode : int
{
    success = 0,
    validation = 1,
    io = 2,
    numerical = 3
};

class Error : public std::runtime_error
{
public:
    Error(const std::string &what, ExitCode code) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

/// Bad arguments, inconsistent grids, malformed configuration.
class ValidationError : public Error
{
public:
    explicit ValidationError(const std::string &what) : Error(what, ExitCode::validation) {}
};

/// Argument outside the mathematical domain of a function (e.g. negative envelope).
class DomainError : public ValidationError
{
public:
    using ValidationError::ValidationError;
};

/// File missing, unreadable or unwritable.
class IoError : public Error
{
public:
    explicit IoError(const std::string &what) : Error(what, ExitCode::io) {}
};

class NumericalError : public Error
{
public:
    explicit NumericalError(const std::string &what) : Error(what, ExitCode::numerical) {}
};

/// Data with zero stirred variance: the Rician model degenerates to pure LOS.
class DegenerateDataError : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

} // namespace rcstats
