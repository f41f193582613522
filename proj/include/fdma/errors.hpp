// SPDX-License-Identifier: Apache-2.0
//
// fdma-secrecy: secrecy-oriented design of frequency-diverse movable-antenna arrays
// Copyright (C) 2026 The fdma-secrecy authors
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

#ifndef FDMA_ERRORS_HPP
#define FDMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdma
{
    // Precondition violations throw std::invalid_argument, bad indices std::out_of_range.
    // The types below cover the domain-specific failures.

    // Spacing vector does not fit the aperture [-D, D]
    class InfeasibleSpacing : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Starting point of an optimizer violates the constraints
    class InfeasibleInitialization : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Rejection sampler gave up
    class SamplingExhausted : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Unregularized normal matrix is rank deficient
    class SingularSystem : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class DimensionMismatch : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Configuration file problem; carries the offending key and line (0 if not applicable)
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(const std::string &message, std::string key, int line = 0)
            : std::runtime_error(message), key_(std::move(key)), line_(line) {}

        const std::string &key() const noexcept { return key_; }
        int line() const noexcept { return line_; }

    private:
        std::string key_;
        int line_;
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
