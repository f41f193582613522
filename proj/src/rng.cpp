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

#include "fdma/rng.hpp"

#include <stdexcept>

namespace fdma
{
    std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t fnv1a64(std::string_view text)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : text)
        {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::uint64_t derive_seed(std::uint64_t master, std::string_view experiment_id)
    {
        return master ^ fnv1a64(experiment_id);
    }

    std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index)
    {
        return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
    }

    std::uint64_t Rng::index(std::uint64_t n)
    {
        if (n == 0)
            throw std::invalid_argument("Rng::index: empty range");
        // Largest multiple of n representable; draws above it are rejected
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
        std::uint64_t v;
        do
            v = engine_();
        while (v > limit);
        return v % n;
    }
}
