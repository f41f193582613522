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

// Seeded random streams.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++ standard. Distributions are
// implemented here rather than taken from <random> because the standard library distributions
// are implementation-defined and would break cross-platform reproducibility.
// Streams are split with SplitMix64; experiment seeds are master ^ FNV-1a-64(experiment id).

#ifndef FDMA_RNG_HPP
#define FDMA_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace fdma
{
    // One SplitMix64 output step
    std::uint64_t splitmix64(std::uint64_t x);

    std::uint64_t fnv1a64(std::string_view text);

    // master ^ fnv1a64(experiment_id)
    std::uint64_t derive_seed(std::uint64_t master, std::string_view experiment_id);

    // Seed of sub-stream `index` of `seed`
    std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

        std::uint64_t seed() const { return seed_; }

        std::uint64_t next() { return engine_(); }

        // Uniform on [0, 1) with 53 bits of resolution
        double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

        // Uniform on [lo, hi)
        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

        // Uniform integer on [0, n), n > 0 (rejection, no modulo bias)
        std::uint64_t index(std::uint64_t n);

        // Independent generator for sub-stream `stream`
        Rng split(std::uint64_t stream) const { return Rng(stream_seed(seed_, stream)); }

    private:
        std::uint64_t seed_;
        std::mt19937_64 engine_;
    };
}

#endif
