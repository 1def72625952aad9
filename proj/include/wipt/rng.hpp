// SPDX-License-Identifier: Apache-2.0
//
// wiptlib - numerical toolkit for wireless information and power transfer
// Copyright (C) 2026 the wiptlib authors
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

#ifndef WIPT_RNG_HPP
#define WIPT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <cstddef>

#include "errors.hpp"

namespace wipt
{
    // SplitMix64 step: advances the state and returns a mixed 64-bit output.
    inline std::uint64_t splitmix64(std::uint64_t &state)
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Deterministic per-substream generator (xoshiro256**). Substream k of a
    // master seed always yields the same sequence, independent of how work is
    // partitioned across threads. That property is the basis of the library's
    // reproducibility guarantee for parallel Monte Carlo runs.
    class SubstreamRng
    {
    public:
        SubstreamRng(std::uint64_t master_seed, std::uint64_t substream)
        {
            std::uint64_t st = master_seed ^ (0xD2B74407B1CE6E93ULL * (substream + 1));
            s_[0] = splitmix64(st);
            s_[1] = splitmix64(st);
            s_[2] = splitmix64(st);
            s_[3] = splitmix64(st);
        }

        std::uint64_t next_u64()
        {
            auto rotl = [](std::uint64_t x, int k)
            { return (x << k) | (x >> (64 - k)); };
            std::uint64_t result = rotl(s_[1] * 5ULL, 7) * 9ULL;
            std::uint64_t t = s_[1] << 17;
            s_[2] ^= s_[0];
            s_[3] ^= s_[1];
            s_[1] ^= s_[2];
            s_[0] ^= s_[3];
            s_[2] ^= t;
            s_[3] = rotl(s_[3], 45);
            return result;
        }

        // Uniform on [0, 1), 53-bit resolution.
        double uniform()
        {
            return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        }

        // Exponential with the given rate (mean 1/rate). Finite for all draws
        // because uniform() never returns exactly 1.
        double exponential(double rate = 1.0)
        {
            if (!(rate > 0.0))
                throw domain_error("exponential: rate must be positive");
            return -std::log1p(-uniform()) / rate;
        }

        // Poisson count by summing unit-rate exponential inter-arrival times.
        // Exact for all means; cost is O(mean) draws.
        std::size_t poisson(double mean)
        {
            if (!(mean >= 0.0))
                throw domain_error("poisson: mean must be nonnegative");
            if (!(mean < 1e7))
                throw domain_error("poisson: mean too large for inter-arrival sampling");
            std::size_t k = 0;
            double t = exponential();
            while (t <= mean)
            {
                ++k;
                t += exponential();
            }
            return k;
        }

    private:
        std::uint64_t s_[4];
    };

} // namespace wipt

#endif
