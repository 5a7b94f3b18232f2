// Copyright 2026 The ppm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Fixed pseudo-random generator so that sampled shot counts are
 * bit-identical across platforms and standard-library versions.
 */

#pragma once

#include <cstdint>

namespace ppm {

/// One step of the SplitMix64 sequence; also used for seed expansion.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** by Blackman and Vigna, seeded through SplitMix64.
class Xoshiro256 {
  public:
    using result_type = std::uint64_t;

    explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
        for (auto& word : state_) {
            word = splitmix64_next(seed);
        }
    }

    constexpr result_type operator()() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept { return static_cast<double>(operator()() >> 11) * 0x1.0p-53; }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4] = {};
};

/// Per-circuit seed derived from the master seed and the circuit identity
/// (group key d plus the part index: 0 = diagonal/real, 1 = imaginary).
/// Stateless, so counts do not depend on the order circuits are simulated in.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t group_d,
                                    unsigned part) noexcept {
    std::uint64_t tag = group_d * 2 + part + 0x243f6a8885a308d3ULL;
    return master ^ splitmix64_next(tag);
}

}  // namespace ppm
