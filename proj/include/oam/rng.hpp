// SPDX-License-Identifier: Apache-2.0
//
// oamlink - link-level simulator for OAM radio over misaligned circular arrays
// Copyright (C) 2026 the oamlink authors
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
//
// Deterministic random streams. splitmix64 rather than std::mt19937_64
// because its state is a single counter: derive_stream() can split one seed
// into independent per-trial streams cheaply, so a Monte Carlo run produces
// bit-identical results regardless of how trials are batched or ordered.

#ifndef OAM_RNG_HPP
#define OAM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

namespace oam
{

// Finalizer from the splitmix64 reference implementation.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent stream for sub-task `index` of a run seeded with `seed`.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index)
{
    return mix64(seed ^ mix64(index));
}

class SplitMix64
{
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1) with the full 53 bits of double mantissa.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    // Uniform integer on [0, bound) by Lemire's multiply-shift with the
    // rejection step, so small bounds carry no modulo bias.
    std::uint64_t bounded(std::uint64_t bound)
    {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound)
        {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold)
            {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Pair of independent standard normals (Box-Muller). u1 is flipped to
    // (0, 1] so the log never sees zero.
    std::pair<double, double> normal_pair()
    {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double w = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(w), r * std::sin(w)};
    }

    // Circularly symmetric complex normal with E|z|^2 = variance.
    std::complex<double> complex_normal(double variance)
    {
        const auto [a, b] = normal_pair();
        const double s = std::sqrt(variance / 2.0);
        return {s * a, s * b};
    }

  private:
    std::uint64_t state_;
};

} // namespace oam

#endif // OAM_RNG_HPP
