// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_RNG_HPP
#define EB_CORE_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "types.hpp"

namespace eb {

// All randomness in the library flows from one master seed. Each consumer
// derives its own independent stream from (seed, label, counter) so that
// adding a consumer does not shift the draws of the others.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::mt19937_64 derive_stream(std::uint64_t seed, std::string_view label,
                                     std::uint64_t counter = 0) {
    std::uint64_t s = splitmix64(seed ^ fnv1a(label));
    s = splitmix64(s ^ counter);
    return std::mt19937_64(s);
}

// Circularly symmetric complex Gaussian with E[|z|^2] = 1.
inline cplx standard_complex_gaussian(std::mt19937_64& gen) {
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    return {n(gen), n(gen)};
}

} // namespace eb

#endif
