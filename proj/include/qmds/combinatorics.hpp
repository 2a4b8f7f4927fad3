/**************************************************************************
 * combinatorics.hpp
 *
 * Copyright 2026 The qmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmds {

using BigInt = boost::multiprecision::cpp_int;

/// C(u, v), zero when v < 0 or v > u.
inline BigInt binomial(long u, long v) {
    if (v < 0 || u < 0 || v > u) return 0;
    if (v > u - v) v = u - v;
    BigInt out = 1;
    for (long i = 1; i <= v; ++i) {
        out *= u - v + i;
        out /= i;
    }
    return out;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt out = 1, b = base;
    for (; exp; exp >>= 1) {
        if (exp & 1) out *= b;
        b *= b;
    }
    return out;
}

/// base^exp if it does not exceed limit, otherwise limit + 1.
inline std::uint64_t capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > limit / base) return limit + 1;
        out *= base;
    }
    return out > limit ? limit + 1 : out;
}

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Calls fn(subset) for every s-subset of {0, ..., n-1} in lexicographic
/// order, stopping early (and returning false) when fn returns false.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t s, Fn&& fn) {
    if (s > n) return true;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(std::span<const std::size_t>(idx))) return false;
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Elements of the subset encoded by a bitmask (bit i <-> element i).
inline std::vector<std::size_t> mask_to_subset(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

}  // namespace qmds
