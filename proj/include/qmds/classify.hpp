/**************************************************************************
 * classify.hpp
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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmds/code.hpp"
#include "qmds/combinatorics.hpp"

namespace qmds {

/// Singleton-type limits for a code of length n, block width r, dimension k.
struct SingletonReport {
    std::size_t k_max = 0;      ///< r(n - d_max + 1): largest dimension at distance d_max
    std::size_t d_max = 0;      ///< n - ceil(k/r) + 1
    std::size_t dperp_max = 0;  ///< floor(k/r) + 1
};

inline SingletonReport singleton_bounds(std::size_t n, std::size_t r, std::size_t k) {
    if (r == 0 || n == 0) throw std::invalid_argument("singleton: n and r must be positive");
    if (k < 1 || k > r * n) throw std::invalid_argument("singleton: k must lie in [1, rn]");
    SingletonReport rep;
    rep.d_max = n - ceil_div(k, r) + 1;
    rep.k_max = r * (n - rep.d_max + 1);
    rep.dperp_max = k / r + 1;
    return rep;
}

enum class ClassifyMethod { by_distance, by_minors };

struct Classification {
    std::size_t n = 0, r = 0, k = 0;
    std::size_t d = 0;
    std::size_t d_perp = 0;
    bool is_mds = false;
    bool is_qmds = false;
    bool is_dually_qmds = false;
    bool divisible = false;  ///< r | k

    /// "MDS", "dually-QMDS", "QMDS" or "none".
    std::string label() const {
        if (is_mds) return "MDS";
        if (is_dually_qmds) return "dually-QMDS";
        if (is_qmds) return "QMDS";
        return "none";
    }

    /// e.g. "[7,2,3,6]"
    std::string type() const {
        return "[" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k) + "," +
               std::to_string(d) + "]";
    }

    std::string dual_type() const {
        return "[" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(r * n - k) + "," +
               std::to_string(d_perp) + "]";
    }

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// True when every s-block column submatrix of m has rank `target`.
inline bool all_block_minors_have_rank(const Matrix& m, std::size_t r, std::size_t s, std::size_t target) {
    const std::size_t n = m.cols() / r;
    return for_each_subset(n, s, [&](std::span<const std::size_t> blocks) {
        return rank(block_submatrix(m, blocks, r)) == target;
    });
}

/// QMDS <=> every ceil(k/r)-block submatrix of G has rank k.
inline bool is_qmds_by_minors(const LinearCode& c) {
    if (c.is_zero()) throw std::invalid_argument("classify: zero code");
    return all_block_minors_have_rank(c.canonical(), c.r(), ceil_div(c.k(), c.r()), c.k());
}

/// MDS / QMDS / dually QMDS classification. Requires 1 <= k <= rn - 1.
inline Classification classify(const LinearCode& c, ClassifyMethod method = ClassifyMethod::by_minors,
                               std::uint64_t budget = kDefaultBudget) {
    const std::size_t n = c.n(), r = c.r(), k = c.k();
    if (k == 0 || k == r * n)
        throw std::invalid_argument("classify: degenerate dimension k = " + std::to_string(k) +
                                    " (need 1 <= k <= rn-1)");
    Classification out;
    out.n = n;
    out.r = r;
    out.k = k;
    out.divisible = k % r == 0;
    const LinearCode d = dual(c);
    const auto single = singleton_bounds(n, r, k);
    if (method == ClassifyMethod::by_distance) {
        out.d = min_distance(c, DistanceMethod::exhaustive, budget);
        out.d_perp = min_distance(d, DistanceMethod::exhaustive, budget);
        out.is_qmds = out.d == single.d_max;
        out.is_dually_qmds = out.is_qmds && out.d_perp == single.dperp_max;
    } else {
        out.d = min_distance(c, DistanceMethod::rank_blocks);
        out.d_perp = min_distance(d, DistanceMethod::rank_blocks);
        const std::size_t lo = k / r;
        out.is_qmds = is_qmds_by_minors(c);
        out.is_dually_qmds = out.is_qmds && (lo == 0 || all_block_minors_have_rank(c.canonical(), r, lo, r * lo));
    }
    out.is_mds = out.is_qmds && out.divisible;
    return out;
}

struct SubsetDimensions {
    std::vector<std::size_t> blocks;  ///< 0-based block indices of I
    std::size_t restricted = 0;       ///< dim C^I
    std::size_t shortened = 0;        ///< dim C_I
    std::size_t expected_restricted = 0;
    std::size_t expected_shortened = 0;

    bool matches() const { return restricted == expected_restricted && shortened == expected_shortened; }
};

struct RestrictionProfile {
    std::vector<SubsetDimensions> entries;  ///< every nonempty I, by bitmask
    bool pattern_holds = true;
    std::optional<std::size_t> first_violation;  ///< index into entries
};

inline constexpr std::size_t kDefaultSubsetLimit = 20;

/// dim(C^I) and dim(C_I) for every nonempty I, compared against the
/// dimension pattern that characterizes dually QMDS codes.
inline RestrictionProfile restriction_profile(const LinearCode& c, std::size_t max_n = kDefaultSubsetLimit) {
    const std::size_t n = c.n(), r = c.r(), k = c.k();
    if (n > max_n || n >= 63)
        throw BudgetExceeded("restriction profile: n = " + std::to_string(n) + " exceeds subset limit " +
                             std::to_string(max_n));
    RestrictionProfile prof;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        SubsetDimensions e;
        e.blocks = mask_to_subset(mask);
        const auto outside = mask_to_subset(full & ~mask);
        const std::size_t sz = e.blocks.size();
        e.restricted = c.is_zero() ? 0 : rank(block_submatrix(c.canonical(), e.blocks, r));
        e.shortened = c.is_zero() ? 0 : k - rank(block_submatrix(c.canonical(), outside, r));
        e.expected_restricted = r * sz >= k ? k : r * sz;
        e.expected_shortened = r * (n - sz) <= k ? k - r * (n - sz) : 0;
        if (!e.matches() && prof.pattern_holds) {
            prof.pattern_holds = false;
            prof.first_violation = prof.entries.size();
        }
        prof.entries.push_back(std::move(e));
    }
    return prof;
}

}  // namespace qmds
