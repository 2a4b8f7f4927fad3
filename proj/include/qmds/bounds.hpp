/**************************************************************************
 * bounds.hpp
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

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmds/classify.hpp"
#include "qmds/code.hpp"
#include "qmds/combinatorics.hpp"
#include "qmds/weights.hpp"

namespace qmds {

/// n <= d - 3 + q^{r ceil(k/r) - k} (q^r + 1) for codes with d >= 3 and
/// d = n - ceil(k/r) + 1.
inline BigInt length_bound_hamming(std::size_t d, std::uint64_t q, std::size_t r, std::size_t k) {
    if (d < 3) throw std::invalid_argument("hamming length bound: requires d >= 3 (got " + std::to_string(d) + ")");
    if (q < 2 || r == 0 || k == 0) throw std::invalid_argument("hamming length bound: need q >= 2, r >= 1, k >= 1");
    return BigInt(d - 3) + big_pow(q, r * ceil_div(k, r) - k) * (big_pow(q, r) + 1);
}

enum class Applicability { applies, inapplicable, needs_n };

inline const char* to_string(Applicability a) {
    switch (a) {
        case Applicability::applies: return "applies";
        case Applicability::inapplicable: return "inapplicable";
        default: return "needs n";
    }
}

struct BoundEntry {
    std::string name;       ///< short identifier
    std::string statement;  ///< what is bounded, e.g. "d <="
    std::string hypothesis;
    BigInt value = 0;
    Applicability applicability = Applicability::inapplicable;
};

/// Bounds on dually QMDS (and binary QMDS) codes with given q, r, k.
struct BoundReport {
    std::uint64_t q = 0;
    std::size_t r = 0, k = 0;
    std::optional<std::size_t> n;
    std::size_t epsilon = 0;  ///< r - (r ceil(k/r) - k)
    std::size_t delta = 0;    ///< r - (k - r floor(k/r))
    BoundEntry distance;      ///< d <= q^r - 1 + floor((q^r-1)/(q^eps-1)), k > r
    BoundEntry dual_distance; ///< d_perp <= q^r - 1 + floor((q^r-1)/(q^delta-1)), k < r(n-1)
    BoundEntry length;        ///< n bound, r < k < r(n-1)
    BoundEntry binary_qmds;   ///< n <= 2^{r+1} - 1, q = 2 and r+1 <= k <= 2r, QMDS of type [n,r,k,n-1]
    BoundEntry binary_dually; ///< n <= floor(4(2^r-1)/3) + 1, q = 2, r >= 2, r+2 <= k <= 2r, d = n-1

    std::vector<const BoundEntry*> entries() const {
        return {&distance, &dual_distance, &length, &binary_qmds, &binary_dually};
    }
};

inline BoundReport dually_qmds_bounds(std::uint64_t q, std::size_t r, std::size_t k,
                                      std::optional<std::size_t> n = std::nullopt) {
    if (q < 2 || r == 0 || k == 0) throw std::invalid_argument("bounds: need q >= 2, r >= 1, k >= 1");
    BoundReport rep;
    rep.q = q;
    rep.r = r;
    rep.k = k;
    rep.n = n;
    rep.epsilon = r - (r * ceil_div(k, r) - k);
    rep.delta = r - (k - r * (k / r));
    const BigInt qr1 = big_pow(q, r) - 1;
    const BigInt frac_eps = qr1 / (big_pow(q, rep.epsilon) - 1);
    const BigInt frac_delta = qr1 / (big_pow(q, rep.delta) - 1);

    // k < r(n - 1) is unknown without n.
    const Applicability upper = !n ? Applicability::needs_n
                                   : (k + r < r * *n ? Applicability::applies : Applicability::inapplicable);

    rep.distance = {"distance", "d <=", "k > r", qr1 + frac_eps,
                    k > r ? Applicability::applies : Applicability::inapplicable};
    rep.dual_distance = {"dual-distance", "d_perp <=", "k < r(n-1)", qr1 + frac_delta, upper};
    rep.length = {"length", "n <=", "r < k < r(n-1)",
                  k % r == 0 ? BigInt(2 * qr1) : BigInt(2 * qr1 - 1 + frac_eps + frac_delta),
                  k > r ? upper : Applicability::inapplicable};
    const bool binary = q == 2;
    rep.binary_qmds = {"binary-qmds-length", "n <=", "q = 2, r+1 <= k <= 2r, d = n-1", big_pow(2, r + 1) - 1,
                       binary && r + 1 <= k && k <= 2 * r ? Applicability::applies : Applicability::inapplicable};
    rep.binary_dually = {"binary-dually-length", "n <=", "q = 2, r >= 2, r+2 <= k <= 2r, d = n-1",
                         (4 * (big_pow(2, r) - 1)) / 3 + 1,
                         binary && r >= 2 && r + 2 <= k && k <= 2 * r ? Applicability::applies
                                                                     : Applicability::inapplicable};
    return rep;
}

/// C(n,r,k) = k C(n, ceil(k/r)) C(r ceil(k/r), k) + r floor(k/r) C(n, floor(k/r)) C(k, r floor(k/r)).
inline BigInt density_constant(std::size_t n, std::size_t r, std::size_t k) {
    if (n == 0 || r == 0 || k < 1 || k > r * n) throw std::invalid_argument("density constant: need 1 <= k <= rn");
    const long hi = static_cast<long>(ceil_div(k, r)), lo = static_cast<long>(k / r);
    const long nn = static_cast<long>(n), rr = static_cast<long>(r), kk = static_cast<long>(k);
    return BigInt(kk) * binomial(nn, hi) * binomial(rr * hi, kk) +
           BigInt(rr * lo) * binomial(nn, lo) * binomial(kk, rr * lo);
}

struct DensityResult {
    std::size_t trials = 0;
    std::size_t dually_qmds = 0;
    std::uint64_t seed = 0;
    BigRational empirical;          ///< dually_qmds / trials
    BigRational theoretical_bound;  ///< 1 - C(n,r,k)/q
    bool vacuous = false;           ///< bound <= 0
    double sigma = 0;               ///< sqrt(p(1-p)/trials) at p = max(bound, 0)

    /// empirical >= bound - 3 sigma, decided in exact arithmetic.
    bool within_three_sigma() const {
        if (vacuous || empirical >= theoretical_bound) return true;
        const BigRational gap = theoretical_bound - empirical;
        const BigRational p = theoretical_bound;
        return gap * gap * trials <= 9 * p * (1 - p);
    }
};

/// Generator for trial t of a seeded experiment; independent of how trials
/// are partitioned.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

/// Fraction of uniformly sampled [n,r,k] codes over F_q that are dually QMDS.
inline DensityResult density_experiment(std::size_t n, std::size_t r, std::size_t k, std::uint64_t q,
                                        std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("density: trials must be at least 1");
    if (n == 0 || r == 0 || k < 1 || k >= r * n) throw std::invalid_argument("density: need 1 <= k <= rn - 1");
    const auto field = Field::of_order(q);
    DensityResult res;
    res.trials = trials;
    res.seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, t);
        if (classify(random_code(field, n, r, k, rng)).is_dually_qmds) ++res.dually_qmds;
    }
    res.empirical = BigRational(BigInt(res.dually_qmds), BigInt(trials));
    res.theoretical_bound = 1 - BigRational(density_constant(n, r, k), BigInt(q));
    res.vacuous = res.theoretical_bound <= 0;
    const double p = res.vacuous ? 0.0 : res.theoretical_bound.convert_to<double>();
    res.sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    return res;
}

}  // namespace qmds
