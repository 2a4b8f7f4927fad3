/**************************************************************************
 * weights.hpp
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
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmds/code.hpp"
#include "qmds/combinatorics.hpp"

namespace qmds {

using BigRational = boost::multiprecision::cpp_rational;

/// Folded weight distribution (A_0, ..., A_n) of a code with parameters
/// (n, r, k) over F_q. Entries are signed so that impossible parameter sets
/// show up as negative counts instead of wrapping.
struct WeightDistribution {
    std::size_t n = 0, r = 0, k = 0;
    std::uint64_t q = 0;
    std::vector<BigInt> counts;

    BigInt total() const {
        BigInt s = 0;
        for (const auto& a : counts) s += a;
        return s;
    }

    bool has_negative() const {
        for (const auto& a : counts)
            if (a < 0) return true;
        return false;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Raised when a reconstructed distribution is not a valid count vector.
class InvalidDistribution : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

inline WeightDistribution wdist_exhaustive(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
    std::vector<std::uint64_t> counts(c.n() + 1, 0);
    for_each_codeword(c, [&](std::span<const Elem> w) { ++counts[folded_weight(w, c.r())]; }, budget);
    WeightDistribution out{c.n(), c.r(), c.k(), c.q(), {}};
    for (auto x : counts) out.counts.emplace_back(x);
    return out;
}

/// Closed-form distribution shared by every dually QMDS code of type
/// [n, r, k, n - ceil(k/r) + 1] over F_q.
inline WeightDistribution wdist_formula(std::size_t n, std::size_t r, std::size_t k, std::uint64_t q) {
    if (n == 0 || r == 0 || k < 1 || k > r * n) throw std::invalid_argument("wdist formula: need 1 <= k <= rn");
    const std::size_t d = n - ceil_div(k, r) + 1;
    WeightDistribution out{n, r, k, q, std::vector<BigInt>(n + 1, 0)};
    out.counts[0] = 1;
    for (std::size_t j = d; j <= n; ++j) {
        BigInt sum = 0;
        for (std::size_t i = 0; i <= j - d; ++i) {
            const std::size_t e = k - r * (n - j + i);  // >= k - r(n - d) >= 1
            BigInt term = binomial(static_cast<long>(j), static_cast<long>(i)) * (big_pow(q, e) - 1);
            if (i % 2)
                sum -= term;
            else
                sum += term;
        }
        out.counts[j] = binomial(static_cast<long>(n), static_cast<long>(j)) * sum;
    }
    return out;
}

/// Residual LHS_v - q^{k - rv} RHS_v of the folded MacWilliams identities,
/// v = 0..n. All zero iff the pair satisfies them.
inline std::vector<BigRational> macwilliams_check(const WeightDistribution& a, const WeightDistribution& a_perp) {
    const std::size_t n = a.n;
    if (a_perp.n != n || a_perp.r != a.r || a_perp.q != a.q || a.counts.size() != n + 1 ||
        a_perp.counts.size() != n + 1)
        throw std::invalid_argument("macwilliams: parameter mismatch");
    if (a_perp.k + a.k != a.r * n) throw std::invalid_argument("macwilliams: dual dimension must be rn - k");
    std::vector<BigRational> res;
    const long nn = static_cast<long>(n);
    for (long v = 0; v <= nn; ++v) {
        BigInt lhs = 0, rhs = 0;
        for (long j = 0; j <= nn - v; ++j) lhs += binomial(nn - j, v) * a.counts[j];
        for (long j = 0; j <= v; ++j) rhs += binomial(nn - j, nn - v) * a_perp.counts[j];
        const long e = static_cast<long>(a.k) - static_cast<long>(a.r) * v;
        BigRational scale = e >= 0 ? BigRational(big_pow(a.q, e)) : BigRational(BigInt(1), big_pow(a.q, -e));
        res.push_back(BigRational(lhs) - scale * BigRational(rhs));
    }
    return res;
}

using IntMatrix = std::vector<std::vector<BigInt>>;

/// M_n = ((-1)^{n-i+j} C(j, n-i)) and N_n = (C(n-j, i)), each (n+1) x (n+1).
struct PascalPair {
    IntMatrix m;
    IntMatrix n;
};

inline PascalPair pascal_pair(std::size_t size) {
    const long s = static_cast<long>(size);
    PascalPair pp{IntMatrix(size + 1, std::vector<BigInt>(size + 1)), IntMatrix(size + 1, std::vector<BigInt>(size + 1))};
    for (long i = 0; i <= s; ++i)
        for (long j = 0; j <= s; ++j) {
            BigInt b = binomial(j, s - i);
            pp.m[i][j] = (s - i + j) % 2 ? BigInt(-b) : b;
            pp.n[i][j] = binomial(s - j, i);
        }
    return pp;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
    IntMatrix out(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < inner; ++l)
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

/// Recovers the whole distribution from A_d, ..., A_{n - d_perp}.
///
/// Uses d_perp = n + 1 for a zero dual (k = rn). The tail
/// A_{n-d_perp+1}, ..., A_n is obtained by applying M_{d_perp-1} to the
/// MacWilliams right-hand sides.
inline WeightDistribution reconstruct_distribution(const std::vector<BigInt>& head, std::size_t n, std::size_t r,
                                                   std::size_t k, std::uint64_t q, std::size_t d,
                                                   std::size_t d_perp) {
    if (n == 0 || r == 0 || k < 1 || k > r * n) throw std::invalid_argument("reconstruct: need 1 <= k <= rn");
    if (d < 1 || d > n || d_perp < 1 || d_perp > n + 1) throw std::invalid_argument("reconstruct: distances out of range");
    if (r * (d_perp - 1) > k)
        throw std::invalid_argument("reconstruct: d_perp = " + std::to_string(d_perp) + " exceeds the Singleton limit");
    const long nn = static_cast<long>(n);
    const long tail_start = nn - static_cast<long>(d_perp) + 1;
    const long head_len = std::max(0L, tail_start - static_cast<long>(d));
    if (static_cast<long>(head.size()) != head_len)
        throw std::invalid_argument("reconstruct: expected " + std::to_string(head_len) + " head entries, got " +
                                    std::to_string(head.size()));

    // Known entries: everything below the tail.
    std::vector<BigInt> known(n + 1, 0);
    for (long j = 0; j < tail_start; ++j) {
        if (j == 0)
            known[j] = 1;
        else if (j >= static_cast<long>(d))
            known[j] = head[j - d];
    }

    const std::size_t D = d_perp;
    std::vector<BigInt> rhs(D);
    for (std::size_t u = 0; u < D; ++u) {
        BigInt b = binomial(nn, static_cast<long>(u)) * big_pow(q, k - r * u);
        for (long j = 0; j < tail_start; ++j) b -= binomial(nn - j, static_cast<long>(u)) * known[j];
        rhs[u] = b;
    }
    const auto pp = pascal_pair(D - 1);
    WeightDistribution out{n, r, k, q, known};
    for (std::size_t l = 0; l < D; ++l) {
        BigInt x = 0;
        for (std::size_t u = 0; u < D; ++u) x += pp.m[l][u] * rhs[u];
        const long j = tail_start + static_cast<long>(l);
        if (j == 0 && x != 1) throw InvalidDistribution("reconstruct: A_0 would be " + x.str());
        if (j >= 1 && j < static_cast<long>(d) && x != 0)
            throw InvalidDistribution("reconstruct: A_" + std::to_string(j) + " below d would be " + x.str());
        if (x < 0) throw InvalidDistribution("reconstruct: A_" + std::to_string(j) + " would be negative (" + x.str() + ")");
        out.counts[j] = x;
    }
    return out;
}

}  // namespace qmds
