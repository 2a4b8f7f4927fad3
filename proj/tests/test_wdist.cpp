/**************************************************************************
 * test_wdist.cpp
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

#include <gtest/gtest.h>

#include "support.hpp"

namespace qmds {
namespace {

using testing::load_fixture;
using testing::rng_for;
using testing::to_big;

std::vector<BigInt> big(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

bool all_zero(const std::vector<BigRational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Oracle for the dually QMDS distribution: words supported inside I form the
// shortened code, of dimension max(0, k - r(n-|I|)); inclusion-exclusion over
// supports gives A_j.
std::vector<BigInt> shortening_oracle(std::size_t n, std::size_t r, std::size_t k, std::uint64_t q) {
    auto inside = [&](std::size_t s) {  // codewords supported in a fixed s-set
        const long dim = static_cast<long>(k) - static_cast<long>(r * (n - s));
        return big_pow(q, dim > 0 ? dim : 0);
    };
    std::vector<BigInt> a(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt exact = 0;
        for (std::size_t i = 0; i <= j; ++i) {
            BigInt t = binomial(static_cast<long>(j), static_cast<long>(i)) * inside(j - i);
            exact += i % 2 ? BigInt(-t) : t;
        }
        a[j] = binomial(static_cast<long>(n), static_cast<long>(j)) * exact;
    }
    return a;
}

// The tail formula written out term by term, valid for d_perp <= n.
BigInt tail_oracle(std::size_t j, const std::vector<BigInt>& a, std::size_t n, std::size_t r, std::size_t k,
                   std::uint64_t q, std::size_t d, std::size_t d_perp) {
    const long nn = static_cast<long>(n), jj = static_cast<long>(j), dp = static_cast<long>(d_perp);
    BigInt out = 0;
    for (long i = 0; i <= jj - nn + dp - 1; ++i) {
        BigInt term = binomial(nn, jj) * binomial(jj, i) * (big_pow(q, k - r * (n - j + i)) - 1);
        for (long v = static_cast<long>(d); v <= nn - dp; ++v)
            term -= binomial(nn - jj + i, i) * binomial(nn - v, nn - jj + i) * a[v];
        out += i % 2 ? BigInt(-term) : term;
    }
    return out;
}

TEST(Exhaustive, Examples) {
    auto f2 = Field::create(2);
    EXPECT_EQ(wdist_exhaustive(LinearCode::zero(f2, 3, 2)).counts, big({1, 0, 0, 0}));
    EXPECT_EQ(wdist_exhaustive(load_fixture("example_7_2_3.json")).counts, big({1, 0, 0, 0, 0, 0, 7, 0}));
    EXPECT_GE(wdist_exhaustive(load_fixture("example_qmds1_3_3_4.json")).counts[2], 4);
    EXPECT_THROW(wdist_exhaustive(load_fixture("example_9_2_13.json"), 1000), BudgetExceeded);
}

TEST(Formula, Examples) {
    EXPECT_EQ(wdist_formula(3, 3, 4, 2).counts, big({1, 0, 3, 12}));
    const auto a = wdist_formula(7, 2, 3, 2);
    EXPECT_EQ(a.counts[6], 7);
    EXPECT_EQ(a.counts[7], 0);
    EXPECT_FALSE(a.has_negative());
    EXPECT_THROW(wdist_formula(3, 3, 0, 2), std::invalid_argument);
}

TEST(Formula, ClassicalMdsSpecialization) {
    auto f5 = Field::of_order(5);
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            const auto c = pi_code(f5, split_moduli(f5, 1, n, RootMode::distinct), k);
            EXPECT_EQ(wdist_exhaustive(c).counts, wdist_formula(n, 1, k, 5).counts) << n << "," << k;
        }
}

TEST(Formula, NegativeEntriesReported) {
    // No binary [5,1,2,4] MDS code exists.
    const auto a = wdist_formula(5, 1, 2, 2);
    EXPECT_TRUE(a.has_negative());
    EXPECT_EQ(a.counts[5], -2);
}

TEST(Formula, MatchesShorteningOracleAndInvariants) {
    for (std::uint64_t q : {2u, 3u, 4u, 7u})
        for (std::size_t n = 1; n <= 7; ++n)
            for (std::size_t r = 1; r <= 4; ++r)
                for (std::size_t k = 1; k <= r * n; ++k) {
                    const auto a = wdist_formula(n, r, k, q);
                    EXPECT_EQ(a.counts, shortening_oracle(n, r, k, q)) << n << "," << r << "," << k << " q=" << q;
                    EXPECT_EQ(a.total(), big_pow(q, k));
                    const std::size_t d = singleton_bounds(n, r, k).d_max;
                    EXPECT_EQ(a.counts[0], 1);
                    for (std::size_t j = 1; j < d; ++j) EXPECT_EQ(a.counts[j], 0);
                }
}

TEST(Formula, CharacterizesDuallyQmds) {
    for (const auto& [name, c] : testing::dually_qmds_corpus()) {
        SCOPED_TRACE(name);
        EXPECT_EQ(wdist_exhaustive(c).counts, wdist_formula(c.n(), c.r(), c.k(), c.q()).counts);
    }
    const auto neg = load_fixture("example_qmds1_3_3_4.json");
    EXPECT_NE(wdist_exhaustive(neg).counts, wdist_formula(3, 3, 4, 2).counts);
}

TEST(Pascal, InversePair) {
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto pp = pascal_pair(n);
        IntMatrix id(n + 1, std::vector<BigInt>(n + 1, 0));
        for (std::size_t i = 0; i <= n; ++i) id[i][i] = 1;
        EXPECT_EQ(multiply(pp.m, pp.n), id);
        EXPECT_EQ(multiply(pp.n, pp.m), id);
    }
}

TEST(MacWilliams, TrivialPair) {
    auto f3 = Field::create(3);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t r = 1; r <= 2; ++r) {
            const auto full = wdist_exhaustive(LinearCode::full(f3, n, r));
            const auto zero = wdist_exhaustive(LinearCode::zero(f3, n, r));
            EXPECT_TRUE(all_zero(macwilliams_check(full, zero)));
            EXPECT_TRUE(all_zero(macwilliams_check(zero, full)));
        }
}

TEST(MacWilliams, RandomCodesAndPerturbation) {
    auto rng = rng_for(31);
    auto f2 = Field::create(2);
    for (int t = 0; t < 50; ++t) {
        const auto c = random_code(f2, 3, 2, 3, rng);
        const auto a = wdist_exhaustive(c);
        const auto b = wdist_exhaustive(dual(c));
        EXPECT_TRUE(all_zero(macwilliams_check(a, b)));
        auto bumped = a;
        bumped.counts[t % 4] += 1;
        EXPECT_FALSE(all_zero(macwilliams_check(bumped, b)));
    }
    const auto a = wdist_exhaustive(random_code(f2, 3, 2, 2, rng));
    EXPECT_THROW(macwilliams_check(a, a), std::invalid_argument);  // dual must have dimension rn - k
}

TEST(MacWilliams, HoldsForRandomCodesOverSeveralFields) {
    auto rng = rng_for(32);
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t r = 1; r <= 3; ++r) {
                if (capped_pow(q, r * n, 1u << 14) > (1u << 14)) continue;
                auto f = Field::of_order(q);
                for (std::size_t k = 0; k <= r * n; ++k) {
                    const auto c = random_code(f, n, r, k, rng);
                    EXPECT_TRUE(all_zero(macwilliams_check(wdist_exhaustive(c), wdist_exhaustive(dual(c)))));
                }
            }
}

TEST(Reconstruct, EmptyHeadReproducesFormula) {
    for (std::uint64_t q : {2u, 3u, 5u})
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::size_t r = 1; r <= 3; ++r)
                for (std::size_t k = 1; k <= r * n; ++k) {
                    const auto s = singleton_bounds(n, r, k);
                    const std::size_t dp = k == r * n ? n + 1 : s.dperp_max;
                    const auto formula = wdist_formula(n, r, k, q);
                    if (formula.has_negative()) {
                        EXPECT_THROW(reconstruct_distribution({}, n, r, k, q, s.d_max, dp), InvalidDistribution);
                    } else {
                        EXPECT_EQ(reconstruct_distribution({}, n, r, k, q, s.d_max, dp), formula);
                    }
                }
}

TEST(Reconstruct, ExactOnRandomCodes) {
    auto rng = rng_for(33);
    for (std::uint64_t q : {2u, 3u, 4u})
        for (std::size_t n = 2; n <= 5; ++n)
            for (std::size_t r = 1; r <= 3; ++r) {
                if (capped_pow(q, r * n, 1u << 14) > (1u << 14)) continue;
                auto f = Field::of_order(q);
                for (std::size_t k = 1; k <= r * n; ++k)
                    for (int t = 0; t < 3; ++t) {
                        const auto c = random_code(f, n, r, k, rng);
                        const auto a = wdist_exhaustive(c);
                        const std::size_t d = min_distance(c);
                        const std::size_t dp = c.is_full() ? n + 1 : min_distance(dual(c));
                        std::vector<BigInt> head;
                        for (std::size_t j = d; j + dp <= n; ++j) head.push_back(a.counts[j]);
                        EXPECT_EQ(reconstruct_distribution(head, n, r, k, q, d, dp), a);
                        if (dp > n) continue;
                        for (std::size_t j = n - dp + 1; j <= n; ++j)
                            EXPECT_EQ(tail_oracle(j, a.counts, n, r, k, q, d, dp), a.counts[j]);
                    }
            }
}

TEST(Reconstruct, Errors) {
    EXPECT_THROW(reconstruct_distribution(big({1}), 3, 3, 4, 2, 2, 2), std::invalid_argument);
    EXPECT_THROW(reconstruct_distribution({}, 3, 3, 4, 2, 2, 3), std::invalid_argument);  // d_perp above Singleton
    EXPECT_THROW(reconstruct_distribution(big({1000, 1000}), 5, 1, 2, 2, 2, 2), InvalidDistribution);
}

}  // namespace
}  // namespace qmds
