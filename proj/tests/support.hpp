/**************************************************************************
 * support.hpp
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

// Shared helpers for the test binaries. The oracles here deliberately avoid
// the library's elimination and enumeration code paths.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qmds/qmds.hpp"

namespace qmds::testing {

inline LinearCode load_fixture(const std::string& name) {
    return code_from_json(read_json_file(std::string(QMDS_FIXTURE_DIR) + "/" + name));
}

inline std::mt19937_64 rng_for(std::uint64_t tag) { return std::mt19937_64(0x5eed0000ULL + tag); }

/// Multiplication by schoolbook polynomial product and reduction on
/// coefficient vectors.
inline Elem slow_mul(const Field& f, Elem a, Elem b) {
    const std::uint32_t p = f.characteristic(), e = f.degree();
    const auto ca = f.coeffs(a), cb = f.coeffs(b);
    std::vector<std::uint64_t> prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    const auto& mod = f.modulus();
    for (std::size_t d = prod.size(); d-- > e;) {
        const std::uint64_t c = prod[d];
        if (!c) continue;
        for (std::uint32_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * mod[i]) % p;
    }
    std::vector<std::uint32_t> out(prod.begin(), prod.begin() + e);
    return f.from_coeffs(out);
}

/// Each message m in [0, q^k) as a base-q digit vector (last digit fastest)
/// times the user generator, computed directly.
inline std::vector<Elem> codeword_of(const LinearCode& c, std::uint64_t m) {
    const Field& f = *c.field();
    const Matrix& g = c.generator();
    std::vector<Elem> w(c.length(), f.zero());
    for (std::size_t i = g.rows(); i-- > 0; m /= f.order()) {
        const Elem coef{static_cast<std::uint32_t>(m % f.order())};
        if (!coef.v) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(coef, g(i, j)));
    }
    return w;
}

inline std::uint64_t code_size(const LinearCode& c) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < c.k(); ++i) s *= c.q();
    return s;
}

inline std::size_t block_weight(const std::vector<Elem>& w, std::size_t r) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < w.size(); i += r) {
        bool nz = false;
        for (std::size_t j = 0; j < r; ++j) nz = nz || w[i + j].v;
        out += nz;
    }
    return out;
}

/// (A_0, ..., A_n) by direct enumeration.
inline std::vector<std::uint64_t> oracle_distribution(const LinearCode& c) {
    std::vector<std::uint64_t> a(c.n() + 1, 0);
    const std::uint64_t total = code_size(c);
    for (std::uint64_t m = 0; m < total; ++m) ++a[block_weight(codeword_of(c, m), c.r())];
    return a;
}

inline std::size_t oracle_distance(const LinearCode& c) {
    const auto a = oracle_distribution(c);
    for (std::size_t j = 1; j < a.size(); ++j)
        if (a[j]) return j;
    return 0;
}

inline std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) {
    std::vector<BigInt> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

/// Rank over a prime field by integer elimination mod p.
inline std::size_t oracle_rank_prime(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        std::int64_t inv = 1;
        for (std::int64_t t = 1; t < p; ++t)
            if ((m[rank][c] % p) * t % p == 1) inv = t;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const std::int64_t s = (m[i][c] % p) * inv % p;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - s * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<std::int64_t>> to_ints(const Matrix& m) {
    std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).v;
    return out;
}

/// Constructed dually QMDS corpus used across several suites (q^k <= 2^16).
struct NamedCode {
    std::string name;
    LinearCode code;
};

inline std::vector<NamedCode> dually_qmds_corpus() {
    std::vector<NamedCode> out;
    for (std::size_t r = 1; r <= 3; ++r) out.push_back({"binary_long r=" + std::to_string(r), binary_long_code(r)});
    out.push_back({"fixture [7,2,3]", load_fixture("example_7_2_3.json")});
    out.push_back({"fixture [6,2,5]", load_fixture("example_6_2_5.json")});
    for (std::uint64_t q : {4u, 5u, 7u, 8u}) {
        const auto f = Field::of_order(q);
        for (std::size_t r = 1; r <= 3; ++r)
            for (std::size_t n = 2; r * n <= q; ++n)
                for (std::size_t k = 1; k < r * n; ++k) {
                    if (capped_pow(q, k, 1u << 16) > (1u << 16)) break;
                    out.push_back({"pi q=" + std::to_string(q) + " r=" + std::to_string(r) + " n=" +
                                       std::to_string(n) + " k=" + std::to_string(k),
                                   pi_code(f, split_moduli(f, r, n, RootMode::distinct), k)});
                }
    }
    return out;
}

}  // namespace qmds::testing
