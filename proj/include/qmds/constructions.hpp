/**************************************************************************
 * constructions.hpp
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

#include "qmds/classify.hpp"
#include "qmds/code.hpp"
#include "qmds/poly.hpp"

namespace qmds {

/// n monic degree-r polynomials, pairwise coprime.
struct ModuliSet {
    std::vector<Poly> polys;

    std::size_t degree() const { return polys.empty() ? 0 : static_cast<std::size_t>(polys.front().degree()); }

    void validate() const {
        if (polys.empty()) throw std::invalid_argument("moduli: empty set");
        const long r = polys.front().degree();
        if (r < 1) throw std::invalid_argument("moduli: degree must be at least 1");
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (polys[i].degree() != r)
                throw std::invalid_argument("moduli: F_" + std::to_string(i + 1) + " has degree " +
                                            std::to_string(polys[i].degree()) + ", expected " + std::to_string(r));
            if (!polys[i].is_monic()) throw std::invalid_argument("moduli: F_" + std::to_string(i + 1) + " is not monic");
            for (std::size_t j = 0; j < i; ++j)
                if (!coprime(polys[i], polys[j]))
                    throw std::invalid_argument("moduli: F_" + std::to_string(j + 1) + " and F_" + std::to_string(i + 1) +
                                                " share a common factor");
        }
    }
};

/// Code of residues (x^i mod F_1, ..., x^i mod F_n), i < k, each residue
/// written as r coefficients low-degree-first. Optional blocks right-multiply
/// block j by blocks[j].
inline LinearCode pi_code(const FieldPtr& field, const ModuliSet& moduli, std::size_t k,
                          const std::optional<std::vector<Matrix>>& blocks = std::nullopt) {
    moduli.validate();
    const std::size_t n = moduli.polys.size(), r = moduli.degree();
    if (k < 1 || k > r * n) throw std::invalid_argument("pi code: k must lie in [1, rn]");
    for (const auto& f : moduli.polys)
        if (!same_field(f.field(), field)) throw std::invalid_argument("pi code: moduli over a different field");
    Matrix g(field, k, r * n);
    const Poly x = Poly::monomial(field, 1);
    for (std::size_t j = 0; j < n; ++j) {
        Poly rem = Poly::monomial(field, 0) % moduli.polys[j];
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t l = 0; l < r; ++l) g(i, j * r + l) = rem.coeff(l);
            rem = (rem * x) % moduli.polys[j];
        }
    }
    if (blocks) {
        Isometry iso;
        iso.blocks = *blocks;
        iso.sigma.resize(n);
        std::iota(iso.sigma.begin(), iso.sigma.end(), 0);
        iso.validate(n, r);
        g = apply_isometry(g, iso, r);
    }
    return LinearCode::from_generator(field, n, r, std::move(g));
}

enum class RootMode { distinct, repeated };

/// F_i = prod_j (x - a_{i,j}) with disjoint root sets. Distinct mode takes
/// consecutive chunks of r field elements in index order; repeated mode uses
/// (x - a_i)^r with a_i the i-th element.
inline ModuliSet split_moduli(const FieldPtr& field, std::size_t r, std::size_t n, RootMode mode) {
    if (r == 0 || n == 0) throw std::invalid_argument("split moduli: n and r must be positive");
    const std::uint64_t q = field->order();
    if (mode == RootMode::distinct && r * n > q)
        throw std::invalid_argument("split moduli: rn = " + std::to_string(r * n) + " exceeds q = " + std::to_string(q));
    if (mode == RootMode::repeated && n > q)
        throw std::invalid_argument("split moduli: n = " + std::to_string(n) + " exceeds q = " + std::to_string(q));
    ModuliSet out;
    for (std::size_t i = 0; i < n; ++i) {
        Poly f = Poly::monomial(field, 0);
        for (std::size_t j = 0; j < r; ++j) {
            const std::uint64_t root = mode == RootMode::distinct ? i * r + j : i;
            f = f * Poly::linear(field, field->from_index(root));
        }
        out.polys.push_back(std::move(f));
    }
    return out;
}

/// The first n monic irreducibles of degree r, ordered by coefficient index
/// (low-degree coefficient varying fastest).
inline ModuliSet irreducible_moduli(const FieldPtr& field, std::size_t r, std::size_t n) {
    if (r == 0 || n == 0) throw std::invalid_argument("irreducible moduli: n and r must be positive");
    const std::uint64_t q = field->order();
    const std::uint64_t count = capped_pow(q, r, std::uint64_t{1} << 32);
    ModuliSet out;
    for (std::uint64_t idx = 0; idx < count && out.polys.size() < n; ++idx) {
        std::vector<Elem> c(r + 1);
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < r; ++i, t /= q) c[i] = field->from_index(t % q);
        c[r] = field->one();
        Poly f(field, std::move(c));
        if (is_irreducible(f)) out.polys.push_back(std::move(f));
    }
    if (out.polys.size() < n)
        throw std::invalid_argument("irreducible moduli: only " + std::to_string(out.polys.size()) +
                                    " monic irreducibles of degree " + std::to_string(r));
    return out;
}

/// Rows u_{I,1}, ..., u_{I,r+1} in F_2^r for the nonempty I subset of
/// {0, ..., r} encoded as a bitmask. Row i is e_i below max(I), e_{i-1}
/// above it, and the sum of e_j over the other elements of I at max(I).
inline std::vector<std::vector<std::uint8_t>> subset_vectors(std::size_t r, std::uint64_t mask) {
    if (r == 0 || r >= 63) throw std::invalid_argument("subset vectors: r out of range");
    if (mask == 0 || mask >> (r + 1)) throw std::invalid_argument("subset vectors: I must be a nonempty subset of [r+1]");
    const auto I = mask_to_subset(mask);
    const std::size_t top = I.back();
    std::vector<std::vector<std::uint8_t>> u(r + 1, std::vector<std::uint8_t>(r, 0));
    for (std::size_t i = 0; i <= r; ++i) {
        if (i < top)
            u[i][i] = 1;
        else if (i > top)
            u[i][i - 1] = 1;
        else
            for (std::size_t j = 0; j + 1 < I.size(); ++j) u[i][I[j]] = 1;
    }
    return u;
}

/// The binary code of type [2^{r+1}-1, r, r+1, 2^{r+1}-2]: block i is built
/// from the i-th nonempty subset of [r+1] in ascending bitmask order.
inline LinearCode binary_long_code(std::size_t r) {
    if (r == 0 || r > 20) throw std::invalid_argument("binary long code: r must lie in [1, 20]");
    const auto f2 = Field::create(2);
    const std::size_t n = (std::size_t{1} << (r + 1)) - 1;
    Matrix g(f2, r + 1, r * n);
    for (std::size_t b = 0; b < n; ++b) {
        const auto u = subset_vectors(r, b + 1);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < r; ++j) g(i, b * r + j) = Elem{u[i][j]};
    }
    return LinearCode::from_generator(f2, n, r, std::move(g));
}

/// Span of the first k' canonical rows of a QMDS code, for
/// r(ceil(k/r) - 1) < k' < k.
inline LinearCode qmds_subcode(const LinearCode& c, std::size_t k_prime) {
    const std::size_t r = c.r(), k = c.k();
    if (k == 0) throw std::invalid_argument("subcode: zero code");
    const std::size_t lo = r * (ceil_div(k, r) - 1);
    if (!(lo < k_prime && k_prime < k))
        throw std::invalid_argument("subcode: k' = " + std::to_string(k_prime) + " outside the window (" +
                                    std::to_string(lo) + ", " + std::to_string(k) + ")");
    if (!is_qmds_by_minors(c)) throw std::invalid_argument("subcode: input code is not QMDS");
    return LinearCode::from_generator(c.field(), c.n(), r, c.canonical().top_rows(k_prime));
}

/// Dual of the repetition code {(c, ..., c)}: rows e_{i,j} - e_{n,j} for
/// i < n, j < r, where e_{i,j} is coordinate j of block i. Type [n, r, r(n-1), 2].
inline LinearCode repetition_dual_code(std::size_t n, std::size_t r, const FieldPtr& field) {
    if (n < 2) throw std::invalid_argument("repetition dual: n must be at least 2");
    if (r == 0) throw std::invalid_argument("repetition dual: r must be positive");
    Matrix g(field, r * (n - 1), r * n);
    const Elem minus_one = field->neg(field->one());
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            g(i * r + j, i * r + j) = field->one();
            g(i * r + j, (n - 1) * r + j) = minus_one;
        }
    return LinearCode::from_generator(field, n, r, std::move(g));
}

}  // namespace qmds
