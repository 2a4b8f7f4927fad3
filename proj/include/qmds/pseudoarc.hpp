/**************************************************************************
 * pseudoarc.hpp
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
#include "qmds/combinatorics.hpp"

namespace qmds {

/// n subspaces of F_q^m, each given by an m x r basis matrix.
struct PseudoArc {
    FieldPtr field;
    std::size_t m = 0;
    std::size_t r = 0;
    std::vector<Matrix> subspaces;

    std::size_t n() const { return subspaces.size(); }

    /// Basis matrices side by side (m x rn).
    Matrix concatenated() const {
        Matrix out(field, m, 0);
        for (const auto& h : subspaces) out = hstack(out, h);
        return out;
    }

    void validate() const {
        if (!field) throw std::invalid_argument("arc: missing field");
        if (subspaces.empty()) throw std::invalid_argument("arc: no subspaces");
        for (std::size_t i = 0; i < subspaces.size(); ++i) {
            const auto& h = subspaces[i];
            if (h.rows() != m || h.cols() != r)
                throw std::invalid_argument("arc: subspace " + std::to_string(i + 1) + " is not " + std::to_string(m) +
                                            " x " + std::to_string(r));
            if (!same_field(h.field(), field)) throw std::invalid_argument("arc: subspace over a different field");
            if (rank(h) != r)
                throw std::invalid_argument("arc: subspace " + std::to_string(i + 1) + " has dimension " +
                                            std::to_string(rank(h)) + " < r = " + std::to_string(r));
        }
    }
};

struct ArcParams {
    std::size_t n = 0, r = 0, m = 0, t = 0;
    bool nondegenerate = false;

    friend bool operator==(const ArcParams&, const ArcParams&) = default;
};

/// Subspace i is spanned by the i-th column block of the canonical parity-check matrix.
inline PseudoArc arc_from_code(const LinearCode& c) {
    const std::size_t m = c.length() - c.k();
    if (m == 0) throw std::invalid_argument("arc from code: m = rn - k = 0 (full-space code)");
    if (m < c.r())
        throw std::invalid_argument("arc from code: m = " + std::to_string(m) + " < r = " + std::to_string(c.r()));
    PseudoArc a{c.field(), m, c.r(), {}};
    for (std::size_t i = 0; i < c.n(); ++i) {
        const std::vector<std::size_t> b{i};
        Matrix h = block_submatrix(c.parity(), b, c.r());
        if (rank(h) != c.r())
            throw std::invalid_argument("arc from code: parity block " + std::to_string(i + 1) + " has rank " +
                                        std::to_string(rank(h)) + " < r");
        a.subspaces.push_back(std::move(h));
    }
    return a;
}

/// t is the largest t such that every t of the subspaces are in direct sum.
inline ArcParams arc_params(const PseudoArc& a, std::size_t max_n = kDefaultSubsetLimit) {
    a.validate();
    const std::size_t n = a.n(), r = a.r;
    if (n > max_n)
        throw BudgetExceeded("arc params: n = " + std::to_string(n) + " exceeds subset limit " + std::to_string(max_n));
    const Matrix all = a.concatenated();
    ArcParams p{n, r, a.m, 1, rank(all) == a.m};
    for (std::size_t t = 2; t <= n && t * r <= a.m; ++t) {
        const bool ok = for_each_subset(n, t, [&](std::span<const std::size_t> s) {
            return rank(block_submatrix(all, s, r)) == t * r;
        });
        if (!ok) break;
        p.t = t;
    }
    return p;
}

/// Code with parity-check matrix (H_1 | ... | H_n). Requires a nondegenerate
/// arc; the result may be the zero code.
inline LinearCode code_from_arc(const PseudoArc& a) {
    a.validate();
    const Matrix h = a.concatenated();
    if (rank(h) != a.m) throw std::invalid_argument("code from arc: degenerate arc (subspaces do not span F_q^m)");
    return LinearCode::from_span(a.field, a.n(), a.r, kernel_basis(h));
}

/// Data of B H = H' P_tau Diag(A'_1, ..., A'_n), 0-based tau.
struct ArcWitness {
    Matrix b;
    std::vector<std::size_t> tau;
    std::vector<Matrix> blocks;
};

/// H' P_tau Diag(A'): block j equals H'_{tau(j)} A'_j.
inline Matrix permute_scale_blocks(const Matrix& h2, std::span<const std::size_t> tau, std::span<const Matrix> blocks,
                                   std::size_t r) {
    Matrix out(h2.field(), h2.rows(), h2.cols());
    for (std::size_t j = 0; j < tau.size(); ++j) {
        const std::vector<std::size_t> src{tau[j]};
        const Matrix blk = block_submatrix(h2, src, r) * blocks[j];
        for (std::size_t i = 0; i < h2.rows(); ++i)
            for (std::size_t l = 0; l < r; ++l) out(i, j * r + l) = blk(i, l);
    }
    return out;
}

/// B with B h = k, for h of full row rank; nullopt when no such B exists.
inline std::optional<Matrix> solve_left(const Matrix& h, const Matrix& k) {
    const auto red = rref_rank(h);
    if (red.rank != h.rows()) throw std::invalid_argument("solve: left factor must have full row rank");
    const Matrix b = k.select_cols(red.pivot_cols) * inverse(h.select_cols(red.pivot_cols));
    if (!(b * h == k)) return std::nullopt;
    return b;
}

inline bool verify_arc_witness(const Matrix& h, const Matrix& h2, const ArcWitness& w, std::size_t r) {
    if (w.b.rows() != h.rows() || w.b.cols() != h.rows() || !is_invertible(w.b)) return false;
    if (h.rows() != h2.rows() || h.cols() != h2.cols()) return false;
    return w.b * h == permute_scale_blocks(h2, w.tau, w.blocks, r);
}

/// Witness that arc_from_code(c) and arc_from_code(apply_isometry(c, iso))
/// are equivalent: tau = sigma^{-1}, A'_j = A_{tau(j)}^T, B solved and verified.
inline ArcWitness arc_equivalence_witness(const LinearCode& c, const Isometry& iso) {
    iso.validate(c.n(), c.r());
    if (c.is_full()) throw std::invalid_argument("witness: full-space code has no parity-check matrix");
    const LinearCode image = apply_isometry(c, iso);
    ArcWitness w;
    w.tau.resize(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) w.tau[iso.sigma[i]] = i;
    for (std::size_t j = 0; j < c.n(); ++j) w.blocks.push_back(iso.blocks[w.tau[j]].transpose());
    const Matrix k = permute_scale_blocks(image.parity(), w.tau, w.blocks, c.r());
    auto b = solve_left(c.parity(), k);
    if (!b || !is_invertible(*b)) throw std::domain_error("witness: no invertible B solves the system");
    w.b = std::move(*b);
    return w;
}

}  // namespace qmds
