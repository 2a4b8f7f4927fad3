/**************************************************************************
 * code.hpp
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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmds/combinatorics.hpp"
#include "qmds/extension.hpp"
#include "qmds/field.hpp"
#include "qmds/matrix.hpp"

namespace qmds {

/// Default cap on the number of codewords an exhaustive routine may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Raised when an exhaustive enumeration would exceed its budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Number of nonzero width-r blocks of v.
inline std::size_t folded_weight(std::span<const Elem> v, std::size_t r) {
    if (r == 0 || v.size() % r != 0) throw std::invalid_argument("folded weight: length not divisible by block width");
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size(); i += r)
        for (std::size_t j = 0; j < r; ++j)
            if (v[i + j].v) {
                ++w;
                break;
            }
    return w;
}

/// An F_q-linear code in F_q^{rn} with n blocks of width r.
///
/// The generator passed by the caller is kept for display and serialization;
/// identity of codes is decided on the RREF of that generator. The zero code
/// (k = 0) is representable.
class LinearCode {
   public:
    LinearCode() = default;

    /// Requires a full-rank generator with r*n columns.
    static LinearCode from_generator(FieldPtr field, std::size_t n, std::size_t r, Matrix gen) {
        check_shape(field, n, r, gen);
        if (gen.rows() > n * r) throw std::invalid_argument("code: more generator rows than r*n");
        auto red = rref_rank(gen);
        if (red.rank != gen.rows())
            throw std::invalid_argument("code: generator is rank deficient (rank " + std::to_string(red.rank) + " < " +
                                        std::to_string(gen.rows()) + " rows)");
        return LinearCode(std::move(field), n, r, std::move(gen), red.rref.top_rows(red.rank));
    }

    /// Code spanned by the rows of m (any rank).
    static LinearCode from_span(FieldPtr field, std::size_t n, std::size_t r, const Matrix& m) {
        check_shape(field, n, r, m);
        Matrix basis = row_space_basis(m);
        return LinearCode(std::move(field), n, r, basis, basis);
    }

    static LinearCode zero(FieldPtr field, std::size_t n, std::size_t r) {
        Matrix empty(field, 0, n * r);
        return LinearCode(std::move(field), n, r, empty, empty);
    }

    static LinearCode full(FieldPtr field, std::size_t n, std::size_t r) {
        auto id = Matrix::identity(field, n * r);
        return LinearCode(std::move(field), n, r, id, id);
    }

    const FieldPtr& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    std::size_t k() const { return canonical_.rows(); }
    std::size_t length() const { return n_ * r_; }
    std::uint64_t q() const { return field_->order(); }
    bool is_zero() const { return k() == 0; }
    bool is_full() const { return k() == length(); }

    const Matrix& generator() const { return generator_; }
    const Matrix& canonical() const { return canonical_; }

    /// Canonical parity-check matrix: kernel basis of the canonical generator.
    const Matrix& parity() const {
        std::call_once(cache_->once, [this] { cache_->parity = kernel_basis(canonical_); });
        return cache_->parity;
    }

    std::vector<Elem> encode(std::span<const Elem> message) const {
        if (message.size() != k()) throw std::invalid_argument("code: message length must equal k");
        const Field& f = *field_;
        std::vector<Elem> out(length(), f.zero());
        for (std::size_t i = 0; i < k(); ++i) add_scaled_row(f, out, canonical_.row(i), message[i]);
        return out;
    }

    bool contains(std::span<const Elem> word) const {
        if (word.size() != length()) return false;
        Matrix w(field_, 1, length(), std::vector<Elem>(word.begin(), word.end()));
        return rank(vstack(canonical_, w)) == k();
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.canonical_ == b.canonical_;
    }

   private:
    struct Cache {
        std::once_flag once;
        Matrix parity;
    };

    LinearCode(FieldPtr field, std::size_t n, std::size_t r, Matrix gen, Matrix canonical)
        : field_(std::move(field)),
          n_(n),
          r_(r),
          generator_(std::move(gen)),
          canonical_(std::move(canonical)),
          cache_(std::make_shared<Cache>()) {}

    static void check_shape(const FieldPtr& field, std::size_t n, std::size_t r, const Matrix& m) {
        if (n == 0 || r == 0) throw std::invalid_argument("code: n and r must be positive");
        if (m.cols() != n * r)
            throw std::invalid_argument("code: generator has " + std::to_string(m.cols()) + " columns, expected " +
                                        std::to_string(n * r));
        if (!same_field(field, m.field())) throw std::invalid_argument("code: generator over a different field");
    }

    FieldPtr field_;
    std::size_t n_ = 0;
    std::size_t r_ = 0;
    Matrix generator_;
    Matrix canonical_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Visits every codeword, messages in lexicographic order over F_q^k (last
/// coordinate fastest, field elements in index order). Throws BudgetExceeded
/// if q^k > budget.
template <class Fn>
void for_each_codeword(const LinearCode& c, Fn&& fn, std::uint64_t budget = kDefaultBudget) {
    const std::uint64_t total = capped_pow(c.q(), c.k(), budget);
    if (total > budget)
        throw BudgetExceeded("enumeration of " + std::to_string(c.q()) + "^" + std::to_string(c.k()) +
                             " codewords exceeds budget " + std::to_string(budget));
    const Field& f = *c.field();
    const Matrix& g = c.canonical();
    const std::size_t k = c.k();
    std::vector<Elem> word(c.length(), f.zero());
    std::vector<std::uint32_t> msg(k, 0);
    const auto q = static_cast<std::uint32_t>(c.q());
    for (std::uint64_t step = 0;; ++step) {
        fn(std::span<const Elem>(word));
        if (step + 1 == total) break;
        std::size_t i = k;
        while (i-- > 0) {
            const Elem old{msg[i]};
            const std::uint32_t next = msg[i] + 1 == q ? 0 : msg[i] + 1;
            msg[i] = next;
            add_scaled_row(f, word, g.row(i), f.sub(Elem{next}, old));
            if (next != 0) break;
        }
    }
}

enum class DistanceMethod { exhaustive, rank_blocks };

/// Smallest s such that every s-block column submatrix of G has rank k.
inline std::size_t information_block_count(const LinearCode& c) {
    const std::size_t k = c.k();
    for (std::size_t s = ceil_div(k, c.r()); s <= c.n(); ++s) {
        const bool all = for_each_subset(c.n(), s, [&](std::span<const std::size_t> blocks) {
            return rank(block_submatrix(c.canonical(), blocks, c.r())) == k;
        });
        if (all) return s;
    }
    return c.n();
}

/// Minimum folded distance. Undefined for the zero code.
inline std::size_t min_distance(const LinearCode& c, DistanceMethod method = DistanceMethod::rank_blocks,
                                std::uint64_t budget = kDefaultBudget) {
    if (c.is_zero()) throw std::invalid_argument("distance: undefined for the zero code");
    if (method == DistanceMethod::rank_blocks) return c.n() - information_block_count(c) + 1;
    std::size_t best = c.n();
    bool first = true;
    for_each_codeword(
        c,
        [&](std::span<const Elem> w) {
            if (first) {
                first = false;
                return;
            }
            best = std::min(best, folded_weight(w, c.r()));
        },
        budget);
    return best;
}

/// Distance if defined.
inline std::optional<std::size_t> distance_or_none(const LinearCode& c) {
    if (c.is_zero()) return std::nullopt;
    return min_distance(c);
}

inline LinearCode dual(const LinearCode& c) { return LinearCode::from_span(c.field(), c.n(), c.r(), c.parity()); }

namespace detail {

inline std::vector<std::size_t> check_blocks(std::span<const std::size_t> blocks, std::size_t n) {
    if (blocks.empty()) throw std::invalid_argument("block set must be nonempty");
    std::vector<std::size_t> out(blocks.begin(), blocks.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("block set has repeated indices");
    if (out.back() >= n) throw std::invalid_argument("block index " + std::to_string(out.back() + 1) + " out of range");
    return out;
}

}  // namespace detail

/// Restricted code pi_I(C) on the blocks I (0-based).
inline LinearCode restrict_code(const LinearCode& c, std::span<const std::size_t> blocks) {
    const auto I = detail::check_blocks(blocks, c.n());
    return LinearCode::from_span(c.field(), I.size(), c.r(), block_submatrix(c.canonical(), I, c.r()));
}

/// Shortened code: codewords vanishing outside I, projected onto I.
inline LinearCode shorten_code(const LinearCode& c, std::span<const std::size_t> blocks) {
    const auto I = detail::check_blocks(blocks, c.n());
    std::vector<std::size_t> out;
    for (std::size_t i = 0, j = 0; i < c.n(); ++i) {
        if (j < I.size() && I[j] == i)
            ++j;
        else
            out.push_back(i);
    }
    if (c.is_zero()) return LinearCode::zero(c.field(), I.size(), c.r());
    const Matrix g_out = block_submatrix(c.canonical(), out, c.r());
    const Matrix messages = kernel_basis(g_out.transpose());
    if (messages.rows() == 0) return LinearCode::zero(c.field(), I.size(), c.r());
    const Matrix sub = messages * c.canonical();
    return LinearCode::from_span(c.field(), I.size(), c.r(), block_submatrix(sub, I, c.r()));
}

/// phi(c_1, ..., c_n) = (c_{sigma(1)} A_1, ..., c_{sigma(n)} A_n), 0-based sigma.
struct Isometry {
    std::vector<std::size_t> sigma;
    std::vector<Matrix> blocks;

    void validate(std::size_t n, std::size_t r) const {
        if (sigma.size() != n || blocks.size() != n) throw std::invalid_argument("isometry: expected n entries");
        std::vector<bool> seen(n, false);
        for (auto s : sigma) {
            if (s >= n || seen[s]) throw std::invalid_argument("isometry: sigma is not a permutation");
            seen[s] = true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (blocks[i].rows() != r || blocks[i].cols() != r)
                throw std::invalid_argument("isometry: block " + std::to_string(i + 1) + " is not r x r");
            if (!is_invertible(blocks[i]))
                throw std::invalid_argument("isometry: block " + std::to_string(i + 1) + " is singular");
        }
    }

    static Isometry identity(const FieldPtr& f, std::size_t n, std::size_t r) {
        Isometry iso;
        for (std::size_t i = 0; i < n; ++i) {
            iso.sigma.push_back(i);
            iso.blocks.push_back(Matrix::identity(f, r));
        }
        return iso;
    }
};

/// Image of the rows of m (each a vector in F_q^{rn}) under the isometry.
inline Matrix apply_isometry(const Matrix& m, const Isometry& iso, std::size_t r) {
    const std::size_t n = iso.sigma.size();
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<std::size_t> src{iso.sigma[i]};
        const Matrix blk = block_submatrix(m, src, r) * iso.blocks[i];
        for (std::size_t row = 0; row < m.rows(); ++row)
            for (std::size_t j = 0; j < r; ++j) out(row, i * r + j) = blk(row, j);
    }
    return out;
}

inline LinearCode apply_isometry(const LinearCode& c, const Isometry& iso) {
    iso.validate(c.n(), c.r());
    return LinearCode::from_generator(c.field(), c.n(), c.r(), apply_isometry(c.generator(), iso, c.r()));
}

/// The isometry mapping C^perp onto phi(C)^perp: same sigma, blocks (A_i^{-1})^T.
inline Isometry dual_isometry(const Isometry& iso) {
    Isometry out;
    out.sigma = iso.sigma;
    for (const auto& a : iso.blocks) out.blocks.push_back(inverse(a).transpose());
    return out;
}

template <class Rng>
Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(f->order() - 1));
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (auto& x : m.row(i)) x = Elem{dist(rng)};
    return m;
}

template <class Rng>
Matrix random_invertible(const FieldPtr& f, std::size_t n, Rng& rng) {
    while (true) {
        Matrix m = random_matrix(f, n, n, rng);
        if (is_invertible(m)) return m;
    }
}

/// Uniformly random k-dimensional code: rejection sampling on full-rank generators.
template <class Rng>
LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t r, std::size_t k, Rng& rng) {
    if (k > n * r) throw std::invalid_argument("random code: k exceeds rn");
    if (k == 0) return LinearCode::zero(f, n, r);
    while (true) {
        Matrix g = random_matrix(f, k, n * r, rng);
        if (rank(g) == k) return LinearCode::from_generator(f, n, r, std::move(g));
    }
}

template <class Rng>
Isometry random_isometry(const FieldPtr& f, std::size_t n, std::size_t r, Rng& rng) {
    Isometry iso;
    iso.sigma.resize(n);
    std::iota(iso.sigma.begin(), iso.sigma.end(), 0);
    std::shuffle(iso.sigma.begin(), iso.sigma.end(), rng);
    for (std::size_t i = 0; i < n; ++i) iso.blocks.push_back(random_invertible(f, r, rng));
    return iso;
}

/// F_q-linear code obtained by expanding an F_{q^r}-linear code of length n
/// (generator over the extension field, kappa x n) through the basis b.
inline LinearCode expand_code(const Matrix& ext_generator, const OrderedBasis& b) {
    const auto& ext = b.extension();
    if (!same_field(ext_generator.field(), ext->ext()))
        throw std::invalid_argument("expand: generator is not over the basis' extension field");
    const Field& E = *ext->ext();
    const std::size_t n = ext_generator.cols(), r = b.size();
    if (n == 0) throw std::invalid_argument("expand: empty length");
    Matrix rows(ext->base(), ext_generator.rows() * r, n * r);
    for (std::size_t i = 0; i < ext_generator.rows(); ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Elem> scaled(n);
            for (std::size_t l = 0; l < n; ++l) scaled[l] = E.mul(b.elements()[j], ext_generator(i, l));
            const auto v = expand_vector(scaled, b);
            std::copy(v.begin(), v.end(), rows.row(i * r + j).begin());
        }
    return LinearCode::from_span(ext->base(), n, r, rows);
}

}  // namespace qmds
