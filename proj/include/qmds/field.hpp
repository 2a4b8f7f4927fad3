/**************************************************************************
 * field.hpp
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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmds {

/// Largest field order the library will build tables for.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;

/// An element of some finite field, stored as the index sum_i c_i p^i of its
/// coefficient vector (c_0, ..., c_{e-1}) in the polynomial basis of the
/// modulus. Elements do not know their field; every arithmetic operation goes
/// through the owning Field.
struct Elem {
    std::uint32_t v = 0;

    friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

// Dense polynomials over F_p, low-degree-first, used only while building a
// field (before any Field object exists).
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is small.
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

inline PrimePoly rem_prime(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() > db) {
        const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * b[i] % p) % p);
        trim(a);
    }
    return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible_prime(const PrimePoly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (rem_prime(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_{p^e} = F_p[x]/(modulus).
///
/// Addition and multiplication are table driven (log/antilog tables over a
/// primitive element); the coefficient-vector view is available through
/// coeffs()/from_coeffs().
class Field {
   public:
    /// Builds F_{p^e}. Without an explicit modulus, the lexicographically
    /// smallest monic irreducible of degree e is used, with coefficients
    /// compared starting from the constant term.
    static FieldPtr create(std::uint32_t p, std::uint32_t e = 1,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
        if (e == 0) throw std::invalid_argument("field: extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > kMaxFieldOrder) throw std::invalid_argument("field: order exceeds 2^16");
        }
        std::vector<std::uint32_t> mod;
        if (modulus) {
            mod = *modulus;
            if (mod.size() != e + 1u)
                throw std::invalid_argument("field: modulus must have degree " + std::to_string(e));
            for (auto c : mod)
                if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
            if (mod.back() != 1) throw std::invalid_argument("field: modulus must be monic");
            if (e > 1 && !detail::is_irreducible_prime(mod, p))
                throw std::invalid_argument("field: modulus is reducible");
        } else if (e == 1) {
            mod = {0, 1};
        } else {
            mod = smallest_irreducible(p, e, q);
        }
        return FieldPtr(new Field(p, e, q, std::move(mod)));
    }

    /// Builds the field with q elements (default modulus).
    static FieldPtr of_order(std::uint64_t q) {
        if (q < 2) throw std::invalid_argument("field: order must be at least 2");
        std::uint64_t p = 2;
        while (q % p) ++p;
        std::uint32_t e = 0;
        std::uint64_t t = q;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        if (t != 1) throw std::invalid_argument("field: " + std::to_string(q) + " is not a prime power");
        return create(static_cast<std::uint32_t>(p), e);
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint64_t order() const { return q_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(q_); }
    /// Modulus coefficients, low-degree-first, length e + 1 (x for prime fields).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool is_prime_field() const { return e_ == 1; }

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    /// A fixed primitive element (generator of the multiplicative group).
    Elem primitive() const { return exp_[1]; }

    bool contains(Elem a) const { return a.v < q_; }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t n) const {
        const auto p = static_cast<std::int64_t>(p_);
        return {static_cast<std::uint32_t>(((n % p) + p) % p)};
    }

    Elem from_index(std::uint64_t idx) const {
        if (idx >= q_) throw std::invalid_argument("field: element index out of range");
        return {static_cast<std::uint32_t>(idx)};
    }

    Elem from_coeffs(std::span<const std::uint32_t> c) const {
        if (c.size() != e_) throw std::invalid_argument("field: element needs " + std::to_string(e_) + " coefficients");
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= p_) throw std::invalid_argument("field: coefficient out of range");
            v = v * p_ + c[i];
        }
        return {static_cast<std::uint32_t>(v)};
    }

    std::vector<std::uint32_t> coeffs(Elem a) const {
        std::vector<std::uint32_t> c(e_);
        std::uint32_t v = a.v;
        for (auto& x : c) {
            x = v % p_;
            v /= p_;
        }
        return c;
    }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return {a.v ^ b.v};
        if (e_ == 1) {
            const std::uint32_t s = a.v + b.v;
            return {s >= p_ ? s - p_ : s};
        }
        if (!add_table_.empty()) return {add_table_[a.v * q_ + b.v]};
        return digitwise(a, b, false);
    }

    Elem neg(Elem a) const { return {neg_[a.v]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a.v == 0 || b.v == 0) return {0};
        return exp_[log_[a.v] + log_[b.v]];
    }

    Elem inv(Elem a) const {
        if (a.v == 0) throw std::domain_error("field: inverse of zero");
        return exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t n) const {
        if (n == 0) return one();
        if (a.v == 0) return zero();
        return exp_[(static_cast<std::uint64_t>(log_[a.v]) * (n % (q_ - 1))) % (q_ - 1)];
    }

    /// All elements in canonical (index) order.
    std::vector<Elem> elements() const {
        std::vector<Elem> out(q_);
        for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
        return out;
    }

    std::string name() const {
        return e_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(q_);
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

   private:
    Field(std::uint32_t p, std::uint32_t e, std::uint64_t q, std::vector<std::uint32_t> mod)
        : p_(p), e_(e), q_(q), modulus_(std::move(mod)) {
        build_tables();
    }

    static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e, std::uint64_t q) {
        // Enumerate (c_0, ..., c_{e-1}) with c_0 most significant.
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            std::vector<std::uint32_t> f(e + 1, 0);
            f[e] = 1;
            std::uint64_t t = idx;
            for (std::uint32_t j = e; j-- > 0;) {
                f[j] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (detail::is_irreducible_prime(f, p)) return f;
        }
        throw std::logic_error("field: no irreducible polynomial found");
    }

    Elem digitwise(Elem a, Elem b, bool negate_b) const {
        std::uint32_t x = a.v, y = b.v, out = 0, place = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            const std::uint32_t dy = negate_b ? (p_ - y % p_) % p_ : y % p_;
            out += ((x % p_ + dy) % p_) * place;
            x /= p_;
            y /= p_;
            place *= p_;
        }
        return {out};
    }

    // Polynomial product modulo the modulus; only used to build tables.
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        const auto ca = coeffs({a}), cb = coeffs({b});
        detail::PrimePoly prod(2 * e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
        auto r = e_ == 1 ? detail::PrimePoly{static_cast<std::uint32_t>(prod[0] % p_)}
                         : detail::rem_prime(prod, modulus_, p_);
        r.resize(e_, 0);
        return from_coeffs(r).v;
    }

    void build_tables() {
        neg_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) neg_[a] = digitwise({0}, {a}, true).v;
        if (p_ != 2 && e_ > 1 && q_ <= 1024) {
            add_table_.resize(q_ * q_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = digitwise({a}, {b}, false).v;
        }
        // Primitive element: smallest g whose powers hit every nonzero element.
        exp_.assign(2 * q_, Elem{0});
        log_.assign(q_, 0);
        if (q_ == 2) {
            exp_[0] = exp_[1] = exp_[2] = Elem{1};
            return;
        }
        for (std::uint32_t g = 2; g < q_; ++g) {
            std::vector<bool> seen(q_, false);
            std::uint32_t x = 1, ord = 0;
            do {
                seen[x] = true;
                x = slow_mul(x, g);
                ++ord;
            } while (x != 1 && !seen[x]);
            if (x == 1 && ord == q_ - 1) {
                x = 1;
                for (std::uint32_t i = 0; i < q_ - 1; ++i) {
                    exp_[i] = exp_[i + q_ - 1] = Elem{x};
                    log_[x] = i;
                    x = slow_mul(x, g);
                }
                return;
            }
        }
        throw std::logic_error("field: no primitive element found");
    }

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> add_table_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace qmds
