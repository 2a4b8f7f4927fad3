/**************************************************************************
 * poly.hpp
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
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmds/field.hpp"

namespace qmds {

/// Univariate polynomial over a Field, coefficients low-degree-first with no
/// trailing zeros (the zero polynomial is empty).
class Poly {
   public:
    Poly() = default;
    Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly monomial(FieldPtr field, std::size_t deg) {
        std::vector<Elem> c(deg + 1, field->zero());
        c[deg] = field->one();
        return Poly(std::move(field), std::move(c));
    }

    /// x - a
    static Poly linear(FieldPtr field, Elem a) {
        auto f = field;
        return Poly(std::move(field), {f->neg(a), f->one()});
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Elem lead() const { return c_.empty() ? Elem{0} : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }

    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const Field& f = *a.field_;
        std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), f.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
        return Poly(a.field_, std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        const Field& f = *a.field_;
        std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), f.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
        return Poly(a.field_, std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.field_, {});
        const Field& f = *a.field_;
        std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
        return Poly(a.field_, std::move(out));
    }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
        const Field& f = *a.field_;
        std::vector<Elem> r = a.c_;
        const std::size_t db = b.c_.size() - 1;
        std::vector<Elem> q(r.size() > db ? r.size() - db : 0, f.zero());
        const Elem lead_inv = f.inv(b.lead());
        while (r.size() > db && !r.empty()) {
            const Elem s = f.mul(r.back(), lead_inv);
            const std::size_t shift = r.size() - 1 - db;
            q[shift] = s;
            for (std::size_t i = 0; i <= db; ++i) r[shift + i] = f.sub(r[shift + i], f.mul(s, b.c_[i]));
            while (!r.empty() && r.back().v == 0) r.pop_back();
        }
        return {Poly(a.field_, std::move(q)), Poly(a.field_, std::move(r))};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly monic() const {
        if (is_zero()) return *this;
        const Elem s = field_->inv(lead());
        std::vector<Elem> out(c_);
        for (auto& x : out) x = field_->mul(x, s);
        return Poly(field_, std::move(out));
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<Elem> c_;
};

/// Monic gcd.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline bool coprime(const Poly& a, const Poly& b) { return gcd(a, b).degree() == 0; }

/// Irreducibility by trial division with every monic polynomial of degree
/// 1..deg/2.
inline bool is_irreducible(const Poly& f) {
    const long deg = f.degree();
    if (deg < 1) return false;
    const auto& F = f.field();
    for (long d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (long i = 0; i < d; ++i) count *= F->order();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<Elem> g(d + 1);
            std::uint64_t t = idx;
            for (long i = 0; i < d; ++i) {
                g[i] = {static_cast<std::uint32_t>(t % F->order())};
                t /= F->order();
            }
            g[d] = F->one();
            if ((f % Poly(F, std::move(g))).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace qmds
