/**************************************************************************
 * extension.hpp
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

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmds/field.hpp"
#include "qmds/matrix.hpp"

namespace qmds {

/// F_{q^r} viewed as a degree-r extension of F_q.
///
/// When the base is not a prime field, F_q is identified with the subfield
/// of the extension generated by the smallest root of the base modulus.
class FieldExtension {
   public:
    FieldExtension(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
        if (base_->characteristic() != ext_->characteristic() || ext_->degree() % base_->degree() != 0)
            throw std::invalid_argument("extension: " + ext_->name() + " is not an extension of " + base_->name());
        degree_ = ext_->degree() / base_->degree();
        const Field& E = *ext_;
        Elem root = E.one();
        if (!base_->is_prime_field()) {
            const auto& mod = base_->modulus();
            bool found = false;
            for (auto x : E.elements()) {
                Elem acc = E.zero();
                for (std::size_t i = mod.size(); i-- > 0;) acc = E.add(E.mul(acc, x), E.from_int(mod[i]));
                if (acc.v == 0) {
                    root = x;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("extension: base modulus has no root in extension");
        }
        embed_.resize(base_->order());
        unembed_.assign(E.order(), kNone);
        for (auto c : base_->elements()) {
            const auto cc = base_->coeffs(c);
            Elem acc = E.zero();
            for (std::size_t i = cc.size(); i-- > 0;) acc = E.add(E.mul(acc, root), E.from_int(cc[i]));
            embed_[c.v] = acc;
            unembed_[acc.v] = c.v;
        }
    }

    const FieldPtr& base() const { return base_; }
    const FieldPtr& ext() const { return ext_; }
    std::uint32_t degree() const { return degree_; }

    Elem embed(Elem c) const { return embed_.at(c.v); }

    bool in_base(Elem a) const { return unembed_.at(a.v) != kNone; }

    Elem to_base(Elem a) const {
        const auto v = unembed_.at(a.v);
        if (v == kNone) throw std::domain_error("extension: element does not lie in the base field");
        return {v};
    }

    /// Tr(a) = a + a^q + ... + a^{q^{r-1}}, returned as a base-field element.
    Elem trace(Elem a) const {
        const Field& E = *ext_;
        Elem acc = E.zero(), x = a;
        for (std::uint32_t i = 0; i < degree_; ++i) {
            acc = E.add(acc, x);
            x = E.pow(x, base_->order());
        }
        return to_base(acc);
    }

   private:
    static constexpr std::uint32_t kNone = 0xffffffffu;
    FieldPtr base_;
    FieldPtr ext_;
    std::uint32_t degree_ = 1;
    std::vector<Elem> embed_;
    std::vector<std::uint32_t> unembed_;
};

using ExtensionPtr = std::shared_ptr<const FieldExtension>;

inline ExtensionPtr make_extension(FieldPtr base, FieldPtr ext) {
    return std::make_shared<const FieldExtension>(std::move(base), std::move(ext));
}

/// An ordered basis (b_1, ..., b_r) of F_{q^r} over F_q, with a coordinate
/// table for the expansion map.
class OrderedBasis {
   public:
    OrderedBasis(ExtensionPtr ext, std::vector<Elem> elems) : ext_(std::move(ext)), elems_(std::move(elems)) {
        const std::uint32_t r = ext_->degree();
        if (elems_.size() != r) throw std::invalid_argument("basis: expected " + std::to_string(r) + " elements");
        const Field& E = *ext_->ext();
        const Field& B = *ext_->base();
        for (auto x : elems_)
            if (!E.contains(x)) throw std::invalid_argument("basis: element outside extension field");
        // Enumerate every combination sum c_j b_j; independence <=> all distinct.
        coords_.assign(E.order() * r, Elem{0});
        std::vector<bool> hit(E.order(), false);
        std::vector<Elem> c(r, B.zero());
        const std::uint64_t total = E.order();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t t = idx;
            Elem acc = E.zero();
            for (std::uint32_t j = 0; j < r; ++j) {
                c[j] = {static_cast<std::uint32_t>(t % B.order())};
                t /= B.order();
                acc = E.add(acc, E.mul(ext_->embed(c[j]), elems_[j]));
            }
            if (hit[acc.v]) throw std::invalid_argument("basis: elements are linearly dependent");
            hit[acc.v] = true;
            std::copy(c.begin(), c.end(), coords_.begin() + acc.v * r);
        }
    }

    const ExtensionPtr& extension() const { return ext_; }
    const std::vector<Elem>& elements() const { return elems_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }

    /// Coordinates of a in this basis.
    std::span<const Elem> coordinates(Elem a) const {
        return {coords_.data() + a.v * elems_.size(), elems_.size()};
    }

    Elem combine(std::span<const Elem> c) const {
        const Field& E = *ext_->ext();
        Elem acc = E.zero();
        for (std::size_t j = 0; j < elems_.size(); ++j) acc = E.add(acc, E.mul(ext_->embed(c[j]), elems_[j]));
        return acc;
    }

    friend bool operator==(const OrderedBasis& a, const OrderedBasis& b) { return a.elems_ == b.elems_; }

   private:
    ExtensionPtr ext_;
    std::vector<Elem> elems_;
    std::vector<Elem> coords_;
};

/// Greedy basis: the first elements in canonical order that extend an
/// independent set. Over a prime base this is the power basis 1, x, ..., x^{r-1}.
inline OrderedBasis canonical_basis(const ExtensionPtr& ext) {
    const Field& E = *ext->ext();
    const Field& B = *ext->base();
    std::vector<Elem> chosen;
    std::vector<bool> span(E.order(), false);
    span[0] = true;
    std::vector<Elem> members{E.zero()};
    for (auto x : E.elements()) {
        if (chosen.size() == ext->degree()) break;
        if (span[x.v]) continue;
        chosen.push_back(x);
        std::vector<Elem> grown;
        for (auto m : members)
            for (auto c : B.elements()) {
                const Elem y = E.add(m, E.mul(ext->embed(c), x));
                if (!span[y.v]) {
                    span[y.v] = true;
                    grown.push_back(y);
                }
            }
        members.insert(members.end(), grown.begin(), grown.end());
    }
    return OrderedBasis(ext, std::move(chosen));
}

/// The trace-dual basis a with Tr(b_i a_j) = delta_ij.
inline OrderedBasis dual_basis(const OrderedBasis& b) {
    const auto& ext = b.extension();
    const Field& E = *ext->ext();
    const std::uint32_t r = b.size();
    Matrix gram(ext->base(), r, r);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < r; ++j) gram(i, j) = ext->trace(E.mul(b.elements()[i], b.elements()[j]));
    const Matrix ginv = inverse(gram);
    std::vector<Elem> out(r, E.zero());
    for (std::uint32_t j = 0; j < r; ++j)
        for (std::uint32_t k = 0; k < r; ++k)
            out[j] = E.add(out[j], E.mul(ext->embed(ginv(k, j)), b.elements()[k]));
    return OrderedBasis(ext, std::move(out));
}

/// Componentwise expansion F_{q^r}^n -> F_q^{rn}.
inline std::vector<Elem> expand_vector(std::span<const Elem> v, const OrderedBasis& b) {
    std::vector<Elem> out;
    out.reserve(v.size() * b.size());
    for (auto x : v) {
        const auto c = b.coordinates(x);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

inline std::vector<Elem> unexpand_vector(std::span<const Elem> v, const OrderedBasis& b) {
    const std::size_t r = b.size();
    if (v.size() % r != 0) throw std::invalid_argument("expansion: length not divisible by basis size");
    std::vector<Elem> out(v.size() / r);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.combine(v.subspan(i * r, r));
    return out;
}

}  // namespace qmds
