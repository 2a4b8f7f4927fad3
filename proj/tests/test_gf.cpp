/**************************************************************************
 * test_gf.cpp
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

#include <algorithm>
#include <set>

#include "support.hpp"

namespace qmds {
namespace {

using testing::slow_mul;

const std::vector<std::uint64_t> kSmallOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

TEST(Field, CreatesPrimeField) {
    auto f = Field::create(2);
    EXPECT_EQ(f->order(), 2u);
    EXPECT_TRUE(f->is_prime_field());
}

TEST(Field, AcceptsIrreducibleModulus) {
    auto f = Field::create(2, 2, std::vector<std::uint32_t>{1, 1, 1});
    EXPECT_EQ(f->order(), 4u);
}

TEST(Field, RejectsBadInputs) {
    EXPECT_THROW(Field::create(4), std::invalid_argument);
    EXPECT_THROW(Field::create(2, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);  // (x+1)^2
    EXPECT_THROW(Field::create(2, 2, std::vector<std::uint32_t>{1, 1}), std::invalid_argument);
    EXPECT_THROW(Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 2}), std::invalid_argument);  // not monic
    EXPECT_THROW(Field::create(2, 0), std::invalid_argument);
    EXPECT_THROW(Field::of_order(6), std::invalid_argument);
}

// Oracle: every monic degree-e polynomial without a factor of degree <= e/2,
// found by evaluating products of all lower-degree monic polynomials.
std::vector<std::uint32_t> smallest_irreducible_oracle(std::uint32_t p, std::uint32_t e) {
    std::set<std::vector<std::uint32_t>> reducible;
    auto monic = [&](std::uint32_t d) {
        std::vector<std::vector<std::uint32_t>> out;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> c(d + 1, 0);
            std::uint64_t t = idx;
            for (std::uint32_t i = 0; i < d; ++i, t /= p) c[i] = t % p;
            c[d] = 1;
            out.push_back(c);
        }
        return out;
    };
    for (std::uint32_t d = 1; d < e; ++d)
        for (const auto& a : monic(d))
            for (const auto& b : monic(e - d)) {
                std::vector<std::uint32_t> prod(e + 1, 0);
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
                reducible.insert(prod);
            }
    auto all = monic(e);
    std::sort(all.begin(), all.end());  // lexicographic from c_0
    for (const auto& c : all)
        if (!reducible.count(c)) return c;
    return {};
}

TEST(Field, DefaultModulusIsLexicographicallySmallest) {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}}) {
        SCOPED_TRACE(std::to_string(p) + "^" + std::to_string(e));
        EXPECT_EQ(Field::create(p, e)->modulus(), smallest_irreducible_oracle(p, e));
    }
}

TEST(Field, RingAxiomsExhaustive) {
    for (auto q : kSmallOrders) {
        SCOPED_TRACE(q);
        auto fp = Field::of_order(q);
        const Field& f = *fp;
        const auto el = f.elements();
        ASSERT_EQ(el.size(), q);
        for (auto a : el) {
            EXPECT_EQ(f.add(a, f.zero()), a);
            EXPECT_EQ(f.mul(a, f.one()), a);
            EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
            if (a.v) {
                EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
            }
            for (auto b : el) {
                EXPECT_EQ(f.add(a, b), f.add(b, a));
                EXPECT_EQ(f.mul(a, b), f.mul(b, a));
                EXPECT_EQ(f.mul(a, b), slow_mul(f, a, b));
            }
        }
        // Associativity and distributivity on a sample of triples.
        auto rng = testing::rng_for(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
        for (int t = 0; t < 2000; ++t) {
            Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
        EXPECT_THROW(f.inv(f.zero()), std::domain_error);
    }
}

TEST(Field, PrimitiveElementGeneratesGroup) {
    for (auto q : kSmallOrders) {
        auto f = Field::of_order(q);
        std::set<std::uint32_t> seen;
        Elem x = f->one();
        for (std::uint64_t i = 0; i + 1 < q; ++i, x = f->mul(x, f->primitive())) seen.insert(x.v);
        EXPECT_EQ(seen.size(), q - 1) << q;
    }
}

class F4 : public ::testing::Test {
   protected:
    FieldPtr f2 = Field::create(2);
    FieldPtr f4 = Field::create(2, 2);
    ExtensionPtr ext = make_extension(f2, f4);
    Elem alpha{2};  // x, with x^2 = x + 1
};

TEST_F(F4, Trace) {
    EXPECT_EQ(f4->mul(alpha, alpha), f4->add(alpha, f4->one()));
    EXPECT_EQ(ext->trace(f4->zero()), f2->zero());
    EXPECT_EQ(ext->trace(alpha), f2->one());
    auto trivial = make_extension(f2, f2);
    EXPECT_EQ(trivial->trace(f2->one()), f2->one());
}

TEST_F(F4, DualBasis) {
    OrderedBasis b(ext, {f4->one(), alpha});
    const OrderedBasis d = dual_basis(b);
    EXPECT_EQ(d.elements(), (std::vector<Elem>{f4->mul(alpha, alpha), f4->one()}));
    auto trivial = make_extension(f2, f2);
    EXPECT_EQ(dual_basis(OrderedBasis(trivial, {f2->one()})).elements(), std::vector<Elem>{f2->one()});
    EXPECT_THROW(OrderedBasis(ext, {f4->one(), f4->one()}), std::invalid_argument);
}

TEST_F(F4, Expansion) {
    OrderedBasis b(ext, {f4->one(), alpha});
    std::vector<Elem> one_alpha{alpha};
    EXPECT_EQ(expand_vector(one_alpha, b), (std::vector<Elem>{Elem{0}, Elem{1}}));
    std::vector<Elem> v{f4->one(), f4->add(alpha, f4->one())};
    EXPECT_EQ(expand_vector(v, b), (std::vector<Elem>{Elem{1}, Elem{0}, Elem{1}, Elem{1}}));
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t y = 0; y < 4; ++y) {
            std::vector<Elem> w{Elem{x}, Elem{y}};
            EXPECT_EQ(unexpand_vector(expand_vector(w, b), b), w);
        }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> extension_pairs() {
    return {{2, 4}, {2, 8}, {2, 16}, {3, 9}, {4, 16}, {3, 27}, {5, 25}, {2, 32}, {4, 64}, {8, 64}};
}

TEST(Extension, TraceLinearAndSurjective) {
    for (auto [b, e] : extension_pairs()) {
        SCOPED_TRACE(std::to_string(b) + "->" + std::to_string(e));
        auto ext = make_extension(Field::of_order(b), Field::of_order(e));
        const Field& E = *ext->ext();
        const Field& B = *ext->base();
        std::set<std::uint32_t> image;
        for (auto x : E.elements()) {
            image.insert(ext->trace(x).v);
            for (auto c : B.elements())
                EXPECT_EQ(ext->trace(E.mul(ext->embed(c), x)), B.mul(c, ext->trace(x)));
        }
        EXPECT_EQ(image.size(), B.order());
        auto rng = testing::rng_for(e);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(e - 1));
        for (int t = 0; t < 200; ++t) {
            Elem x{pick(rng)}, y{pick(rng)};
            EXPECT_EQ(ext->trace(E.add(x, y)), B.add(ext->trace(x), ext->trace(y)));
        }
    }
}

TEST(Extension, EmbeddingIsSubfield) {
    for (auto [b, e] : extension_pairs()) {
        auto ext = make_extension(Field::of_order(b), Field::of_order(e));
        const Field& B = *ext->base();
        const Field& E = *ext->ext();
        for (auto x : B.elements())
            for (auto y : B.elements()) {
                EXPECT_EQ(ext->embed(B.add(x, y)), E.add(ext->embed(x), ext->embed(y)));
                EXPECT_EQ(ext->embed(B.mul(x, y)), E.mul(ext->embed(x), ext->embed(y)));
            }
    }
}

// Random bases: dual is an involution, satisfies the trace-delta condition,
// and expansion turns Hamming weight into folded weight.
TEST(Extension, DualBasisPropertiesRandom) {
    for (auto [b, e] : extension_pairs()) {
        SCOPED_TRACE(std::to_string(b) + "->" + std::to_string(e));
        auto ext = make_extension(Field::of_order(b), Field::of_order(e));
        const Field& E = *ext->ext();
        const auto r = ext->degree();
        auto rng = testing::rng_for(100 + e);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(e - 1));
        for (int trial = 0; trial < 10; ++trial) {
            std::optional<OrderedBasis> basis;
            while (!basis) {
                std::vector<Elem> cand(r);
                for (auto& x : cand) x = Elem{pick(rng)};
                try {
                    basis.emplace(ext, cand);
                } catch (const std::invalid_argument&) {
                }
            }
            const OrderedBasis d = dual_basis(*basis);
            for (std::uint32_t i = 0; i < r; ++i)
                for (std::uint32_t j = 0; j < r; ++j)
                    EXPECT_EQ(ext->trace(E.mul(basis->elements()[i], d.elements()[j])),
                              i == j ? ext->base()->one() : ext->base()->zero());
            EXPECT_EQ(dual_basis(d), *basis);
            for (int t = 0; t < 20; ++t) {
                std::vector<Elem> v(4);
                std::size_t hamming = 0;
                for (auto& x : v) {
                    x = Elem{pick(rng) % 2 ? pick(rng) : 0};
                    hamming += x.v != 0;
                }
                EXPECT_EQ(folded_weight(expand_vector(v, *basis), r), hamming);
            }
        }
    }
}

TEST(Extension, ExpansionIsometryExhaustiveF4) {
    auto ext = make_extension(Field::create(2), Field::create(2, 2));
    for (std::uint32_t a = 1; a < 4; ++a)
        for (std::uint32_t c = 0; c < 4; ++c) {
            std::vector<Elem> elems{Elem{a}, Elem{c}};
            std::optional<OrderedBasis> b;
            try {
                b.emplace(ext, elems);
            } catch (const std::invalid_argument&) {
                continue;
            }
            for (std::uint32_t x = 0; x < 16; ++x) {
                std::vector<Elem> v{Elem{x % 4}, Elem{x / 4}};
                EXPECT_EQ(folded_weight(expand_vector(v, *b), 2), std::size_t(v[0].v != 0) + (v[1].v != 0));
            }
        }
}

TEST(Extension, RejectsNonExtension) {
    EXPECT_THROW(make_extension(Field::of_order(4), Field::of_order(8)), std::invalid_argument);
    EXPECT_THROW(make_extension(Field::of_order(3), Field::of_order(8)), std::invalid_argument);
}

TEST(Poly, ArithmeticAndGcd) {
    auto f = Field::of_order(5);
    Poly a(f, {Elem{0}, Elem{4}, Elem{1}});  // x^2 - x = x(x-1)
    Poly b = Poly::linear(f, Elem{1});
    auto [qt, rm] = divmod(a, b);
    EXPECT_TRUE(rm.is_zero());
    EXPECT_EQ(qt * b, a);
    EXPECT_EQ(gcd(a, Poly(f, {Elem{0}, Elem{1}})).degree(), 1);
    EXPECT_TRUE(coprime(a, Poly::linear(f, Elem{2})));
    EXPECT_TRUE(is_irreducible(Poly(f, {Elem{2}, Elem{0}, Elem{1}})));  // x^2 + 2: 3 is a non-residue
    EXPECT_FALSE(is_irreducible(a));
}

}  // namespace
}  // namespace qmds
