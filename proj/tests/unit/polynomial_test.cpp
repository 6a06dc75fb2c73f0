// Copyright 2026 The goppa-orbits Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "goppa/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "goppa/errors.hpp"

namespace goppa::gf2 {
namespace {

TEST(Polynomial, TrimsAndEvaluates) {
  const TowerContext ctx = TowerContext::make(5);
  const Element one = TowerContext::one();
  const Polynomial p({one, Element{}, one, Element{}, Element{}});  // 1 + x^2
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_monic());
  EXPECT_TRUE(Polynomial({Element{}}).is_zero());
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const Element x = ctx.random(rng);
    ASSERT_EQ(p.evaluate(ctx, x), ctx.square(x) + one);
  }
}

TEST(Polynomial, ArithmeticIdentities) {
  const TowerContext ctx = TowerContext::make(3);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Polynomial a({ctx.random(rng), ctx.random(rng), ctx.random(rng)});
    const Polynomial b({ctx.random(rng), ctx.random(rng)});
    const Element x = ctx.random(rng);
    ASSERT_EQ(multiply(ctx, a, b).evaluate(ctx, x), ctx.mul(a.evaluate(ctx, x), b.evaluate(ctx, x)));
    ASSERT_EQ((a + b).evaluate(ctx, x), a.evaluate(ctx, x) + b.evaluate(ctx, x));
    ASSERT_EQ(power(ctx, b, 3), multiply(ctx, b, multiply(ctx, b, b)));
    // Frobenius on coefficients: (sigma^i a)(sigma^i x) = sigma^i(a(x)).
    ASSERT_EQ(frobenius(ctx, a, 4).evaluate(ctx, ctx.frobenius(x, 4)), ctx.frobenius(a.evaluate(ctx, x), 4));
    ASSERT_TRUE(make_monic(ctx, a).is_monic());
  }
}

class MinimalPolynomialTest : public ::testing::TestWithParam<unsigned> {};

TEST_P(MinimalPolynomialTest, SexticElementsHaveDegreeSixMinimalPolynomials) {
  const TowerContext ctx = TowerContext::make(GetParam());
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 20; ++t) {
    const Element alpha = ctx.random_sextic(rng);
    const Polynomial g = minimal_polynomial(ctx, alpha);
    ASSERT_EQ(g.degree(), 6);
    ASSERT_TRUE(g.is_monic());
    ASSERT_TRUE(has_coeffs_in(ctx, g, ctx.base_level()));
    for (unsigned k = 0; k < 6; ++k) ASSERT_TRUE(g.evaluate(ctx, ctx.frobenius(alpha, k * ctx.n())).is_zero());
    // Irreducible of degree 6 > 1: no roots in F_{2^n}.
    for (Element a : ctx.base_elements()) ASSERT_FALSE(g.evaluate(ctx, a).is_zero());
    // Absolute minimal polynomial has degree 6n and binary coefficients.
    const Polynomial h = minimal_polynomial(ctx, alpha, FieldLevel{1});
    ASSERT_EQ(h.degree(), static_cast<int>(6 * ctx.n()));
    ASSERT_TRUE(has_coeffs_in(ctx, h, FieldLevel{1}));
  }
}

INSTANTIATE_TEST_SUITE_P(Towers, MinimalPolynomialTest, ::testing::Values(2u, 3u, 5u, 7u));

TEST(Polynomial, MinimalPolynomialOfSubfieldElements) {
  const TowerContext ctx = TowerContext::make(5);
  const Element a = ctx.base_generator();
  EXPECT_EQ(minimal_polynomial(ctx, a).degree(), 1);
  EXPECT_EQ(minimal_polynomial(ctx, a, FieldLevel{1}).degree(), 5);
}

}  // namespace
}  // namespace goppa::gf2
