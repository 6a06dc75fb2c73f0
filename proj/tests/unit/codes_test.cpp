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

#include "goppa/codes.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "goppa/errors.hpp"
#include "oracles.hpp"

namespace goppa::codes {
namespace {

using goppa::testing::SlowField;

TEST(Codes, AlternantParityIsScaledVandermonde) {
  const TowerContext ctx = TowerContext::make(5);
  std::mt19937_64 rng(1);
  const auto support = ctx.base_elements_sorted();
  std::vector<Element> v;
  for (std::size_t j = 0; j < support.size(); ++j) v.push_back(ctx.random_sextic(rng));
  const FieldMatrix h = alternant_parity(ctx, v, support, 6);
  ASSERT_EQ(h.rows(), 6u);
  for (std::size_t j = 0; j < support.size(); ++j) {
    EXPECT_EQ(h.at(0, j), v[j]);
    for (unsigned i = 1; i < 6; ++i) EXPECT_EQ(h.at(i, j), ctx.mul(h.at(i - 1, j), support[j]));
  }
  std::vector<Element> bad = v;
  bad[3] = Element{};
  EXPECT_THROW(alternant_parity(ctx, bad, support, 6), DomainError);
  std::vector<Element> dup(support.begin(), support.end());
  dup[1] = dup[0];
  EXPECT_THROW(alternant_parity(ctx, v, dup, 6), DomainError);
  EXPECT_THROW(alternant_parity(ctx, v, support, 0), DomainError);
}

TEST(Codes, ExtendedParityHasSingleEntryInfinityColumn) {
  const TowerContext ctx = TowerContext::make(5);
  std::mt19937_64 rng(2);
  const GoppaInstance inst = make_goppa_instance(ctx, ctx.random_sextic(rng));
  const std::vector<Element> v = goppa_weights(ctx, inst.g, inst.extended_support);
  EXPECT_EQ(v.back(), TowerContext::one());  // monic g
  const FieldMatrix h = extended_alternant_parity(ctx, v, inst.extended_support, 7);
  const std::size_t last = h.cols() - 1;
  for (unsigned i = 0; i + 1 < 7; ++i) EXPECT_TRUE(h.at(i, last).is_zero());
  EXPECT_EQ(h.at(6, last), v.back());
  // Dropping the infinity column leaves the alternant rows on L.
  const FieldMatrix finite = alternant_parity(ctx, std::span(v).first(last), inst.support, 7);
  for (unsigned i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < last; ++j) ASSERT_EQ(h.at(i, j), finite.at(i, j));
  std::vector<ProjectivePoint> rotated = inst.extended_support;
  std::rotate(rotated.begin(), rotated.end() - 1, rotated.end());
  EXPECT_THROW(extended_alternant_parity(ctx, v, rotated, 7), DomainError);
}

class GoppaCodeTest : public ::testing::TestWithParam<unsigned> {
 protected:
  TowerContext ctx = TowerContext::make(GetParam());
  std::mt19937_64 rng{GetParam() * 17};
};

TEST_P(GoppaCodeTest, CauchyRowAndSextupleVandermondeDefineTheSameCode) {
  for (int t = 0; t < 5; ++t) {
    const GoppaInstance inst = make_goppa_instance(ctx, ctx.random_sextic(rng));
    const BinaryCode from_row = subfield_subcode(ctx, goppa_parity(ctx, inst.alpha, inst.support));
    const std::vector<Element> v = goppa_weights(ctx, inst.g, inst.support);
    const BinaryCode from_alternant = subfield_subcode(ctx, alternant_parity(ctx, v, inst.support, 6));
    ASSERT_EQ(from_row, from_alternant);
    const std::size_t m = inst.support.size();
    ASSERT_GE(from_row.dimension() + 6 * ctx.n(), m);
    ASSERT_EQ(from_row.dimension() + from_row.parity().rows(), m);
  }
}

TEST_P(GoppaCodeTest, ExtensionEqualsAlternantCodeOnProjectiveLine) {
  for (int t = 0; t < 5; ++t) {
    const GoppaInstance inst = make_goppa_instance(ctx, ctx.random_sextic(rng));
    const BinaryCode base = goppa_code(ctx, inst.alpha);
    const BinaryCode extended = extend_code(base);
    ASSERT_EQ(extended, extended_goppa_code(ctx, inst.alpha));
    ASSERT_EQ(extended.length(), inst.support.size() + 1);
    ASSERT_EQ(extended.dimension(), base.dimension());
    const std::vector<Element> v = goppa_weights(ctx, inst.g, inst.extended_support);
    ASSERT_EQ(extended, subfield_subcode(ctx, extended_alternant_parity(ctx, v, inst.extended_support, 7)));
    for (const BitVector& w : extended.generator().row_vectors()) ASSERT_EQ(w.popcount() % 2, 0u);
  }
}

TEST_P(GoppaCodeTest, ExpurgationAddsOneVandermondeRow) {
  for (int t = 0; t < 5; ++t) {
    const GoppaInstance inst = make_goppa_instance(ctx, ctx.random_sextic(rng));
    const BinaryCode base = goppa_code(ctx, inst.alpha);
    const BinaryCode even = expurgate_code(base);
    const std::vector<Element> v = goppa_weights(ctx, inst.g, inst.support);
    ASSERT_EQ(even, subfield_subcode(ctx, alternant_parity(ctx, v, inst.support, 7)));
    ASSERT_LE(base.dimension() - even.dimension(), 1u);
    for (const BitVector& w : even.generator().row_vectors()) ASSERT_EQ(w.popcount() % 2, 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(Towers, GoppaCodeTest, ::testing::Values(2u, 3u, 5u));

// Every binary word of length 4 tested directly against the defining sum.
TEST(Codes, SmallGoppaCodeMatchesExhaustiveSearch) {
  const TowerContext ctx = TowerContext::make(2);
  const SlowField slow{ctx.modulus_big(), ctx.degree()};
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Element alpha = ctx.random_sextic(rng);
    const BinaryCode code = goppa_code(ctx, alpha);
    const auto support = ctx.base_elements_sorted();
    std::uint64_t words = 0;
    for (std::uint64_t x = 0; x < 16; ++x) {
      std::uint64_t sum = 0;
      BitVector w(4);
      for (unsigned i = 0; i < 4; ++i)
        if ((x >> i) & 1) {
          sum ^= slow.inv(alpha.bits() ^ support[i].bits());
          w.set(i);
        }
      ASSERT_EQ(code.contains(w), sum == 0);
      words += sum == 0;
    }
    ASSERT_EQ(words, std::uint64_t{1} << code.dimension());
  }
}

TEST(Codes, SubfieldSubcodeOfZeroMatrixIsEverything) {
  const TowerContext ctx = TowerContext::make(2);
  const BinaryCode all = subfield_subcode(ctx, FieldMatrix(3, 9));
  EXPECT_EQ(all.dimension(), 9u);
  EXPECT_EQ(all.parity().rows(), 0u);
}

TEST(Codes, WeightEnumerator) {
  const BinaryCode zero = BinaryCode::from_generator(BitMatrix(6));
  EXPECT_EQ(weight_enumerator(zero), (std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0, 0}));
  BitMatrix rep(3);
  BitVector ones(3);
  for (int i = 0; i < 3; ++i) ones.set(i);
  rep.add_row(ones);
  EXPECT_EQ(weight_enumerator(BinaryCode::from_generator(rep)), (std::vector<std::uint64_t>{1, 0, 0, 1}));
  const BinaryCode everything = BinaryCode::from_parity_check(BitMatrix(25));
  EXPECT_THROW(weight_enumerator(everything), InfeasibleError);

  const TowerContext ctx = TowerContext::make(5);
  std::mt19937_64 rng(6);
  const BinaryCode ext = extended_goppa_code(ctx, ctx.random_sextic(rng));
  const auto counts = weight_enumerator(ext);
  EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}), std::uint64_t{1} << ext.dimension());
  for (std::size_t w = 1; w < counts.size(); w += 2) EXPECT_EQ(counts[w], 0u);
}

TEST(Codes, TransformPolynomialIdentityAndRoots) {
  const TowerContext ctx = TowerContext::make(5);
  std::mt19937_64 rng(7);
  const Element alpha = ctx.random_sextic(rng);
  const Polynomial g = gf2::minimal_polynomial(ctx, alpha);
  EXPECT_EQ(transform_polynomial(ctx, g, SemiLinearMap::identity()), g);
  for (int t = 0; t < 50; ++t) {
    const SemiLinearMap map = mobius::random_map(ctx, rng);
    const Polynomial h = transform_polynomial(ctx, g, map);
    ASSERT_EQ(h.degree(), 6);
    ASSERT_TRUE(gf2::has_coeffs_in(ctx, h, ctx.base_level()));
    ASSERT_TRUE(h.evaluate(ctx, mobius::apply(ctx, map, alpha)).is_zero());
    // Pointwise: (tau g)'(x) = (c x + a)^6 (tau g)(M^{-1} x).
    const Polynomial tg = gf2::frobenius(ctx, g, map.frob());
    const SemiLinearMap m_inv = SemiLinearMap::make(ctx, map.d(), map.b(), map.c(), map.a());
    const Element x = ctx.random_sextic(rng);
    const Element lhs = h.evaluate(ctx, x);
    const Element rhs =
        ctx.mul(ctx.pow(ctx.mul(map.c(), x) + map.a(), 6), tg.evaluate(ctx, mobius::apply(ctx, m_inv, x)));
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(Codes, TransformRejectsDegreeDrop) {
  const TowerContext ctx = TowerContext::make(5);
  const Element one = TowerContext::one();
  // g = x + 1 and x -> 1 / (x + 1): d / c = 1 is a root of g.
  const Polynomial g({one, one});
  const SemiLinearMap map = SemiLinearMap::make(ctx, Element{}, one, one, one);
  EXPECT_THROW(transform_polynomial(ctx, g, map), DomainError);
}

TEST(Codes, TransformedPolynomialGivesTheSameCodeOnTheImageSupport) {
  const TowerContext ctx = TowerContext::make(5);
  std::mt19937_64 rng(8);
  const std::vector<ProjectivePoint> line = mobius::projective_line(ctx);
  for (int t = 0; t < 10; ++t) {
    const GoppaInstance inst = make_goppa_instance(ctx, ctx.random_sextic(rng));
    const SemiLinearMap map = mobius::random_map(ctx, rng);
    const Polynomial h = transform_polynomial(ctx, inst.g, map);
    std::vector<ProjectivePoint> image;
    for (ProjectivePoint p : line) image.push_back(mobius::apply(ctx, map, p));
    const BinaryCode before =
        subfield_subcode(ctx, projective_alternant_parity(ctx, goppa_weights(ctx, inst.g, line), line, 7));
    const BinaryCode after =
        subfield_subcode(ctx, projective_alternant_parity(ctx, goppa_weights(ctx, h, image), image, 7));
    ASSERT_EQ(before, after);
  }
}

TEST(Codes, InducedPermutation) {
  const TowerContext ctx = TowerContext::make(5);
  const std::vector<ProjectivePoint> line = mobius::projective_line(ctx);
  const auto id = induced_permutation(ctx, SemiLinearMap::identity(), line);
  for (std::size_t i = 0; i < id.size(); ++i) EXPECT_EQ(id[i], i);
  EXPECT_EQ(format_cycles(id), "()");
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto perm = induced_permutation(ctx, mobius::random_map(ctx, rng), line);
    std::set<std::uint32_t> image(perm.begin(), perm.end());
    ASSERT_EQ(image.size(), line.size());
  }
  const Element one = TowerContext::one();
  const auto shift = induced_permutation(ctx, SemiLinearMap::make(ctx, one, one, Element{}, one), line);
  for (std::size_t i = 0; i < shift.size(); ++i) EXPECT_EQ(shift[i] == i, i + 1 == shift.size());
  const std::uint32_t small[] = {1, 2, 0, 3, 5, 4};
  EXPECT_EQ(format_cycles(small), "(0 1 2)(4 5)");
  std::vector<ProjectivePoint> partial(line.begin(), line.end() - 1);
  EXPECT_THROW(induced_permutation(ctx, SemiLinearMap::make(ctx, Element{}, one, one, Element{}), partial),
               DomainError);
}

TEST(Codes, ExtendedCodesAreEquivalentAlongMaps) {
  const TowerContext ctx = TowerContext::make(5);
  std::mt19937_64 rng(10);
  const Element alpha = ctx.random_sextic(rng);
  const EquivalenceReport same = check_extended_equivalence(ctx, alpha, SemiLinearMap::identity());
  EXPECT_EQ(same.beta, alpha);
  EXPECT_TRUE(same.verified);
  bool wrong_permutation_detected = false;
  for (int t = 0; t < 10; ++t) {
    const Element a = ctx.random_sextic(rng);
    const SemiLinearMap map = mobius::random_map(ctx, rng);
    const EquivalenceReport r = check_extended_equivalence(ctx, a, map);
    ASSERT_TRUE(r.verified);
    ASSERT_EQ(r.beta, mobius::apply(ctx, map, a));
    ASSERT_EQ(r.enumerator_alpha, r.enumerator_beta);
    // The check is not vacuous: a transposition of two coordinates breaks it.
    std::vector<std::uint32_t> wrong = r.permutation;
    std::swap(wrong[0], wrong[1]);
    const BinaryCode ca = extended_goppa_code(ctx, a);
    if (!(ca.permuted(wrong) == extended_goppa_code(ctx, r.beta))) wrong_permutation_detected = true;
  }
  EXPECT_TRUE(wrong_permutation_detected);
}

}  // namespace
}  // namespace goppa::codes
