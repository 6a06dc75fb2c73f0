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

#include "goppa/counting.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "goppa/errors.hpp"
#include "goppa/mobius.hpp"
#include "oracles.hpp"

namespace goppa::counting {
namespace {

using goppa::testing::SlowField;

TEST(ClosedForms, FixedPointTableAtFive) {
  EXPECT_EQ(closed_form_fixed_points(5, 1), 32799);
  EXPECT_EQ(closed_form_fixed_points(5, 2), 1023);
  EXPECT_EQ(closed_form_fixed_points(5, 3), 30);
  EXPECT_EQ(closed_form_fixed_points(5, 6), 0);
  EXPECT_EQ(closed_form_fixed_points(5, 5), 9);
  EXPECT_EQ(closed_form_fixed_points(5, 10), 3);
  EXPECT_EQ(closed_form_fixed_points(5, 15), 0);
  EXPECT_EQ(closed_form_fixed_points(5, 30), 0);
  EXPECT_EQ(closed_form_fixed_points_at(5, 15), 1023);
  EXPECT_EQ(closed_form_fixed_points_at(5, 0), 32799);
  EXPECT_EQ(closed_form_fixed_points_at(5, 12), closed_form_fixed_points_at(5, 6));
  EXPECT_THROW(closed_form_fixed_points(4, 2), DomainError);
  EXPECT_THROW(closed_form_fixed_points(3, 2), DomainError);
  EXPECT_THROW(closed_form_fixed_points(5, 4), DomainError);
}

TEST(ClosedForms, ElementOrders) {
  EXPECT_EQ(element_order(5, 0), 1u);
  EXPECT_EQ(element_order(5, 15), 2u);
  EXPECT_EQ(element_order(5, 10), 3u);
  EXPECT_EQ(element_order(5, 6), 5u);
  EXPECT_EQ(element_order(5, 7), 30u);
  EXPECT_EQ(element_order(5, 45), 2u);
  EXPECT_EQ(euler_phi(30), 8u);
  EXPECT_EQ(divisors(30), (std::vector<unsigned>{1, 2, 3, 5, 6, 10, 15, 30}));
}

TEST(ClosedForms, BurnsideBoundAtFiveAndSeven) {
  const BurnsideBound b5 = burnside_bound(5);
  EXPECT_EQ(b5.weighted_sum, 33930);
  EXPECT_EQ(b5.bound, 1131);
  EXPECT_EQ(b5.terms.size(), 8u);
  const BurnsideBound b7 = burnside_bound(7);
  EXPECT_EQ(b7.weighted_sum, 2113986);
  EXPECT_EQ(b7.bound, 50333);
}

TEST(ClosedForms, BoundIsIntegralForAllPrimesUpTo61) {
  for (unsigned n = 5; n <= 61; ++n) {
    if (!is_prime(n)) continue;
    const BurnsideBound b = burnside_bound(n);
    ASSERT_EQ(b.closed_numerator % (6 * n), 0) << n;
    ASSERT_EQ(b.bound * 6 * n, b.weighted_sum);
  }
  EXPECT_THROW(burnside_bound(9), DomainError);
}

TEST(ClosedForms, SetSizes) {
  EXPECT_EQ(sextic_set_size(5), 1073708064);
  EXPECT_EQ(pgl_orbit_size(5), 32736);
}

// Partitions computed by union-find over group generators with slow
// arithmetic, for the machinery-only towers n = 2 and 3.
class SmallTowerCountingTest : public ::testing::TestWithParam<unsigned> {
 protected:
  void SetUp() override {
    slow = SlowField{ctx.modulus_big(), ctx.degree()};
    for (std::uint64_t x = 0; x < ctx.field_size(); ++x)
      if (slow.fixed_by(x, ctx.n())) base.push_back(x);
    pgl_root = goppa::testing::generator_orbits(slow, base, false);
    pgammal_root = goppa::testing::generator_orbits(slow, base, true);
  }

  TowerContext ctx = TowerContext::make(GetParam());
  SlowField slow{0, 0};
  std::vector<std::uint64_t> base;
  std::vector<std::uint64_t> pgl_root;
  std::vector<std::uint64_t> pgammal_root;
};

TEST_P(SmallTowerCountingTest, CensusMatchesGeneratorClosure) {
  const auto oracle_sizes = goppa::testing::orbit_sizes(pgammal_root);
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& [rep, size] : oracle_sizes) ++histogram[size];
  const OrbitCensus one = global_orbit_census(ctx, 1);
  const OrbitCensus four = global_orbit_census(ctx, 4);
  EXPECT_EQ(one.orbit_count, oracle_sizes.size());
  EXPECT_EQ(one.size_histogram, histogram);
  EXPECT_EQ(one.elements_visited, static_cast<std::uint64_t>(sextic_set_size(ctx.n())));
  EXPECT_EQ(one.pgl_orbit_count, goppa::testing::orbit_sizes(pgl_root).size());
  std::vector<Element> reps;
  for (const auto& [rep, size] : oracle_sizes) reps.emplace_back(rep);
  EXPECT_EQ(one.representatives, reps);
  EXPECT_EQ(four.representatives, one.representatives);
  EXPECT_EQ(four.size_histogram, one.size_histogram);
  EXPECT_EQ(four.workers, 4u);
}

TEST_P(SmallTowerCountingTest, FixedPointSweepMatchesGeneratorClosureForEveryExponent) {
  std::vector<unsigned long long> exps;
  for (unsigned d = 0; d < ctx.degree(); ++d) exps.push_back(d);
  const auto results = fixed_point_sweep(ctx, exps, 2);
  const OrbitCensus census = global_orbit_census(ctx, 1);
  for (const FixedPointResult& r : results) {
    const std::uint64_t expect = goppa::testing::fixed_orbits(slow, pgl_root, static_cast<unsigned>(r.d));
    ASSERT_EQ(r.count, expect) << "d = " << r.d;
    ASSERT_EQ(fixed_points_from_census(census, r.d), expect) << "d = " << r.d;
  }
}

TEST_P(SmallTowerCountingTest, RootSweepMatchesLinearSolverAndSlowArithmetic) {
  for (Equation eq : all_equations()) {
    const RootCount swept = root_count_sweep(ctx, eq, 2);
    const auto solved = root_count_linearized(ctx, eq);
    if (solved) ASSERT_EQ(swept, *solved) << equation_name(eq);
  }
  // eq_41 root count with slow arithmetic.
  const unsigned n = ctx.n();
  std::uint64_t total = 0, in_s = 0;
  for (std::uint64_t x = 1; x < ctx.field_size(); ++x) {
    if ((slow.mul(x, slow.frob(x, 2 * n)) ^ x) != 1) continue;
    ++total;
    in_s += slow.in_s(x);
  }
  const RootCount eq41 = root_count_sweep(ctx, Equation::kEq41, 1);
  EXPECT_EQ(eq41.total, total);
  EXPECT_EQ(eq41.in_s, in_s);
}

TEST_P(SmallTowerCountingTest, ClassEquationMatchesAffinePartition) {
  const auto affine_root = goppa::testing::generator_orbits(slow, base, false, true);
  std::vector<unsigned long long> exps;
  for (unsigned d = 1; d < ctx.degree(); ++d) exps.push_back(d);
  const auto results = fixed_point_sweep(ctx, exps, 1, true);
  for (const FixedPointResult& r : results) {
    for (Element alpha : r.representatives) {
      const ClassEquation ce = class_equation_check(ctx, alpha, r.d);
      // Cycle lengths of sigma^d on the affine classes inside O_alpha.
      std::set<std::uint64_t> classes;
      for (std::uint64_t x = 0; x < ctx.field_size(); ++x)
        if (pgl_root[x] == pgl_root[alpha.bits()]) classes.insert(affine_root[x]);
      std::vector<unsigned> expect;
      std::set<std::uint64_t> seen;
      for (std::uint64_t c : classes) {
        if (seen.count(c)) continue;
        unsigned len = 0;
        for (std::uint64_t y = c; !seen.count(affine_root[y]); y = slow.frob(y, static_cast<unsigned>(r.d)), ++len)
          seen.insert(affine_root[y]);
        expect.push_back(len);
      }
      std::sort(expect.begin(), expect.end());
      ASSERT_EQ(ce.parts, expect);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(MachineryTowers, SmallTowerCountingTest, ::testing::Values(2u, 3u));

TEST(Counting, ClassEquationRejectsUnfixedOrbits) {
  const TowerContext ctx = TowerContext::make(5);
  std::mt19937_64 rng(3);
  const Element alpha = ctx.random_sextic(rng);
  // A random orbit is fixed by sigma^1 with negligible probability; the
  // rank criterion confirms the precondition is violated.
  ASSERT_FALSE(mobius::same_pgl_orbit(ctx, alpha, ctx.frobenius(alpha, 1)));
  EXPECT_THROW(class_equation_check(ctx, alpha, 1), DomainError);
  const ClassEquation identity = class_equation_check(ctx, alpha, 0);
  EXPECT_EQ(identity.parts, std::vector<unsigned>(33, 1));
}

TEST(Counting, LinearizedRootCountsAtFive) {
  const TowerContext ctx = TowerContext::make(5);
  for (Equation eq : all_equations()) {
    const auto solved = root_count_linearized(ctx, eq);
    if (eq == Equation::kEq41) {
      EXPECT_FALSE(solved.has_value());
      continue;
    }
    ASSERT_TRUE(solved.has_value());
    EXPECT_EQ(*solved, expected_root_count(5, eq)) << equation_name(eq);
  }
  EXPECT_EQ(expected_root_count(5, Equation::kEq3n).in_s, 32736u);
  EXPECT_EQ(expected_root_count(5, Equation::kEq41).in_s, 990u);
  EXPECT_EQ(expected_root_count(5, Equation::kFixedField64).in_s, 54u);
}

TEST(Counting, FindRootsInS) {
  const TowerContext ctx = TowerContext::make(5);
  const auto roots = find_roots_in_s(ctx, Equation::kEq3n, 10);
  ASSERT_EQ(roots.size(), 10u);
  EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
  for (Element x : roots) {
    EXPECT_TRUE(ctx.in_sextic_set(x));
    EXPECT_EQ(ctx.frobenius(x, 15) + x, TowerContext::one());
  }
  const auto eq41 = find_roots_in_s(ctx, Equation::kEq41, 3);
  ASSERT_EQ(eq41.size(), 3u);
  for (Element x : eq41) {
    EXPECT_TRUE(ctx.in_sextic_set(x));
    EXPECT_EQ(ctx.frobenius(x, 10) + ctx.inv(x) + TowerContext::one(), Element{});
  }
}

TEST(Counting, SweepsRefuseLargeTowers) {
  const TowerContext ctx = TowerContext::make(7);
  EXPECT_THROW(global_orbit_census(ctx, 1), InfeasibleError);
  const unsigned long long d[] = {21};
  EXPECT_THROW(fixed_point_sweep(ctx, d), InfeasibleError);
  EXPECT_THROW(root_count_sweep(ctx, Equation::kEq41), InfeasibleError);
  try {
    global_orbit_census(ctx, 1);
  } catch (const InfeasibleError& e) {
    EXPECT_NE(std::string(e.what()).find("524288 MiB"), std::string::npos) << e.what();
  }
}

TEST(Counting, ArtinSchreierShift) {
  const TowerContext ctx = TowerContext::make(5);
  EXPECT_EQ(solve_artin_schreier_shift(ctx, Element{}), Element{});
  std::mt19937_64 rng(4);
  unsigned solvable = 0;
  for (int t = 0; t < 64; ++t) {
    const Element b = ctx.random_base(rng);
    const auto c = solve_artin_schreier_shift(ctx, b);
    const bool trace_zero = gf2::trace(ctx, b, ctx.base_level(), gf2::FieldLevel{1}).is_zero();
    ASSERT_EQ(c.has_value(), trace_zero);
    if (c) {
      ++solvable;
      ASSERT_TRUE(ctx.in_base(*c));
      ASSERT_EQ(ctx.frobenius(*c, 6) + *c, b);
    }
  }
  EXPECT_GT(solvable, 0u);
  EXPECT_THROW(solve_artin_schreier_shift(ctx, ctx.random_sextic(rng)), DomainError);
}

TEST(Counting, EquationNames) {
  for (Equation eq : all_equations()) EXPECT_EQ(parse_equation(equation_name(eq)), eq);
  EXPECT_FALSE(parse_equation("eq_99").has_value());
}

}  // namespace
}  // namespace goppa::counting
