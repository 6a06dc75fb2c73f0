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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "goppa/counting.hpp"
#include "goppa/mobius.hpp"

namespace {

using goppa::gf2::Element;
using goppa::gf2::TowerContext;
using goppa::mobius::OrbitEnumerator;

// One affine suborbit, the unit of work in the census marking loop.
void BM_AffineSuborbit(benchmark::State& state) {
  const TowerContext ctx = TowerContext::make(static_cast<unsigned>(state.range(0)));
  const OrbitEnumerator orbits(ctx);
  std::mt19937_64 rng(3);
  const Element beta = ctx.random_sextic(rng);
  for (auto _ : state) {
    std::uint64_t acc = 0;
    orbits.for_each_affine(beta, [&](Element x) { acc ^= x.bits(); });
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(orbits.affine_size()));
}
BENCHMARK(BM_AffineSuborbit)->Arg(3)->Arg(5)->Arg(7);

void BM_PglOrbitMin(benchmark::State& state) {
  const TowerContext ctx = TowerContext::make(5);
  const OrbitEnumerator orbits(ctx);
  std::mt19937_64 rng(4);
  const Element alpha = ctx.random_sextic(rng);
  for (auto _ : state) benchmark::DoNotOptimize(orbits.pgl_min(alpha));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(orbits.pgl_size()));
}
BENCHMARK(BM_PglOrbitMin)->Unit(benchmark::kMicrosecond);

void BM_SamePglOrbit(benchmark::State& state) {
  const TowerContext ctx = TowerContext::make(5);
  std::mt19937_64 rng(5);
  const Element alpha = ctx.random_sextic(rng);
  const Element beta = ctx.random_sextic(rng);
  for (auto _ : state) benchmark::DoNotOptimize(goppa::mobius::same_pgl_orbit(ctx, alpha, beta));
}
BENCHMARK(BM_SamePglOrbit)->Unit(benchmark::kMicrosecond);

// A full root sweep over F_{2^{6n}}; n = 3 is one 2^18-element pass.
void BM_RootSweep(benchmark::State& state) {
  const TowerContext ctx = TowerContext::make(static_cast<unsigned>(state.range(0)));
  const auto eq = static_cast<goppa::counting::Equation>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(goppa::counting::root_count_sweep(ctx, eq, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.field_size()));
}
BENCHMARK(BM_RootSweep)
    ->Args({3, static_cast<int>(goppa::counting::Equation::kEq3n)})
    ->Args({3, static_cast<int>(goppa::counting::Equation::kEq41)})
    ->Unit(benchmark::kMillisecond);

void BM_BurnsideBound(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(goppa::counting::burnside_bound(n).bound);
}
BENCHMARK(BM_BurnsideBound)->Arg(5)->Arg(61);

}  // namespace
