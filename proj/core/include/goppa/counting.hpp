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

// Orbit counting for the action of PGammaL_2(F_{2^n}) on S.
//
// Closed forms are evaluated exactly with arbitrary precision. Every closed
// form has an exhaustive counterpart that works directly on F_{2^{6n}} and
// is feasible for 6n <= 30.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goppa/element.hpp"
#include "goppa/tower.hpp"

namespace goppa::counting {

using BigInt = boost::multiprecision::cpp_int;
using gf2::Element;
using gf2::TowerContext;

bool is_prime(unsigned n);

/// Divisors of k, ascending.
std::vector<unsigned> divisors(unsigned k);
unsigned euler_phi(unsigned k);

/// Order of sigma^d in the cyclic group of order 6n: 6n / gcd(6n, d).
unsigned element_order(unsigned n, unsigned long long d);

/// |F(sigma^i)| for an automorphism of the given order. Requires n prime,
/// n > 3, and order | 6n.
BigInt closed_form_fixed_points(unsigned n, unsigned order);
/// Same, addressed by the exponent d of sigma^d.
BigInt closed_form_fixed_points_at(unsigned n, unsigned long long d);

struct BurnsideTerm {
  unsigned d = 0;  // divisor of 6n
  unsigned order = 0;
  BigInt fixed;
  unsigned phi = 0;  // phi(6n / d): number of i with gcd(i, 6n) = d
};

struct BurnsideBound {
  unsigned n = 0;
  std::vector<BurnsideTerm> terms;
  BigInt weighted_sum;
  BigInt closed_numerator;  // 2^{3n} + 2^{2n} + 3 2^n + 12n - 18
  BigInt bound;             // weighted_sum / 6n
};

/// Evaluates the orbit bound both as the phi-weighted divisor sum and in
/// closed form; throws ConsistencyError if they disagree or 6n does not
/// divide the sum.
BurnsideBound burnside_bound(unsigned n);

/// |S| = 2^{6n} - 2^{3n} - 2^{2n} + 2^n and |O_alpha| = 2^{3n} - 2^n.
BigInt sextic_set_size(unsigned n);
BigInt pgl_orbit_size(unsigned n);

/// Throws InfeasibleError (with the memory requirement) unless 6n <= 30.
void require_sweepable(const TowerContext& ctx, std::string_view what);

struct FixedPointResult {
  unsigned long long d = 0;
  std::uint64_t count = 0;
  /// Canonical (enc-minimal) representatives of the fixed PGL-orbits, ascending.
  std::vector<Element> representatives;
};

/// |{O_alpha : sigma^d(O_alpha) = O_alpha}| for each requested exponent
/// by one exhaustive pass over S. Exponents need not divide 6n. Each
/// orbit's verdict is decided by canonical representatives and
/// cross-checked with the rank criterion of mobius::same_pgl_orbit.
std::vector<FixedPointResult> fixed_point_sweep(const TowerContext& ctx, std::span<const unsigned long long> exponents,
                                                unsigned workers = 1, bool keep_representatives = false);
std::uint64_t fixed_point_oracle(const TowerContext& ctx, unsigned long long d, unsigned workers = 1);

/// Equations whose roots the fixed-point proofs count.
enum class Equation {
  kEq3n,         // x^{2^{3n}} + x + 1 = 0
  kEq2nAffine,   // x^{2^{2n}} + x + 1 = 0
  kEq41,         // x^{2^{2n}} + 1/x + 1 = 0, i.e. x^{2^{2n}+1} + x + 1 = 0
  kEqDeg8,       // x^8 + x + 1 = 0
  kFixedField64  // x^{2^6} = x
};

std::string_view equation_name(Equation eq);
std::optional<Equation> parse_equation(std::string_view name);
std::vector<Equation> all_equations();

struct RootCount {
  std::uint64_t total = 0;
  std::uint64_t in_s = 0;
  std::uint64_t in_f2n = 0;  // roots lying in F_{2^{2n}}
  std::uint64_t in_f3n = 0;  // roots lying in F_{2^{3n}}
  std::uint64_t in_base = 0; // roots lying in F_{2^n}
  friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Classifies every root found by an exhaustive sweep over F_{2^{6n}}.
RootCount root_count_sweep(const TowerContext& ctx, Equation eq, unsigned workers = 1);
/// Same counts from the solution space of the linearized equation. Not
/// available for kEq41 (returns nullopt).
std::optional<RootCount> root_count_linearized(const TowerContext& ctx, Equation eq);
/// Up to `limit` roots lying in S, ascending.
std::vector<Element> find_roots_in_s(const TowerContext& ctx, Equation eq, std::size_t limit);

/// The root counts the fixed-point proofs rely on, for n prime > 3.
RootCount expected_root_count(unsigned n, Equation eq);

struct ClassEquation {
  unsigned long long d = 0;
  unsigned order = 0;
  /// Cycle lengths of sigma^d on the 2^n + 1 affine suborbits, ascending.
  std::vector<unsigned> parts;
};

/// Requires sigma^d(O_alpha) = O_alpha (DomainError otherwise). Verifies the
/// parts sum to 2^n + 1 and each divides the order of sigma^d.
ClassEquation class_equation_check(const TowerContext& ctx, Element alpha, unsigned long long d);

struct OrbitCensus {
  unsigned n = 0;
  unsigned workers = 1;
  std::uint64_t orbit_count = 0;
  /// PGammaL-orbit size -> number of orbits of that size.
  std::map<std::uint64_t, std::uint64_t> size_histogram;
  /// s -> number of PGammaL-orbits made of s PGL-orbits.
  std::map<unsigned, std::uint64_t> stabilizer_histogram;
  std::uint64_t pgl_orbit_count = 0;
  std::uint64_t elements_visited = 0;
  /// Enc-minimal element of every PGammaL-orbit, ascending.
  std::vector<Element> representatives;
  double elapsed_ms = 0;
};

/// Partitions S into PGammaL-orbits with a visited bitmap over F_{2^{6n}}.
/// Results do not depend on the worker count.
OrbitCensus global_orbit_census(const TowerContext& ctx, unsigned workers = 1);

/// |F(sigma^d)| recovered from a census: the sum of s over orbits with s | d
/// (an orbit of s PGL-orbits contributes its s members when s | d).
std::uint64_t fixed_points_from_census(const OrbitCensus& census, unsigned long long d);

/// c in F_{2^n} with c^{2^6} + c = b, or nullopt if none exists
/// (b must lie in F_{2^n}).
std::optional<Element> solve_artin_schreier_shift(const TowerContext& ctx, Element b);

}  // namespace goppa::counting
