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

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "goppa/errors.hpp"
#include "goppa/linearized.hpp"
#include "goppa/mobius.hpp"
#include "goppa/parallel.hpp"

namespace goppa::counting {

namespace {

using gf2::LinearizedMap;
using mobius::OrbitEnumerator;

BigInt pow2(unsigned e) { return BigInt(1) << e; }

void require_bound_range(unsigned n) {
  if (n <= 3 || !is_prime(n))
    throw DomainError("closed forms require n prime and n > 3 (got n = " + std::to_string(n) + ")");
}

std::string mib(unsigned bits_log2) {
  // 2^{bits_log2} bits in MiB
  if (bits_log2 < 23) return "<1 MiB";
  return (BigInt(1) << (bits_log2 - 23)).str() + " MiB";
}

// Visited bitmap over F_{2^{6n}} with F_{2^{2n}} u F_{2^{3n}} pre-marked,
// so the clear bits are exactly the unvisited elements of S.
class SexticBitmap {
 public:
  explicit SexticBitmap(const TowerContext& ctx) : bits_(ctx.field_size()) {
    const LinearizedMap id = LinearizedMap::identity(ctx.degree());
    for (unsigned k : {2 * ctx.n(), 3 * ctx.n()}) {
      const auto sub = gf2::solve_affine_linearized(ctx.frobenius_map(k) + id, Element{});
      for (Element x : sub.elements()) bits_.set(x.bits());
    }
    outside_s_ = bits_.popcount();
  }

  AtomicBitmap& bits() { return bits_; }
  [[nodiscard]] std::uint64_t outside_s() const { return outside_s_; }

 private:
  AtomicBitmap bits_;
  std::uint64_t outside_s_ = 0;
};

// Marks O_alpha, one task per affine suborbit; returns the number of bits
// that were newly set.
std::uint64_t mark_pgl_orbit(const OrbitEnumerator& orbits, WorkerPool& pool, AtomicBitmap& bits, Element alpha) {
  const std::vector<Element> reps = orbits.suborbit_representatives(alpha);
  std::vector<std::uint64_t> fresh(reps.size(), 0);
  pool.run(reps.size(), [&](std::size_t k) {
    std::uint64_t local = 0;
    orbits.for_each_affine(reps[k], [&](Element x) { local += bits.set(x.bits()); });
    fresh[k] = local;
  });
  return std::accumulate(fresh.begin(), fresh.end(), std::uint64_t{0});
}

void check_orbit_size(std::uint64_t fresh, std::uint64_t expected, const TowerContext& ctx, Element alpha) {
  if (fresh != expected)
    throw ConsistencyError("orbit of " + ctx.to_hex(alpha) + " marked " + std::to_string(fresh) +
                           " new elements, expected " + std::to_string(expected));
}

void classify(const TowerContext& ctx, Element x, RootCount& out) {
  ++out.total;
  switch (ctx.degree_over_base(x)) {
    case 1:
      ++out.in_base;
      ++out.in_f2n;
      ++out.in_f3n;
      break;
    case 2:
      ++out.in_f2n;
      break;
    case 3:
      ++out.in_f3n;
      break;
    default:
      ++out.in_s;
  }
}

struct EquationMap {
  LinearizedMap map;  // linear part of the left-hand side (eq_41: x -> x^{2^{2n}})
  Element rhs;
  bool quadratic = false;  // eq_41: test x * map(x) + x == 1
};

EquationMap equation_map(const TowerContext& ctx, Equation eq) {
  const unsigned n = ctx.n();
  const LinearizedMap id = LinearizedMap::identity(ctx.degree());
  const Element one = TowerContext::one();
  switch (eq) {
    case Equation::kEq3n:
      return {ctx.frobenius_map(3 * n) + id, one};
    case Equation::kEq2nAffine:
      return {ctx.frobenius_map(2 * n) + id, one};
    case Equation::kEq41:
      return {ctx.frobenius_map(2 * n), one, true};
    case Equation::kEqDeg8:
      return {ctx.frobenius_map(3) + id, one};
    case Equation::kFixedField64:
      return {ctx.frobenius_map(6) + id, Element{}};
  }
  throw DomainError("unknown equation");
}

constexpr unsigned kChunkBits = 20;

// Visits every x in chunk `chunk` (of 2^kChunkBits consecutive encodings,
// or the whole field if smaller) that satisfies the equation.
template <class Visit>
void sweep_chunk(const EquationMap& eq, const TowerContext& ctx, std::uint64_t chunk, unsigned chunk_bits,
                 Visit&& visit) {
  const auto cols = eq.map.columns();
  std::uint64_t x = chunk << chunk_bits;
  std::uint64_t lx = eq.map.apply_linear(Element(x)).bits();
  const std::uint64_t target = eq.rhs.bits();
  const std::uint64_t steps = std::uint64_t{1} << chunk_bits;
  for (std::uint64_t j = 0;;) {
    const bool hit = eq.quadratic ? (ctx.mul(Element(x), Element(lx)).bits() ^ x) == target : lx == target;
    if (hit) visit(Element(x));
    if (++j == steps) break;
    const int b = std::countr_zero(j);
    x ^= std::uint64_t{1} << b;
    lx ^= cols[b];
  }
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<unsigned> divisors(unsigned k) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= k; ++d)
    if (k % d == 0) out.push_back(d);
  return out;
}

unsigned euler_phi(unsigned k) {
  unsigned count = 0;
  for (unsigned i = 1; i <= k; ++i)
    if (std::gcd(i, k) == 1) ++count;
  return count;
}

unsigned element_order(unsigned n, unsigned long long d) {
  const unsigned long long m = 6ULL * n;
  return static_cast<unsigned>(m / std::gcd(m, d % m == 0 ? m : d % m));
}

BigInt closed_form_fixed_points(unsigned n, unsigned order) {
  require_bound_range(n);
  if ((6 * n) % order != 0) throw DomainError("order " + std::to_string(order) + " does not divide 6n");
  if (order == 1) return pow2(3 * n) + pow2(n) - 1;
  if (order == 2) return pow2(2 * n) - 1;
  if (order == 3) return pow2(n) - 2;
  if (order == 6) return 0;
  if (order == n) return 9;
  if (order == 2 * n) return 3;
  return 0;  // 3n, 6n
}

BigInt closed_form_fixed_points_at(unsigned n, unsigned long long d) {
  require_bound_range(n);
  return closed_form_fixed_points(n, element_order(n, d));
}

BurnsideBound burnside_bound(unsigned n) {
  require_bound_range(n);
  BurnsideBound out;
  out.n = n;
  const unsigned m = 6 * n;
  for (unsigned d : divisors(m)) {
    BurnsideTerm t;
    t.d = d;
    t.order = element_order(n, d);
    t.fixed = closed_form_fixed_points(n, t.order);
    t.phi = euler_phi(m / d);
    out.weighted_sum += t.fixed * t.phi;
    out.terms.push_back(std::move(t));
  }
  out.closed_numerator = pow2(3 * n) + pow2(2 * n) + 3 * pow2(n) + 12 * n - 18;
  if (out.weighted_sum != out.closed_numerator)
    throw ConsistencyError("divisor sum " + out.weighted_sum.str() + " differs from closed form " +
                           out.closed_numerator.str());
  if (out.weighted_sum % m != 0)
    throw ConsistencyError("6n = " + std::to_string(m) + " does not divide " + out.weighted_sum.str());
  out.bound = out.weighted_sum / m;
  return out;
}

BigInt sextic_set_size(unsigned n) { return pow2(6 * n) - pow2(3 * n) - pow2(2 * n) + pow2(n); }
BigInt pgl_orbit_size(unsigned n) { return pow2(3 * n) - pow2(n); }

void require_sweepable(const TowerContext& ctx, std::string_view what) {
  if (ctx.degree() > 30)
    throw InfeasibleError(std::string(what) + " at n = " + std::to_string(ctx.n()) +
                          " needs a visited array of 2^" + std::to_string(ctx.degree()) + " bits (" +
                          mib(ctx.degree()) + "); only 6n <= 30 is supported");
}

std::vector<FixedPointResult> fixed_point_sweep(const TowerContext& ctx, std::span<const unsigned long long> exponents,
                                                unsigned workers, bool keep_representatives) {
  require_sweepable(ctx, "fixed-point sweep");
  const OrbitEnumerator orbits(ctx);
  WorkerPool pool(workers);
  SexticBitmap visited(ctx);
  AtomicBitmap& bits = visited.bits();
  std::vector<FixedPointResult> results;
  for (unsigned long long d : exponents) results.push_back({d, 0, {}});
  const std::uint64_t size = ctx.field_size();
  for (std::uint64_t a = bits.next_clear(0); a < size; a = bits.next_clear(a + 1)) {
    const Element alpha(a);  // enc-minimal in its PGL-orbit
    check_orbit_size(mark_pgl_orbit(orbits, pool, bits, alpha), orbits.pgl_size(), ctx, alpha);
    for (FixedPointResult& r : results) {
      const Element beta = ctx.frobenius(alpha, static_cast<long long>(r.d % ctx.degree()));
      bool fixed = beta == alpha;
      if (!fixed) {
        // O_beta = O_alpha iff the smallest element of O_beta is alpha.
        Element first_low{};
        orbits.any_in_pgl(beta, [&](Element x) {
          if (x > alpha) return false;
          first_low = x;
          return true;
        });
        fixed = first_low == alpha;
        if (fixed != mobius::same_pgl_orbit(ctx, alpha, beta))
          throw ConsistencyError("orbit tests disagree for alpha = " + ctx.to_hex(alpha));
      }
      if (fixed) {
        ++r.count;
        if (keep_representatives) r.representatives.push_back(alpha);
      }
    }
  }
  return results;
}

std::uint64_t fixed_point_oracle(const TowerContext& ctx, unsigned long long d, unsigned workers) {
  const unsigned long long exps[] = {d};
  return fixed_point_sweep(ctx, exps, workers).front().count;
}

std::string_view equation_name(Equation eq) {
  switch (eq) {
    case Equation::kEq3n:
      return "eq_3n";
    case Equation::kEq2nAffine:
      return "eq_2n_affine";
    case Equation::kEq41:
      return "eq_41";
    case Equation::kEqDeg8:
      return "eq_deg8";
    case Equation::kFixedField64:
      return "fixed_field_64";
  }
  return "?";
}

std::vector<Equation> all_equations() {
  return {Equation::kEq3n, Equation::kEq2nAffine, Equation::kEq41, Equation::kEqDeg8, Equation::kFixedField64};
}

std::optional<Equation> parse_equation(std::string_view name) {
  for (Equation eq : all_equations())
    if (equation_name(eq) == name) return eq;
  return std::nullopt;
}

RootCount root_count_sweep(const TowerContext& ctx, Equation eq, unsigned workers) {
  require_sweepable(ctx, "root sweep");
  const EquationMap em = equation_map(ctx, eq);
  const unsigned chunk_bits = std::min(kChunkBits, ctx.degree());
  const std::uint64_t chunks = ctx.field_size() >> chunk_bits;
  std::vector<RootCount> partial(chunks);
  WorkerPool pool(workers);
  pool.run(chunks, [&](std::size_t c) {
    sweep_chunk(em, ctx, c, chunk_bits, [&](Element x) { classify(ctx, x, partial[c]); });
  });
  RootCount total;
  for (const RootCount& p : partial) {
    total.total += p.total;
    total.in_s += p.in_s;
    total.in_f2n += p.in_f2n;
    total.in_f3n += p.in_f3n;
    total.in_base += p.in_base;
  }
  return total;
}

std::optional<RootCount> root_count_linearized(const TowerContext& ctx, Equation eq) {
  const EquationMap em = equation_map(ctx, eq);
  if (em.quadratic) return std::nullopt;
  RootCount out;
  for (Element x : gf2::solve_affine_linearized(em.map, em.rhs).elements()) classify(ctx, x, out);
  return out;
}

std::vector<Element> find_roots_in_s(const TowerContext& ctx, Equation eq, std::size_t limit) {
  const EquationMap em = equation_map(ctx, eq);
  std::vector<Element> out;
  if (!em.quadratic) {
    for (Element x : gf2::solve_affine_linearized(em.map, em.rhs).elements())
      if (out.size() < limit && ctx.in_sextic_set(x)) out.push_back(x);
    return out;
  }
  require_sweepable(ctx, "root search");
  const unsigned chunk_bits = std::min(kChunkBits, ctx.degree());
  const std::uint64_t chunks = ctx.field_size() >> chunk_bits;
  for (std::uint64_t c = 0; c < chunks && out.size() < limit; ++c) {
    const std::size_t start = out.size();
    sweep_chunk(em, ctx, c, chunk_bits, [&](Element x) {
      if (ctx.in_sextic_set(x)) out.push_back(x);
    });
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

RootCount expected_root_count(unsigned n, Equation eq) {
  require_bound_range(n);
  const std::uint64_t q = std::uint64_t{1} << n;
  switch (eq) {
    case Equation::kEq3n:
      // q^3 roots; q of them in F_{2^{2n}} where the equation reads x^{2^n} + x = 1.
      return {q * q * q, q * q * q - q, q, 0, 0};
    case Equation::kEq2nAffine:
      return {};
    case Equation::kEq41:
      return {q * q + 1, q * q - q - 2, 2, q + 1, 0};
    case Equation::kEqDeg8:
      // (x^2 + x + 1)(x^6 + x^5 + x^3 + x^2 + 1)
      return {8, 6, 2, 0, 0};
    case Equation::kFixedField64:
      return {64, 54, 4, 8, 2};
  }
  throw DomainError("unknown equation");
}

ClassEquation class_equation_check(const TowerContext& ctx, Element alpha, unsigned long long d) {
  if (!ctx.in_sextic_set(alpha)) throw DomainError("alpha must lie in S");
  const OrbitEnumerator orbits(ctx);
  const std::vector<Element> reps = orbits.suborbit_representatives(alpha);
  std::vector<std::pair<Element, std::uint32_t>> owner;
  owner.reserve(orbits.pgl_size());
  for (std::uint32_t k = 0; k < reps.size(); ++k)
    orbits.for_each_affine(reps[k], [&](Element x) { owner.emplace_back(x, k); });
  std::sort(owner.begin(), owner.end());
  const auto suborbit_of = [&](Element x) -> std::optional<std::uint32_t> {
    const auto it = std::lower_bound(owner.begin(), owner.end(), std::pair{x, std::uint32_t{0}});
    if (it == owner.end() || it->first != x) return std::nullopt;
    return it->second;
  };
  const long long e = static_cast<long long>(d % ctx.degree());
  std::vector<std::uint32_t> image(reps.size());
  for (std::uint32_t k = 0; k < reps.size(); ++k) {
    const auto target = suborbit_of(ctx.frobenius(reps[k], e));
    if (!target) throw DomainError("sigma^" + std::to_string(d) + " does not fix the orbit of " + ctx.to_hex(alpha));
    image[k] = *target;
  }
  // sigma^d commutes with the affine group, so it permutes whole suborbits;
  // spot-check that with the shifted representatives e*rep + f.
  for (std::uint32_t k = 0; k < reps.size(); ++k) {
    const Element probe = ctx.mul(ctx.base_generator(), reps[k]) + TowerContext::one();
    if (suborbit_of(ctx.frobenius(probe, e)) != image[k])
      throw ConsistencyError("sigma^d does not respect the suborbit partition");
  }
  ClassEquation out;
  out.d = d;
  out.order = element_order(ctx.n(), d);
  std::vector<bool> seen(reps.size(), false);
  for (std::uint32_t k = 0; k < reps.size(); ++k) {
    if (seen[k]) continue;
    unsigned len = 0;
    for (std::uint32_t i = k; !seen[i]; i = image[i], ++len) seen[i] = true;
    if (out.order % len != 0) throw ConsistencyError("cycle length does not divide the order of sigma^d");
    out.parts.push_back(len);
  }
  std::sort(out.parts.begin(), out.parts.end());
  if (std::accumulate(out.parts.begin(), out.parts.end(), 0u) != reps.size())
    throw ConsistencyError("class equation parts do not sum to 2^n + 1");
  return out;
}

OrbitCensus global_orbit_census(const TowerContext& ctx, unsigned workers) {
  require_sweepable(ctx, "orbit census");
  const auto start = std::chrono::steady_clock::now();
  const OrbitEnumerator orbits(ctx);
  WorkerPool pool(workers);
  SexticBitmap visited(ctx);
  AtomicBitmap& bits = visited.bits();
  OrbitCensus census;
  census.n = ctx.n();
  census.workers = pool.size();
  const std::uint64_t size = ctx.field_size();
  for (std::uint64_t a = bits.next_clear(0); a < size; a = bits.next_clear(a + 1)) {
    const Element alpha(a);  // enc-minimal in its PGammaL-orbit
    check_orbit_size(mark_pgl_orbit(orbits, pool, bits, alpha), orbits.pgl_size(), ctx, alpha);
    // sigma^i(O_alpha) is new exactly for i < s, the stabilizer index.
    unsigned s = 1;
    for (; s < ctx.degree(); ++s) {
      const Element conj = ctx.frobenius(alpha, s);
      if (bits.test(conj.bits())) break;
      check_orbit_size(mark_pgl_orbit(orbits, pool, bits, conj), orbits.pgl_size(), ctx, conj);
    }
    if (ctx.degree() % s != 0) throw ConsistencyError("Galois stabilizer index does not divide 6n");
    const std::uint64_t orbit_size = s * orbits.pgl_size();
    ++census.orbit_count;
    ++census.size_histogram[orbit_size];
    ++census.stabilizer_histogram[s];
    census.pgl_orbit_count += s;
    census.elements_visited += orbit_size;
    census.representatives.push_back(alpha);
  }
  if (bits.popcount() != size || census.elements_visited + visited.outside_s() != size)
    throw ConsistencyError("census did not cover S exactly");
  census.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return census;
}

std::uint64_t fixed_points_from_census(const OrbitCensus& census, unsigned long long d) {
  std::uint64_t total = 0;
  for (const auto& [s, count] : census.stabilizer_histogram)
    if (d % s == 0) total += static_cast<std::uint64_t>(s) * count;
  return total;
}

std::optional<Element> solve_artin_schreier_shift(const TowerContext& ctx, Element b) {
  const auto b_coords = ctx.base_coords(b);
  if (!b_coords) throw DomainError("b must lie in F_{2^n}");
  std::vector<std::uint64_t> cols;
  for (Element w : ctx.base_basis()) {
    const auto image = ctx.base_coords(ctx.frobenius(w, 6) + w);
    if (!image) throw ConsistencyError("x^{2^6} + x left the base field");
    cols.push_back(*image);
  }
  const auto sol = gf2::solve_affine_linearized(LinearizedMap(std::move(cols)), Element(*b_coords));
  if (sol.empty()) return std::nullopt;
  const Element c = ctx.embed(sol.particular->bits());
  if (ctx.frobenius(c, 6) + c != b) throw ConsistencyError("Artin-Schreier solution fails verification");
  return c;
}

}  // namespace goppa::counting
