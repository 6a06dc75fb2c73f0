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

#include "goppa/mobius.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "goppa/errors.hpp"
#include "goppa/linearized.hpp"

namespace goppa::mobius {

namespace {

void require_sextic(const TowerContext& ctx, Element x, const char* what) {
  if (!ctx.in_sextic_set(x))
    throw DomainError(std::string(what) + ": element " + ctx.to_hex(x) + " does not have degree 6 over F_{2^n}");
}

}  // namespace

std::uint64_t encode(const TowerContext& ctx, ProjectivePoint p) {
  return p.is_infinity() ? ctx.field_size() : p.value().bits();
}

std::string to_hex(const TowerContext& ctx, ProjectivePoint p) { return ctx.to_hex(encode(ctx, p)); }

ProjectivePoint point_from_hex(const TowerContext& ctx, std::string_view text) {
  if (text == "inf" || text == "infinity") return ProjectivePoint::infinity();
  std::string_view digits = text;
  if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, 16);
  if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size() && v == ctx.field_size())
    return ProjectivePoint::infinity();
  return ProjectivePoint(ctx.from_hex(text));
}

std::vector<ProjectivePoint> projective_line(const TowerContext& ctx) {
  std::vector<ProjectivePoint> line;
  line.reserve(ctx.base_elements_sorted().size() + 1);
  for (Element x : ctx.base_elements_sorted()) line.emplace_back(x);
  line.push_back(ProjectivePoint::infinity());
  return line;
}

SemiLinearMap SemiLinearMap::make(const TowerContext& ctx, Element a, Element b, Element c, Element d,
                                  long long frob) {
  for (Element x : {a, b, c, d})
    if (!ctx.in_base(x)) throw DomainError("matrix entry " + ctx.to_hex(x) + " is not in F_{2^n}");
  if ((ctx.mul(a, d) + ctx.mul(b, c)).is_zero()) throw DomainError("singular matrix (ad + bc = 0)");
  SemiLinearMap map;
  map.m_ = {a, b, c, d};
  const auto first = std::find_if(map.m_.begin(), map.m_.end(), [](Element x) { return !x.is_zero(); });
  const Element scale = ctx.inv(*first);
  for (auto& x : map.m_) x = ctx.mul(x, scale);
  const long long m = ctx.degree();
  map.frob_ = static_cast<unsigned>(((frob % m) + m) % m);
  return map;
}

ProjectivePoint apply(const TowerContext& ctx, const SemiLinearMap& map, ProjectivePoint zeta) {
  if (zeta.is_infinity()) {
    // sigma fixes infinity; the Moebius part sends it to a/c.
    if (map.c().is_zero()) return ProjectivePoint::infinity();
    return ProjectivePoint(ctx.div(map.a(), map.c()));
  }
  const Element w = ctx.frobenius(zeta.value(), map.frob());
  const Element num = ctx.mul(map.a(), w) + map.b();
  const Element den = ctx.mul(map.c(), w) + map.d();
  if (den.is_zero()) return ProjectivePoint::infinity();
  return ProjectivePoint(ctx.div(num, den));
}

Element apply(const TowerContext& ctx, const SemiLinearMap& map, Element zeta) {
  const Element w = ctx.frobenius(zeta, map.frob());
  const Element den = ctx.mul(map.c(), w) + map.d();
  if (den.is_zero()) throw DomainError("point " + ctx.to_hex(zeta) + " is a pole of the map");
  return ctx.div(ctx.mul(map.a(), w) + map.b(), den);
}

SemiLinearMap compose(const TowerContext& ctx, const SemiLinearMap& f, const SemiLinearMap& g) {
  // (A, s^i)(B, s^j) = (A s^i(B), s^{i+j})
  const auto sb = [&](Element x) { return ctx.frobenius(x, f.frob()); };
  const Element ga = sb(g.a()), gb = sb(g.b()), gc = sb(g.c()), gd = sb(g.d());
  const Element a = ctx.mul(f.a(), ga) + ctx.mul(f.b(), gc);
  const Element b = ctx.mul(f.a(), gb) + ctx.mul(f.b(), gd);
  const Element c = ctx.mul(f.c(), ga) + ctx.mul(f.d(), gc);
  const Element d = ctx.mul(f.c(), gb) + ctx.mul(f.d(), gd);
  return SemiLinearMap::make(ctx, a, b, c, d, static_cast<long long>(f.frob()) + g.frob());
}

SemiLinearMap inverse(const TowerContext& ctx, const SemiLinearMap& f) {
  // (A, s^i)^{-1} = (s^{-i}(adj A), s^{-i}); adj [[a,b],[c,d]] = [[d,b],[c,a]] in characteristic 2.
  const long long back = -static_cast<long long>(f.frob());
  const auto s = [&](Element x) { return ctx.frobenius(x, back); };
  return SemiLinearMap::make(ctx, s(f.d()), s(f.b()), s(f.c()), s(f.a()), back);
}

SemiLinearMap random_map(const TowerContext& ctx, std::mt19937_64& rng, bool semilinear) {
  for (;;) {
    const Element a = ctx.random_base(rng), b = ctx.random_base(rng);
    const Element c = ctx.random_base(rng), d = ctx.random_base(rng);
    if ((ctx.mul(a, d) + ctx.mul(b, c)).is_zero()) continue;
    const long long frob = semilinear ? static_cast<long long>(rng() % ctx.degree()) : 0;
    return SemiLinearMap::make(ctx, a, b, c, d, frob);
  }
}

std::string format_map(const TowerContext& ctx, const SemiLinearMap& map) {
  return ctx.to_hex(map.a()) + "," + ctx.to_hex(map.b()) + "," + ctx.to_hex(map.c()) + "," + ctx.to_hex(map.d()) +
         ";" + std::to_string(map.frob());
}

SemiLinearMap parse_map(const TowerContext& ctx, std::string_view text) {
  const auto fail = [&]() -> SemiLinearMap {
    throw DomainError("bad map '" + std::string(text) + "' (expected a,b,c,d;i)");
  };
  std::string_view entries = text;
  long long frob = 0;
  if (const auto semi = text.find(';'); semi != std::string_view::npos) {
    entries = text.substr(0, semi);
    const std::string_view exp = text.substr(semi + 1);
    const auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), frob);
    if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size()) return fail();
  }
  std::array<Element, 4> m{};
  std::size_t pos = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t end = k < 3 ? entries.find(',', pos) : entries.size();
    if (end == std::string_view::npos) return fail();
    m[k] = ctx.from_hex(entries.substr(pos, end - pos));
    pos = end + 1;
  }
  if (pos != entries.size() + 1) return fail();
  return SemiLinearMap::make(ctx, m[0], m[1], m[2], m[3], frob);
}

std::vector<Element> OrbitEnumerator::suborbit_representatives(Element alpha) const {
  const auto shifts = ctx_->base_elements();
  std::vector<Element> reps;
  reps.reserve(shifts.size() + 1);
  reps.push_back(alpha);
  for (Element gamma : shifts) reps.push_back(ctx_->inv(alpha + gamma));
  return reps;
}

Element OrbitEnumerator::affine_min(Element beta) const {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for_each_affine(beta, [&](Element x) { best = std::min(best, x.bits()); });
  return Element(best);
}

Element OrbitEnumerator::pgl_min(Element alpha) const {
  Element best(std::numeric_limits<std::uint64_t>::max());
  for (Element rep : suborbit_representatives(alpha)) best = std::min(best, affine_min(rep));
  return best;
}

std::vector<Element> affine_suborbit(const TowerContext& ctx, Element beta) {
  require_sextic(ctx, beta, "affine_suborbit");
  OrbitEnumerator orbits(ctx);
  std::vector<Element> out;
  out.reserve(orbits.affine_size());
  orbits.for_each_affine(beta, [&](Element x) { out.push_back(x); });
  return out;
}

std::vector<Element> pgl_orbit(const TowerContext& ctx, Element alpha) {
  require_sextic(ctx, alpha, "pgl_orbit");
  OrbitEnumerator orbits(ctx);
  std::vector<Element> out;
  out.reserve(orbits.pgl_size());
  orbits.for_each_pgl(alpha, [&](Element x) { out.push_back(x); });
  return out;
}

Element canonical_orbit_rep(const TowerContext& ctx, Element alpha, Group group) {
  require_sextic(ctx, alpha, "canonical_orbit_rep");
  OrbitEnumerator orbits(ctx);
  if (group == Group::kPGL) return orbits.pgl_min(alpha);
  const unsigned s = galois_stabilizer_index(ctx, alpha);
  Element best = orbits.pgl_min(alpha);
  for (unsigned i = 1; i < s; ++i) best = std::min(best, orbits.pgl_min(ctx.frobenius(alpha, i)));
  return best;
}

std::vector<Element> galois_orbit_of_pgl_orbit(const TowerContext& ctx, Element alpha) {
  require_sextic(ctx, alpha, "galois_orbit_of_pgl_orbit");
  OrbitEnumerator orbits(ctx);
  std::vector<Element> reps;
  for (unsigned i = 0; i < ctx.degree(); ++i) reps.push_back(orbits.pgl_min(ctx.frobenius(alpha, i)));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

bool same_pgl_orbit(const TowerContext& ctx, Element alpha, Element beta) {
  require_sextic(ctx, alpha, "same_pgl_orbit");
  require_sextic(ctx, beta, "same_pgl_orbit");
  const Element ab = ctx.mul(alpha, beta);
  std::vector<std::uint64_t> vectors;
  for (Element w : ctx.base_basis()) {
    vectors.push_back(ctx.mul(w, ab).bits());
    vectors.push_back(ctx.mul(w, beta).bits());
    vectors.push_back(ctx.mul(w, alpha).bits());
    vectors.push_back(w.bits());
  }
  return gf2::rank_of(vectors) < vectors.size();
}

unsigned galois_stabilizer_index(const TowerContext& ctx, Element alpha) {
  for (unsigned s = 1; s < ctx.degree(); ++s) {
    if (ctx.degree() % s != 0) continue;
    if (same_pgl_orbit(ctx, alpha, ctx.frobenius(alpha, s))) return s;
  }
  return ctx.degree();
}

}  // namespace goppa::mobius
