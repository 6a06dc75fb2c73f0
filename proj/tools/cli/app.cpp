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

#include "app.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "goppa/codes.hpp"
#include "goppa/counting.hpp"
#include "goppa/errors.hpp"
#include "goppa/gf2poly.hpp"
#include "goppa/mobius.hpp"
#include "goppa/tower.hpp"

namespace goppa::cli {

namespace {

using counting::BigInt;
using gf2::Element;
using gf2::TowerContext;
using Json = nlohmann::ordered_json;

class Stopwatch {
 public:
  [[nodiscard]] double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool in_hypothesis(unsigned n) { return n > 3 && counting::is_prime(n); }

// Exact integers stay JSON numbers while they fit in 64 bits.
Json big_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::uint64_t parse_modulus(const std::string& text) {
  std::string_view s = text;
  if (s.starts_with("0x") || s.starts_with("0X")) {
    s.remove_prefix(2);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw DomainError("bad hex modulus '" + text + "'");
    return v;
  }
  return gf2::parse_exponents(s);
}

TowerContext make_tower(const RunConfig& c) {
  TowerContext::Options options;
  if (c.modulus_base) options.modulus_base = parse_modulus(*c.modulus_base);
  if (c.modulus_big) options.modulus_big = parse_modulus(*c.modulus_big);
  return TowerContext::make(c.n, options);
}

struct ResolvedAlpha {
  Element value;
  bool random = false;
};

ResolvedAlpha resolve_alpha(const TowerContext& ctx, const std::string& text, std::mt19937_64& rng) {
  if (text == "random") return {ctx.random_sextic(rng), true};
  const Element alpha = ctx.from_hex(text);
  if (!ctx.in_sextic_set(alpha))
    throw DomainError("alpha = " + ctx.to_hex(alpha) + " does not have degree 6 over F_{2^" + std::to_string(ctx.n()) +
                      "}");
  return {alpha, false};
}

void put_alpha(Json& j, const TowerContext& ctx, const ResolvedAlpha& alpha, const RunConfig& c) {
  j["alpha_hex"] = ctx.to_hex(alpha.value);
  j["alpha_source"] = alpha.random ? "random" : "given";
  if (alpha.random) j["seed"] = c.seed;
}

std::string alpha_text(const TowerContext& ctx, const ResolvedAlpha& alpha, const RunConfig& c) {
  std::string out = "alpha=" + ctx.to_hex(alpha.value);
  if (alpha.random) out += " (random, seed " + std::to_string(c.seed) + ")";
  return out;
}

Json enumerator_json(const std::vector<std::uint64_t>& counts) {
  Json out = Json::array();
  for (std::uint64_t v : counts) out.push_back(v);
  return out;
}

std::string enumerator_text(const std::vector<std::uint64_t>& counts) {
  std::string out;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(w) + ":" + std::to_string(counts[w]);
  }
  return out;
}

Json root_count_json(const counting::RootCount& r) {
  return Json{{"total", r.total}, {"in_s", r.in_s}, {"in_f2n", r.in_f2n}, {"in_f3n", r.in_f3n}, {"in_base", r.in_base}};
}

std::string root_count_text(const counting::RootCount& r) {
  return "total=" + std::to_string(r.total) + " in_s=" + std::to_string(r.in_s) + " in_f2n=" +
         std::to_string(r.in_f2n) + " in_f3n=" + std::to_string(r.in_f3n) + " in_base=" + std::to_string(r.in_base);
}

// ---------------------------------------------------------------- bound

CommandResult cmd_bound(const RunConfig& c) {
  std::vector<unsigned> ns;
  if (c.table) {
    if (c.table_from > c.table_to) throw DomainError("--from must not exceed --to");
    for (unsigned n = c.table_from; n <= c.table_to; ++n)
      if (in_hypothesis(n)) ns.push_back(n);
    if (ns.empty()) throw DomainError("no prime n > 3 in the requested range");
  } else {
    ns.push_back(c.n);
  }
  CommandResult result;
  Json rows = Json::array();
  bool all_match = true;
  std::ostringstream text;
  for (unsigned n : ns) {
    const counting::BurnsideBound b = counting::burnside_bound(n);
    const bool match = b.weighted_sum == b.closed_numerator;
    all_match = all_match && match;
    Json terms = Json::array();
    for (const auto& t : b.terms)
      terms.push_back(Json{{"d", t.d}, {"order", t.order}, {"fixed", big_json(t.fixed)}, {"phi", t.phi}});
    rows.push_back(Json{{"n", n},
                        {"group_order", 6 * n},
                        {"terms", std::move(terms)},
                        {"weighted_sum", big_json(b.weighted_sum)},
                        {"closed_form_numerator", big_json(b.closed_numerator)},
                        {"bound", big_json(b.bound)},
                        {"match", match}});
    if (c.table) {
      // One row per prime: fixed PGL-orbit counts for each nontrivial order, then the bound.
      text << "n=" << n;
      for (const auto& t : b.terms)
        if (t.order != 1 && t.fixed != 0) text << " F(order " << t.order << ")=" << t.fixed;
      text << " bound=" << b.bound << (match ? "" : " MISMATCH") << "\n";
      continue;
    }
    text << "n=" << n << " bound=" << b.bound << "\n";
    text << "  closed form: (2^" << 3 * n << " + 2^" << 2 * n << " + 3*2^" << n << " + 12*" << n << " - 18) / "
         << 6 * n << " = " << b.closed_numerator << " / " << 6 * n << "\n";
    for (const auto& t : b.terms)
      text << "  d=" << t.d << " order=" << t.order << " fixed=" << t.fixed << " phi=" << t.phi << "\n";
    text << "  weighted sum=" << b.weighted_sum << (match ? " (matches closed form)" : " (MISMATCH)") << "\n";
  }
  result.report = Json{{"command", "bound"}, {"rows", std::move(rows)}, {"match", all_match}};
  result.text = text.str();
  result.exit_code = all_match ? kExitOk : kExitMismatch;
  return result;
}

// ---------------------------------------------------------------- census

CommandResult cmd_census(const RunConfig& c) {
  const TowerContext ctx = make_tower(c);
  const counting::OrbitCensus census = counting::global_orbit_census(ctx, c.workers);
  const bool hyp = in_hypothesis(c.n);
  std::uint64_t size_sum = 0;
  Json sizes = Json::array();
  for (const auto& [size, count] : census.size_histogram) {
    size_sum += size * count;
    sizes.push_back(Json{{"size", size}, {"count", count}});
  }
  Json stabilizers = Json::array();
  for (const auto& [index, count] : census.stabilizer_histogram)
    stabilizers.push_back(Json{{"index", index}, {"count", count}});

  CommandResult result;
  Json& j = result.report;
  j["command"] = "census";
  j["n"] = c.n;
  j["in_hypothesis"] = hyp;
  j["orbit_count"] = census.orbit_count;
  j["pgl_orbit_count"] = census.pgl_orbit_count;
  j["sextic_set_size"] = big_json(counting::sextic_set_size(c.n));
  j["pgl_orbit_size"] = big_json(counting::pgl_orbit_size(c.n));
  j["size_sum"] = size_sum;
  j["size_histogram"] = std::move(sizes);
  j["stabilizer_histogram"] = std::move(stabilizers);
  j["elements_visited"] = census.elements_visited;
  std::ostringstream text;
  text << "n=" << c.n << " orbit_count=" << census.orbit_count << " pgl_orbits=" << census.pgl_orbit_count
       << " workers=" << census.workers << "\n";
  for (const auto& [size, count] : census.size_histogram) text << "  size " << size << ": " << count << "\n";
  if (hyp) {
    const BigInt bound = counting::burnside_bound(c.n).bound;
    const bool match = BigInt(census.orbit_count) == bound;
    j["bound"] = big_json(bound);
    j["match"] = match;
    text << "  bound=" << bound << (match ? " match" : " MISMATCH") << "\n";
    result.exit_code = match ? kExitOk : kExitMismatch;
  } else {
    j["bound"] = nullptr;
    j["match"] = nullptr;
    text << "  n=" << c.n << " is outside the bound's hypothesis (n prime > 3); no bound to compare\n";
  }
  j["elapsed_ms"] = census.elapsed_ms;
  result.text = text.str();
  return result;
}

// ---------------------------------------------------------------- fixed

CommandResult cmd_fixed(const RunConfig& c) {
  const Stopwatch clock;
  const bool hyp = in_hypothesis(c.n);
  if (c.closed_form_only && !hyp) throw DomainError("closed forms need n prime > 3 (got " + std::to_string(c.n) + ")");
  std::vector<unsigned long long> ds = c.d;
  if (ds.empty())
    for (unsigned d : counting::divisors(6 * c.n)) ds.push_back(d);

  std::vector<std::optional<std::uint64_t>> oracle(ds.size());
  if (!c.closed_form_only) {
    const TowerContext ctx = make_tower(c);
    const auto sweep = counting::fixed_point_sweep(ctx, ds, c.workers);
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (const auto& r : sweep)
        if (r.d == ds[i]) oracle[i] = r.count;
  }

  CommandResult result;
  Json rows = Json::array();
  bool any_mismatch = false;
  std::ostringstream text;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const unsigned order = counting::element_order(c.n, ds[i]);
    Json row{{"d", ds[i]}, {"order", order}, {"closed_form", nullptr}, {"oracle", nullptr}, {"match", nullptr}};
    text << "d=" << ds[i] << " order=" << order;
    std::optional<BigInt> closed;
    if (hyp) {
      closed = counting::closed_form_fixed_points_at(c.n, ds[i]);
      row["closed_form"] = big_json(*closed);
      text << " closed_form=" << *closed;
    }
    if (oracle[i]) {
      row["oracle"] = *oracle[i];
      text << " oracle=" << *oracle[i];
    }
    if (closed && oracle[i]) {
      const bool match = *closed == BigInt(*oracle[i]);
      row["match"] = match;
      any_mismatch = any_mismatch || !match;
      text << (match ? " match" : " MISMATCH");
    }
    text << "\n";
    rows.push_back(std::move(row));
  }
  result.report = Json{{"command", "fixed"},
                       {"n", c.n},
                       {"in_hypothesis", hyp},
                       {"results", std::move(rows)},
                       {"match", !any_mismatch},
                       {"elapsed_ms", clock.ms()}};
  result.text = text.str();
  result.exit_code = any_mismatch ? kExitMismatch : kExitOk;
  return result;
}

// ---------------------------------------------------------------- roots

CommandResult cmd_roots(const RunConfig& c) {
  const Stopwatch clock;
  const TowerContext ctx = make_tower(c);
  std::vector<counting::Equation> equations;
  for (const std::string& name : c.which) {
    if (name == "all") {
      equations = counting::all_equations();
      break;
    }
    const auto eq = counting::parse_equation(name);
    if (!eq) throw DomainError("unknown equation '" + name + "'");
    equations.push_back(*eq);
  }
  if (equations.empty()) equations = counting::all_equations();

  CommandResult result;
  Json rows = Json::array();
  bool any_mismatch = false;
  std::ostringstream text;
  for (counting::Equation eq : equations) {
    std::vector<counting::RootCount> routes;
    Json row{{"equation", std::string(counting::equation_name(eq))}};
    text << counting::equation_name(eq) << "\n";
    auto put = [&](const char* key, const std::optional<counting::RootCount>& r) {
      row[key] = r ? root_count_json(*r) : Json(nullptr);
      if (!r) return;
      routes.push_back(*r);
      text << "  " << key << ": " << root_count_text(*r) << "\n";
    };
    put("sweep", c.no_sweep ? std::nullopt : std::optional(counting::root_count_sweep(ctx, eq, c.workers)));
    put("linearized", counting::root_count_linearized(ctx, eq));
    put("expected", in_hypothesis(c.n) ? std::optional(counting::expected_root_count(c.n, eq)) : std::nullopt);
    if (routes.size() >= 2) {
      const bool match = std::all_of(routes.begin(), routes.end(), [&](const auto& r) { return r == routes[0]; });
      row["match"] = match;
      any_mismatch = any_mismatch || !match;
      text << (match ? "  match\n" : "  MISMATCH\n");
    } else {
      row["match"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  result.report = Json{{"command", "roots"},
                       {"n", c.n},
                       {"in_hypothesis", in_hypothesis(c.n)},
                       {"results", std::move(rows)},
                       {"match", !any_mismatch},
                       {"elapsed_ms", clock.ms()}};
  result.text = text.str();
  result.exit_code = any_mismatch ? kExitMismatch : kExitOk;
  return result;
}

// ---------------------------------------------------------------- code

CommandResult cmd_code(const RunConfig& c) {
  const TowerContext ctx = make_tower(c);
  std::mt19937_64 rng(c.seed);
  const ResolvedAlpha alpha = resolve_alpha(ctx, c.alpha, rng);
  const codes::GoppaInstance inst = codes::make_goppa_instance(ctx, alpha.value);
  const codes::BinaryCode code =
      c.extended ? codes::extended_goppa_code(ctx, alpha.value) : codes::goppa_code(ctx, alpha.value);

  CommandResult result;
  Json& j = result.report;
  j["command"] = "code";
  j["n"] = c.n;
  put_alpha(j, ctx, alpha, c);
  Json g = Json::array();
  for (int k = 0; k <= inst.g.degree(); ++k) g.push_back(ctx.to_hex(inst.g.coeff(static_cast<std::size_t>(k))));
  j["g_coeffs"] = std::move(g);
  j["extended"] = c.extended;
  j["length"] = code.length();
  j["dimension"] = code.dimension();
  Json gen = Json::array(), par = Json::array();
  for (const auto& row : code.generator().row_vectors()) gen.push_back(row.to_hex());
  for (const auto& row : code.parity().row_vectors()) par.push_back(row.to_hex());
  j["generator_rows"] = std::move(gen);
  j["parity_rows"] = std::move(par);

  std::ostringstream text;
  text << alpha_text(ctx, alpha, c) << "\n";
  text << (c.extended ? "extended " : "") << "code: length=" << code.length() << " dimension=" << code.dimension()
       << "\n";
  try {
    const std::vector<std::uint64_t> counts = codes::weight_enumerator(code);
    bool even = true;
    std::optional<std::size_t> min_weight;
    for (std::size_t w = 1; w < counts.size(); ++w) {
      if (counts[w] == 0) continue;
      even = even && w % 2 == 0;
      if (!min_weight) min_weight = w;
    }
    j["weight_enumerator"] = enumerator_json(counts);
    j["min_weight"] = min_weight ? Json(*min_weight) : Json(nullptr);
    j["even_weight"] = even;
    text << "weights: " << enumerator_text(counts) << "\n";
  } catch (const InfeasibleError&) {
    j["weight_enumerator"] = nullptr;
    j["min_weight"] = nullptr;
    j["even_weight"] = nullptr;
    text << "weights: dimension too large to enumerate\n";
  }
  result.text = text.str();
  return result;
}

// ---------------------------------------------------------------- equiv

CommandResult cmd_equiv(const RunConfig& c) {
  const TowerContext ctx = make_tower(c);
  std::mt19937_64 rng(c.seed);
  const ResolvedAlpha alpha = resolve_alpha(ctx, c.alpha, rng);
  const bool random_map = c.map == "random";
  const mobius::SemiLinearMap map = random_map ? mobius::random_map(ctx, rng) : mobius::parse_map(ctx, c.map);
  const codes::EquivalenceReport rep = codes::check_extended_equivalence(ctx, alpha.value, map);

  CommandResult result;
  Json& j = result.report;
  j["command"] = "equiv";
  j["n"] = c.n;
  put_alpha(j, ctx, alpha, c);
  j["map"] = mobius::format_map(ctx, map);
  j["map_source"] = random_map ? "random" : "given";
  j["beta_hex"] = ctx.to_hex(rep.beta);
  Json perm = Json::array();
  for (std::uint32_t p : rep.permutation) perm.push_back(p);
  j["permutation"] = std::move(perm);
  j["cycles"] = codes::format_cycles(rep.permutation);
  j["verified"] = rep.verified;
  j["weight_enumerator_alpha"] = enumerator_json(rep.enumerator_alpha);
  j["weight_enumerator_beta"] = enumerator_json(rep.enumerator_beta);

  std::ostringstream text;
  text << alpha_text(ctx, alpha, c) << "\n";
  text << "map=" << mobius::format_map(ctx, map) << (random_map ? " (random)" : "") << "\n";
  text << "beta=" << ctx.to_hex(rep.beta) << "\n";
  text << "permutation=" << codes::format_cycles(rep.permutation) << "\n";
  text << "weights: " << enumerator_text(rep.enumerator_alpha) << "\n";
  text << "verified=" << (rep.verified ? "true" : "false") << "\n";
  result.text = text.str();
  result.exit_code = rep.verified ? kExitOk : kExitMismatch;
  return result;
}

// ---------------------------------------------------------------- tower

CommandResult cmd_tower(const RunConfig& c) {
  const TowerContext ctx = make_tower(c);
  CommandResult result;
  Json basis = Json::array();
  for (Element e : ctx.base_basis()) basis.push_back(ctx.to_hex(e));
  result.report = Json{{"command", "tower"},
                       {"n", c.n},
                       {"degree", ctx.degree()},
                       {"modulus_base", gf2::format_exponents(ctx.modulus_base())},
                       {"modulus_big", gf2::format_exponents(ctx.modulus_big())},
                       {"base_basis", std::move(basis)}};
  std::ostringstream text;
  text << "F_{2^" << ctx.n() << "} modulus exponents: " << gf2::format_exponents(ctx.modulus_base()) << "\n";
  text << "F_{2^" << ctx.degree() << "} modulus exponents: " << gf2::format_exponents(ctx.modulus_big()) << "\n";
  text << "image of the base polynomial basis:";
  for (Element e : ctx.base_basis()) text << " " << ctx.to_hex(e);
  text << "\n";
  result.text = text.str();
  return result;
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("GOPPA_ORBITS_THREADS")) {
    const std::string_view s(env);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CommandResult execute(const RunConfig& config) {
  if (config.workers == 0) throw DomainError("--workers must be positive");
  if (config.command == "bound") return cmd_bound(config);
  if (config.command == "census") return cmd_census(config);
  if (config.command == "fixed") return cmd_fixed(config);
  if (config.command == "roots") return cmd_roots(config);
  if (config.command == "code") return cmd_code(config);
  if (config.command == "equiv") return cmd_equiv(config);
  if (config.command == "tower") return cmd_tower(config);
  throw DomainError("unknown command '" + config.command + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.workers = default_workers();

  CLI::App app{"Orbit counting and equivalence checks for sextic Goppa codes over F_{2^n}."};
  app.name("goppa-orbits");
  app.require_subcommand(1, 1);
  app.add_option("--n", config.n, "Base field degree n (F_{2^n} inside F_{2^{6n}})");
  app.add_flag("--json", config.json, "Print the JSON report instead of text");
  app.add_option("--workers", config.workers, "Worker threads (default $GOPPA_ORBITS_THREADS or all cores)");
  app.add_option("--seed", config.seed, "Seed for random alpha and map choices");
  app.add_option("--modulus-base", config.modulus_base, "Irreducible modulus for F_{2^n}: exponents '5,2,0' or hex");
  app.add_option("--modulus-big", config.modulus_big, "Irreducible modulus for F_{2^{6n}}: exponents or hex");

  auto* bound = app.add_subcommand("bound", "Evaluate the orbit-count bound and its fixed-point decomposition");
  bound->add_flag("--table", config.table, "Tabulate every prime n > 3 in [--from, --to]");
  bound->add_option("--from", config.table_from, "Table start")->capture_default_str();
  bound->add_option("--to", config.table_to, "Table end")->capture_default_str();
  auto* census = app.add_subcommand("census", "Count PGammaL-orbits on S by a full sweep and compare with the bound");
  auto* fixed = app.add_subcommand("fixed", "Count PGL-orbits fixed by sigma^d: sweep oracle vs closed form");
  fixed->add_option("--d", config.d, "Exponent(s) d; default every divisor of 6n");
  fixed->add_flag("--closed-form-only", config.closed_form_only, "Skip the sweep");
  auto* roots = app.add_subcommand("roots", "Count roots of the auxiliary equations by sweep and linear algebra");
  roots->add_option("--which", config.which, "eq_3n, eq_2n_affine, eq_41, eq_deg8, fixed_field_64 or all");
  roots->add_flag("--no-sweep", config.no_sweep, "Skip the exhaustive sweep");
  auto* code = app.add_subcommand("code", "Build C(alpha) or its extension and export it");
  code->add_option("--alpha", config.alpha, "alpha in hex, or 'random'")->capture_default_str();
  code->add_flag("--extended", config.extended, "Build the extended code on the projective line");
  auto* equiv = app.add_subcommand("equiv", "Check that a semi-linear map carries C-bar(alpha) onto C-bar(beta)");
  equiv->add_option("--alpha", config.alpha, "alpha in hex, or 'random'")->capture_default_str();
  equiv->add_option("--map", config.map, "'a,b,c,d;i' in hex with Frobenius exponent i, or 'random'")
      ->capture_default_str();
  auto* tower = app.add_subcommand("tower", "Print the field tower in use");
  for (CLI::App* sub : {bound, census, fixed, roots, code, equiv, tower}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();

  try {
    const CommandResult result = execute(config);
    if (config.json)
      out << result.report.dump(2) << "\n";
    else
      out << result.text;
    return result.exit_code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ConsistencyError& e) {
    err << "inconsistent: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace goppa::cli
