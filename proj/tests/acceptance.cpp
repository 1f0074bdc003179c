// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "plancherel/characters.hpp"
#include "plancherel/group_spec.hpp"
#include "plancherel/harmonic.hpp"
#include "plancherel/induction.hpp"
#include "plancherel/probe.hpp"
#include "plancherel/report.hpp"
#include "plancherel/sweep.hpp"

using namespace plancherel;

namespace {

constexpr double kOrthoTol = 1e-9;
constexpr double kInversionTol = 1e-8;
constexpr double kTheoremTol = 1e-8;
constexpr double kIdentityResidualTol = 1e-8;
constexpr double kFubiniTol = 1e-10;
constexpr double kRatioTol = 1e-9;
constexpr std::size_t kFunctions = 100;
constexpr std::size_t kSweepMaxOrder = 24;
constexpr std::uint64_t kSeed = 20240611;

std::vector<std::string> corpus() {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 1; n <= 8; ++n) out.push_back("dihedral:" + std::to_string(n));
  for (const char* s : {"symmetric:3", "symmetric:4", "quaternion", "heisenberg:3", "product:cyclic:2*cyclic:4"}) {
    out.emplace_back(s);
  }
  return out;
}

struct Loaded {
  std::string spec;
  GroupPtr group;
  CharacterTable table;
};

std::vector<Loaded> load(std::size_t max_order) {
  std::vector<Loaded> out;
  for (const auto& spec : corpus()) {
    auto g = make_named_group(spec);
    if (g->order() > max_order) continue;
    out.push_back({spec, g, character_table(g)});
  }
  return out;
}

// Every (U, ψ) pair of a group.
void for_each_configuration(const GroupPtr& g,
                            const std::function<void(const SubgroupPtr&, const LinearCharacter&)>& fn) {
  for (const auto& u : enumerate_subgroups(g)) {
    for (const auto& psi : linear_characters(u)) fn(u, psi);
  }
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome character_tables() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  double worst = 0.0;
  for (const auto& spec : corpus()) {
    const auto g = make_named_group(spec);
    const auto t = character_table(g);
    const auto rep = verify_orthogonality(t, kOrthoTol);
    std::size_t sum = 0;
    for (auto d : t.degrees()) sum += std::size_t{d} * d;
    worst = std::max(worst, rep.max_deviation());
    if (!rep.pass || rep.max_deviation() > kOrthoTol || sum != g->order()) {
      o.pass = false;
      o.detail += spec + " ";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 5.0) o.pass = false;
  o.detail += fmt("max deviation %.3g, %.2f s (limit 5 s)", worst, secs);
  return o;
}

Outcome inversion() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  double worst = 0.0;
  std::size_t n = 0;
  for (const auto& l : load(kMaxGroupOrder)) {
    for (const auto& f : random_test_functions(l.group, kFunctions, kSeed)) {
      const double err = std::abs(f(l.group->identity()) - plancherel_invert_at_identity(l.table, f));
      worst = std::max(worst, err / (1.0 + f.l1_norm()));
      if (err > kInversionTol * (1.0 + f.l1_norm())) o.pass = false;
      ++n;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) o.pass = false;
  o.detail = fmt("%zu functions, max scaled error %.3g, %.2f s (limit 10 s)", n, worst, secs);
  return o;
}

Outcome theorem_sweep() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  double worst = 0.0;
  std::size_t configs = 0, failures = 0;
  for (const auto& l : load(kSweepMaxOrder)) {
    const auto fs = random_test_functions(l.group, kFunctions, kSeed);
    for_each_configuration(l.group, [&](const SubgroupPtr& u, const LinearCharacter& psi) {
      ++configs;
      const WhittakerChecker checker(l.table, u, psi);
      for (const auto& f : fs) {
        const auto rec = checker.check(f);
        worst = std::max(worst, rec.abs_error / (1.0 + rec.f_l1));
        if (!rec.passes(kTheoremTol)) ++failures;
      }
    });
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = failures == 0 && secs < 60.0;
  o.detail = fmt("%zu (U,psi) configurations x %zu functions, %zu failures, max scaled error %.3g, %.2f s "
                 "(limit 60 s)",
                 configs, kFunctions, failures, worst, secs);
  return o;
}

// |U|·mult(π) read off the trace character of the explicit monomial matrices.
std::vector<double> scaled_multiplicities_from_matrices(const CharacterTable& t, const Subgroup& u,
                                                        const LinearCharacter& psi) {
  const auto mults = decompose_class_function(t, induced_rep_matrices(u, psi).character());
  std::vector<double> out;
  for (auto m : mults) out.push_back(static_cast<double>(u.order() * m));
  return out;
}

Outcome kernel_identity() {
  Outcome o;
  std::size_t configs = 0, literal_failures = 0, dual_failures = 0;
  double worst = 0.0, worst_dual = 0.0;
  std::string first_failure;
  for (const auto& l : load(kSweepMaxOrder)) {
    for_each_configuration(l.group, [&](const SubgroupPtr& u, const LinearCharacter& psi) {
      ++configs;
      const auto chk = kernel_multiplicity_identity_check(l.table, *u, psi, kIdentityResidualTol);
      worst = std::max(worst, chk.max_residual);
      worst_dual = std::max(worst_dual, chk.max_dual_residual);
      if (!chk.pass) {
        if (literal_failures++ == 0) {
          first_failure = fmt("first: %s |U|=%zu residual %.3g", l.spec.c_str(), u->order(), chk.max_residual);
        }
      }
      if (chk.max_dual_residual > kIdentityResidualTol) ++dual_failures;
    });
  }
  o.pass = literal_failures == 0;

  // Spot values, re-derived from the induced matrices.
  auto spot = [&](const std::string& spec, std::vector<Element> members, std::size_t psi_index,
                  std::vector<std::pair<std::size_t, double>> want) {
    const auto g = make_named_group(spec);
    const auto t = character_table(g);
    const auto u = std::make_shared<const Subgroup>(g, std::move(members));
    const auto psi = linear_characters(u).at(psi_index);
    const auto chk = kernel_multiplicity_identity_check(t, *u, psi, kIdentityResidualTol);
    const auto from_matrices = scaled_multiplicities_from_matrices(t, *u, psi);
    for (auto [pi, v] : want) {
      if (std::abs(chk.kernel_at_identity[pi] - v) > kIdentityResidualTol ||
          std::abs(from_matrices[pi] - v) > kIdentityResidualTol) {
        o.pass = false;
        o.detail += "spot " + spec + " mismatch; ";
      }
    }
  };
  spot("symmetric:3", {0, 2}, 1, {{0, 0.0}, {1, 2.0}, {2, 2.0}});
  spot("quaternion", {0, 1}, 1, {{4, 4.0}});

  o.detail += fmt("%zu configurations, %zu violate the literal identity (max residual %.3g; %s); "
                  "against the contragredient: %zu violations, max residual %.3g",
                  configs, literal_failures, worst, literal_failures ? first_failure.c_str() : "none",
                  dual_failures, worst_dual);
  return o;
}

Outcome frobenius_triple() {
  Outcome o;
  std::size_t configs = 0, disagreements = 0, dim_failures = 0;
  for (const auto& l : load(kSweepMaxOrder)) {
    for_each_configuration(l.group, [&](const SubgroupPtr& u, const LinearCharacter& psi) {
      ++configs;
      const auto ind = induced_character(*u, psi, l.table);
      const auto from_traces = decompose_class_function(l.table, induced_rep_matrices(*u, psi).character());
      std::size_t dim = 0;
      for (std::size_t pi = 0; pi < l.table.num_irreps(); ++pi) {
        const auto restricted = multiplicity_frobenius(l.table, pi, *u, psi);
        if (restricted != ind.multiplicities[pi] || restricted != from_traces[pi]) ++disagreements;
        dim += std::size_t{restricted} * l.table.degrees()[pi];
      }
      if (dim != u->index()) ++dim_failures;
    });
  }
  o.pass = disagreements == 0 && dim_failures == 0;
  o.detail = fmt("%zu configurations, %zu multiplicity disagreements, %zu dimension mismatches", configs,
                 disagreements, dim_failures);
  return o;
}

// K_1 = {e}, then each further member joined with its inverse, ending at U.
std::vector<std::vector<Element>> growing_chain(const Subgroup& u) {
  const auto& g = *u.parent();
  std::vector<std::vector<Element>> chain{{g.identity()}};
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  for (Element x : u.members()) {
    if (in[x]) continue;
    auto next = chain.back();
    next.push_back(x);
    in[x] = true;
    if (!in[g.inv(x)]) {
      next.push_back(g.inv(x));
      in[g.inv(x)] = true;
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

Outcome derivation_oracles() {
  Outcome o;
  std::size_t configs = 0, fubini_failures = 0, truncation_failures = 0;
  double worst = 0.0;
  for (const auto& l : load(kSweepMaxOrder)) {
    const auto fs = random_test_functions(l.group, kFunctions, kSeed);
    for_each_configuration(l.group, [&](const SubgroupPtr& u, const LinearCharacter& psi) {
      ++configs;
      const auto chain = growing_chain(*u);
      for (std::size_t pi = 0; pi < l.table.num_irreps(); ++pi) {
        for (std::size_t i = 0; i < fs.size(); ++i) {
          const auto v = fubini_interchange_oracle(l.table, pi, *u, psi, fs[i], kSeed + i);
          const double d = v.max_disagreement();
          worst = std::max(worst, d);
          if (d > kFubiniTol) ++fubini_failures;
        }
        const auto steps = truncation_demo(*u, psi, l.table, pi, chain);
        if (steps.back().kernel.values != whittaker_kernel(l.table, pi, *u, psi).values) ++truncation_failures;
      }
    });
  }
  o.pass = fubini_failures == 0 && truncation_failures == 0;
  o.detail = fmt("%zu configurations, summation orders max disagreement %.3g (%zu over tolerance), "
                 "%zu final truncations not bit-identical",
                 configs, worst, fubini_failures, truncation_failures);
  return o;
}

Outcome probe_sanity() {
  Outcome o;
  std::size_t samples = 0, off = 0;
  for (const auto& l : load(kSweepMaxOrder)) {
    const auto e = subgroup_closure(l.group, std::vector<Element>{});
    const auto rep = conjecture_probe(l.table, e, linear_characters(e)[0], kFunctions, kSeed);
    for (const auto& row : rep.per_pi) {
      for (const auto& r : row.ratio_samples) {
        ++samples;
        if (!r || std::abs(*r - 1.0) > kRatioTol) ++off;
      }
    }
  }
  const auto g = make_named_group("symmetric:3");
  const auto t = character_table(g);
  const auto u = std::make_shared<const Subgroup>(g, std::vector<Element>{0, 2});
  const auto rep = conjecture_probe(t, u, linear_characters(u)[1], kFunctions, kSeed);
  const auto sign_ratio = rep.per_pi[1].ratio_samples[0];
  const auto standard_ratio = rep.per_pi[2].ratio_samples[0];
  const bool s3_ok = sign_ratio && standard_ratio && std::abs(*sign_ratio - 2.0) <= kRatioTol &&
                     std::abs(*standard_ratio - 1.0) <= kRatioTol;
  o.pass = off == 0 && s3_ok;
  o.detail = fmt("trivial U: %zu ratios, %zu off 1; S3/{e,t}/sign at delta_e: sign %s, standard %s", samples,
                 off, sign_ratio ? format_complex(*sign_ratio).c_str() : "none",
                 standard_ratio ? format_complex(*standard_ratio).c_str() : "none");
  return o;
}

Outcome determinism() {
  RunConfig cfg;
  cfg.mode = RunMode::Sweep;
  cfg.group_spec = "symmetric:4";
  cfg.seed = 7;
  const auto a = run_sweep(cfg);
  const auto b = run_sweep(cfg);
  Outcome o;
  o.pass = a.complete && a.digest_section.dump() == b.digest_section.dump() && a.digest() == b.digest();
  o.detail = fmt("digest %s vs %s", a.digest().c_str(), b.digest().c_str());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"character tables orthogonal on the corpus", character_tables},
      {"Plancherel inversion at the identity", inversion},
      {"generalized Plancherel formula, exhaustive sweep", theorem_sweep},
      {"kernel at identity equals |U| times multiplicity", kernel_identity},
      {"Frobenius multiplicities agree three ways", frobenius_triple},
      {"summation-order and truncation oracles", derivation_oracles},
      {"conjecture probe sanity", probe_sanity},
      {"deterministic sweep report", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
