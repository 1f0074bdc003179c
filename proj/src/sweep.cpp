#include "plancherel/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "plancherel/characters.hpp"
#include "plancherel/errors.hpp"
#include "plancherel/harmonic.hpp"
#include "plancherel/induction.hpp"
#include "plancherel/probe.hpp"
#include "plancherel/report.hpp"

namespace plancherel {

namespace {

constexpr std::size_t kMaxSweepOrder = 200;

nlohmann::json subgroup_json(const Subgroup& u) {
  return {{"order", u.order()}, {"index", u.index()}, {"members", u.members()}};
}

nlohmann::json psi_json(const LinearCharacter& psi, std::size_t index) {
  return {{"index", index}, {"modulus", psi.modulus()}, {"phases", psi.phases()}};
}

struct Configuration {
  SubgroupPtr subgroup;
  LinearCharacter psi;
  std::size_t psi_index;
};

std::vector<Configuration> select_configurations(const RunConfig& config, const GroupPtr& group) {
  std::vector<SubgroupPtr> subgroups;
  if (config.subgroup_generators) {
    subgroups.push_back(subgroup_closure(group, *config.subgroup_generators));
  } else {
    subgroups = enumerate_subgroups(group);
  }
  std::vector<Configuration> out;
  for (const auto& u : subgroups) {
    auto chars = linear_characters(u);
    for (std::size_t k = 0; k < chars.size(); ++k) {
      if (config.psi_index && *config.psi_index != k) continue;
      out.push_back({u, std::move(chars[k]), k});
    }
  }
  if (out.empty()) {
    throw Error(ErrorKind::IndexOutOfRange, "no (subgroup, character) pair matches the selection");
  }
  return out;
}

bool wants(RunMode mode, RunMode what) { return mode == RunMode::Sweep || mode == what; }

}  // namespace

std::string_view to_string(RunMode mode) noexcept {
  switch (mode) {
    case RunMode::CharacterTable: return "chartable";
    case RunMode::PlancherelCheck: return "plancherel-check";
    case RunMode::WhittakerCheck: return "whittaker-check";
    case RunMode::ConjectureProbe: return "conjecture-probe";
    case RunMode::Sweep: return "sweep";
  }
  return "sweep";
}

void RunConfig::validate() const {
  if (group_spec.empty()) throw Error(ErrorKind::InvalidConfig, "group spec is empty");
  if (!(tol >= 1e-12 && tol <= 1e-6)) throw Error(ErrorKind::InvalidConfig, "tol must lie in [1e-12, 1e-6]");
  if (num_test_functions < 1 || num_test_functions > 10000) {
    throw Error(ErrorKind::InvalidConfig, "count must lie in [1, 10000]");
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = std::string(to_string(mode));
  j["group_spec"] = group_spec;
  j["subgroup_selector"] = subgroup_generators ? nlohmann::json(*subgroup_generators) : nlohmann::json("all");
  j["character_selector"] = psi_index ? nlohmann::json(*psi_index) : nlohmann::json("all");
  j["num_test_functions"] = num_test_functions;
  j["seed"] = seed;
  j["tol"] = json_number(tol);
  j["output_format"] = output_format == OutputFormat::Json ? "json" : "csv";
  return j;
}

std::string SweepReport::digest() const { return digest_hex(digest_section.dump()); }

nlohmann::json SweepReport::to_json() const {
  nlohmann::json j = digest_section;
  j["digest"] = digest();
  j["wall_time"] = json_number(wall_time);
  return j;
}

std::string SweepReport::render() const {
  if (config.output_format == OutputFormat::Json) return to_json().dump(2) + "\n";
  if (config.mode == RunMode::CharacterTable && complete) return table_csv;
  std::string out = "kind,subgroup_order,subgroup_members,psi_index,functions,max_abs_error,pass,identity_pass\n";
  auto members = [](const nlohmann::json& m) {
    std::string s;
    for (const auto& x : m) s += (s.empty() ? "" : " ") + std::to_string(x.get<std::size_t>());
    return s;
  };
  for (const auto& c : digest_section["checks"]) {
    const std::string kind = c["kind"];
    if (kind == "plancherel_inversion") {
      out += kind + ",,,," + std::to_string(c["functions"].get<std::size_t>()) + "," +
             c["max_abs_error"].dump() + "," + (c["pass"].get<bool>() ? "true" : "false") + ",\n";
    } else {
      out += kind + "," + std::to_string(c["subgroup"]["order"].get<std::size_t>()) + "," +
             members(c["subgroup"]["members"]) + "," + std::to_string(c["psi"]["index"].get<std::size_t>()) +
             "," + std::to_string(c["functions"].get<std::size_t>()) + "," + c["max_abs_error"].dump() + "," +
             (c["pass"].get<bool>() ? "true" : "false") + "," +
             (c["identity"]["pass"].get<bool>() ? "true" : "false") + "\n";
    }
  }
  out += "verdict," + digest_section["verdict"].get<std::string>() + "\n";
  return out;
}

SweepReport run_sweep(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.config = config;

  nlohmann::json& body = report.digest_section;
  body["config"] = config.to_json();
  body["group"] = nullptr;
  body["table"] = nullptr;
  body["checks"] = nlohmann::json::array();
  body["probes"] = nlohmann::json::array();

  bool pass = true;
  double max_abs_error = 0.0;
  try {
    const GroupPtr group = parse_group_spec(config.group_spec);
    if (group->order() > kMaxSweepOrder) {
      throw Error(ErrorKind::OrderTooLarge, "runs are limited to groups of order " + std::to_string(kMaxSweepOrder));
    }
    const CharacterTable table = character_table(group, config.seed, config.tol);
    const auto ortho = verify_orthogonality(table, config.tol);
    pass = pass && ortho.pass;

    auto class_sizes = nlohmann::json::array();
    for (std::size_t c = 0; c < group->num_classes(); ++c) class_sizes.push_back(group->class_size(c));
    const std::string csv = table_csv(table);
    body["group"] = {{"label", group->label()},
                     {"order", group->order()},
                     {"num_classes", group->num_classes()},
                     {"class_sizes", class_sizes},
                     {"table_digest", digest_hex(csv)}};
    body["table"] = table_json(table);
    body["table"]["orthogonality"] = {{"max_row_deviation", json_number(ortho.max_row_deviation)},
                                      {"max_column_deviation", json_number(ortho.max_column_deviation)},
                                      {"degrees_square_sum_ok", ortho.degrees_square_sum_ok},
                                      {"pass", ortho.pass}};
    report.table_csv = csv;

    std::vector<GroupFunction> functions;
    if (config.mode != RunMode::CharacterTable) {
      functions = random_test_functions(group, config.num_test_functions, config.seed);
    }

    if (wants(config.mode, RunMode::PlancherelCheck)) {
      double worst = 0.0, worst_scaled = 0.0;
      bool ok = true;
      std::vector<GroupFunction> fs{GroupFunction::delta(group, group->identity())};
      fs.insert(fs.end(), functions.begin(), functions.end());
      for (const auto& f : fs) {
        const double err = std::abs(f(group->identity()) - plancherel_invert_at_identity(table, f));
        const double scale = 1.0 + f.l1_norm();
        worst = std::max(worst, err);
        worst_scaled = std::max(worst_scaled, err / scale);
        ok = ok && err <= kCheckRelTol * scale;
      }
      body["checks"].push_back({{"kind", "plancherel_inversion"},
                                {"functions", fs.size()},
                                {"max_abs_error", json_number(worst)},
                                {"max_scaled_error", json_number(worst_scaled)},
                                {"pass", ok}});
      pass = pass && ok;
      max_abs_error = std::max(max_abs_error, worst);
    }

    const bool whittaker = wants(config.mode, RunMode::WhittakerCheck);
    const bool probe = wants(config.mode, RunMode::ConjectureProbe);
    if (whittaker || probe) {
      for (const auto& cfg : select_configurations(config, group)) {
        ++report.configurations;
        const WhittakerChecker checker(table, cfg.subgroup, cfg.psi);
        const auto identity = kernel_multiplicity_identity_check(table, *cfg.subgroup, cfg.psi, kIdentityTol);
        auto kernel_values = nlohmann::json::array();
        for (const auto& k : identity.kernel_at_identity) kernel_values.push_back(format_complex(k));
        const nlohmann::json identity_json = {{"pass", identity.pass},
                                              {"max_residual", json_number(identity.max_residual)},
                                              {"max_dual_residual", json_number(identity.max_dual_residual)},
                                              {"kernel_at_identity", kernel_values},
                                              {"multiplicities", identity.multiplicities}};
        pass = pass && identity.pass;

        if (whittaker) {
          double worst = 0.0, worst_scaled = 0.0;
          bool ok = true;
          for (const auto& f : functions) {
            const auto rec = checker.check(f);
            worst = std::max(worst, rec.abs_error);
            worst_scaled = std::max(worst_scaled, rec.abs_error / (1.0 + rec.f_l1));
            ok = ok && rec.passes(kCheckRelTol);
          }
          // δ_e anchors the record with exactly reproducible per-π values.
          const auto anchor = checker.check(GroupFunction::delta(group, group->identity()));
          ok = ok && anchor.passes(kCheckRelTol);
          worst = std::max(worst, anchor.abs_error);
          auto per_pi = nlohmann::json::array();
          for (const auto& t : anchor.per_pi) {
            per_pi.push_back({{"mu", json_number(t.mu)},
                              {"theta", format_complex(t.theta)},
                              {"phi", format_complex(t.phi)},
                              {"multiplicity", t.multiplicity}});
          }
          body["checks"].push_back({{"kind", "generalized_plancherel"},
                                    {"subgroup", subgroup_json(*cfg.subgroup)},
                                    {"psi", psi_json(cfg.psi, cfg.psi_index)},
                                    {"functions", functions.size() + 1},
                                    {"max_abs_error", json_number(worst)},
                                    {"max_scaled_error", json_number(worst_scaled)},
                                    {"delta_identity", {{"lhs", format_complex(anchor.lhs)},
                                                        {"rhs", format_complex(anchor.rhs)},
                                                        {"per_pi", per_pi}}},
                                    {"identity", identity_json},
                                    {"pass", ok}});
          pass = pass && ok;
          max_abs_error = std::max(max_abs_error, worst);
        }

        if (probe) {
          const auto pr = conjecture_probe(table, cfg.subgroup, cfg.psi, config.num_test_functions,
                                           config.seed, kIdentityTol);
          auto rows = nlohmann::json::array();
          for (const auto& row : pr.per_pi) {
            double lo = INFINITY, hi = 0.0;
            std::size_t flagged = 0;
            for (const auto& r : row.ratio_samples) {
              if (!r) {
                ++flagged;
                continue;
              }
              lo = std::min(lo, std::abs(*r));
              hi = std::max(hi, std::abs(*r));
            }
            rows.push_back({{"degree", row.degree},
                            {"multiplicity", row.multiplicity},
                            {"kernel_at_identity", format_complex(row.kernel_at_identity)},
                            {"scaled_multiplicity", json_number(row.scaled_multiplicity)},
                            {"ratio_at_delta", row.ratio_samples.front()
                                                   ? nlohmann::json(format_complex(*row.ratio_samples.front()))
                                                   : nlohmann::json(nullptr)},
                            {"ratio_abs_min", json_number(lo)},
                            {"ratio_abs_max", json_number(hi)},
                            {"ratio_constant", row.ratio_constant},
                            {"flagged_samples", flagged},
                            {"degenerate", row.degenerate}});
          }
          body["probes"].push_back({{"subgroup", subgroup_json(*cfg.subgroup)},
                                    {"psi", psi_json(cfg.psi, cfg.psi_index)},
                                    {"samples", config.num_test_functions + 1},
                                    {"per_pi", rows},
                                    {"identity", identity_json}});
        }
      }
    }
    report.complete = true;
  } catch (const Error& e) {
    report.complete = false;
    report.error = e.what();
    body["error"] = e.what();
    pass = false;
  }

  report.pass = pass && report.complete;
  report.max_abs_error = max_abs_error;
  body["verdict"] = !report.complete ? "incomplete" : (report.pass ? "pass" : "fail");
  body["max_abs_error"] = json_number(max_abs_error);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace plancherel
