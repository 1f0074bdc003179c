// plancherel: character tables, Plancherel inversion and generalized
// (Whittaker) Plancherel checks for finite groups.
//
//   plancherel chartable <spec>
//   plancherel plancherel-check <spec>
//   plancherel whittaker-check <spec> [--subgroup g1,g2,...] [--psi-index k]
//   plancherel conjecture-probe <spec> [--subgroup ...] [--psi-index k]
//   plancherel sweep <spec>
//
// Common flags: --seed, --tol, --format json|csv, --out, --count, --isa.
// Exit status: 0 verdict pass, 1 verdict fail/incomplete, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "plancherel/errors.hpp"
#include "plancherel/kernels.hpp"
#include "plancherel/sweep.hpp"

namespace {

struct Options {
  std::string spec;
  std::vector<plancherel::Element> subgroup;
  std::optional<std::size_t> psi_index;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string format = "json";
  std::string out;
  std::string isa;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Options& opts,
                      bool selectors) {
  auto* cmd = app.add_subcommand(name, help);
  cmd->add_option("spec", opts.spec, "group spec, e.g. symmetric:3 or product:cyclic:2*cyclic:4")->required();
  cmd->add_option("--seed", opts.seed, "random seed");
  cmd->add_option("--tol", opts.tol, "character-table tolerance in [1e-12, 1e-6]");
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out, "output path (default stdout)");
  cmd->add_option("--count", opts.count, "number of random test functions");
  cmd->add_option("--isa", opts.isa, "kernel set")->check(CLI::IsMember({"scalar", "avx2"}));
  if (selectors) {
    cmd->add_option("--subgroup", opts.subgroup, "generators of U as element indices")->delimiter(',');
    cmd->add_option("--psi-index", opts.psi_index, "index of the linear character of U");
  }
  return cmd;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group Plancherel and Whittaker-Plancherel verification"};
  app.require_subcommand(1);
  Options opts;

  const std::map<std::string, plancherel::RunMode> modes{
      {"chartable", plancherel::RunMode::CharacterTable},
      {"plancherel-check", plancherel::RunMode::PlancherelCheck},
      {"whittaker-check", plancherel::RunMode::WhittakerCheck},
      {"conjecture-probe", plancherel::RunMode::ConjectureProbe},
      {"sweep", plancherel::RunMode::Sweep},
  };
  add_command(app, "chartable", "print the character table", opts, false);
  add_command(app, "plancherel-check", "check pointwise Plancherel inversion", opts, false);
  add_command(app, "whittaker-check", "check the generalized Plancherel formula for each (U, psi)", opts, true);
  add_command(app, "conjecture-probe", "report Phi/Theta ratios against multiplicities", opts, true);
  add_command(app, "sweep", "run every check", opts, true);

  CLI11_PARSE(app, argc, argv);

  if (!opts.isa.empty()) {
    const auto isa = opts.isa == "avx2" ? plancherel::kernels::Isa::Avx2 : plancherel::kernels::Isa::Scalar;
    if (!plancherel::kernels::set_isa(isa)) {
      std::cerr << "error: kernel set '" << opts.isa << "' is not supported on this machine\n";
      return 2;
    }
  }

  plancherel::RunConfig config;
  config.mode = modes.at(app.get_subcommands().front()->get_name());
  config.group_spec = opts.spec;
  if (!opts.subgroup.empty()) config.subgroup_generators = opts.subgroup;
  config.psi_index = opts.psi_index;
  config.num_test_functions = opts.count;
  config.seed = opts.seed;
  config.tol = opts.tol;
  config.output_format = opts.format == "csv" ? plancherel::OutputFormat::Csv : plancherel::OutputFormat::Json;
  config.output_path = opts.out;

  plancherel::SweepReport report;
  try {
    report = plancherel::run_sweep(config);
  } catch (const plancherel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = report.render();
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << opts.out << "\n";
      return 2;
    }
    file << text;
  }
  if (!report.complete) std::cerr << "error: " << report.error << "\n";
  return report.pass ? 0 : 1;
}
